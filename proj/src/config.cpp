#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace netperturb {

int pipeline_config::resolved_q(experiment_kind e) const {
    if (q) return *q;
    if (profile == "desk") return 50;
    return e == experiment_kind::size ? 1000 : 50;
}

int pipeline_config::resolved_stride() const {
    if (stride) return *stride;
    return profile == "desk" ? 5 : 1;
}

experiment_config pipeline_config::cell_config(model_kind m, experiment_kind e) const {
    experiment_config cell;
    cell.experiment = e;
    cell.model = m;
    cell.sizes = sizes;
    cell.n = n;
    cell.avg_degree = avg_degree;
    cell.steps = steps;
    cell.realizations = resolved_q(e);
    cell.stride = resolved_stride();
    // Master seed folded with the cell coordinates so no two cells replay
    // the same stream.
    cell.master_seed = derive_seed(seed, 100, static_cast<std::uint64_t>(m),
                                   static_cast<std::uint64_t>(e));
    cell.epsilon = epsilon;
    cell.rewiring = rewiring;
    cell.rewiring_shared_initial = rewiring_shared_initial;
    cell.measure.mode = access;
    cell.workers = resolve_worker_count(workers);
    return cell;
}

namespace {

bool is_perfect_square(long long v) {
    if (v < 0) return false;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
    return r * r == v;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct parser {
    std::vector<std::string> issues;

    void fail(const std::string& msg) { issues.push_back(msg); }

    bool parse_int(const std::string& key, const std::string& value, long long& out) {
        try {
            std::size_t used = 0;
            out = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail(key + ": expected an integer, got '" + value + "'");
            return false;
        }
    }

    bool parse_u64(const std::string& key, const std::string& value, std::uint64_t& out) {
        try {
            std::size_t used = 0;
            out = std::stoull(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail(key + ": expected an unsigned integer, got '" + value + "'");
            return false;
        }
    }

    bool parse_real(const std::string& key, const std::string& value, double& out) {
        try {
            std::size_t used = 0;
            out = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail(key + ": expected a number, got '" + value + "'");
            return false;
        }
    }

    bool parse_bool(const std::string& key, const std::string& value, bool& out) {
        if (value == "true" || value == "1") {
            out = true;
            return true;
        }
        if (value == "false" || value == "0") {
            out = false;
            return true;
        }
        fail(key + ": expected true/false, got '" + value + "'");
        return false;
    }
};

} // namespace

pipeline_config parse_pipeline_config(const std::string& text) {
    pipeline_config cfg;
    parser p;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            p.fail("line " + std::to_string(line_no) + ": expected 'key = value'");
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);

        if (key == "models") {
            cfg.models.clear();
            for (const auto& item : split_list(value)) {
                if (item == "er")
                    cfg.models.push_back(model_kind::er);
                else if (item == "ba")
                    cfg.models.push_back(model_kind::ba);
                else if (item == "geo")
                    cfg.models.push_back(model_kind::geo);
                else
                    p.fail("models: unknown model '" + item + "' (er, ba, geo)");
            }
            if (cfg.models.empty()) p.fail("models: empty list");
        } else if (key == "experiments") {
            cfg.experiments.clear();
            for (const auto& item : split_list(value)) {
                if (item == "size")
                    cfg.experiments.push_back(experiment_kind::size);
                else if (item == "removal")
                    cfg.experiments.push_back(experiment_kind::removal);
                else if (item == "rewiring")
                    cfg.experiments.push_back(experiment_kind::rewiring);
                else
                    p.fail("experiments: unknown experiment '" + item +
                           "' (size, removal, rewiring)");
            }
            if (cfg.experiments.empty()) p.fail("experiments: empty list");
        } else if (key == "profile") {
            if (value == "paper" || value == "desk")
                cfg.profile = value;
            else
                p.fail("profile: expected paper or desk, got '" + value + "'");
        } else if (key == "sizes") {
            cfg.sizes.clear();
            for (const auto& item : split_list(value)) {
                long long v = 0;
                if (p.parse_int("sizes", item, v)) {
                    if (v < 1)
                        p.fail("sizes: entry " + item + " must be positive");
                    else
                        cfg.sizes.push_back(static_cast<int>(v));
                }
            }
            if (cfg.sizes.empty()) p.fail("sizes: empty list");
        } else if (key == "n") {
            long long v = 0;
            if (p.parse_int(key, value, v)) {
                if (v < 1)
                    p.fail("n: must be positive");
                else
                    cfg.n = static_cast<int>(v);
            }
        } else if (key == "avg_degree") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v < 0)
                    p.fail("avg_degree: must be nonnegative");
                else
                    cfg.avg_degree = v;
            }
        } else if (key == "steps") {
            long long v = 0;
            if (p.parse_int(key, value, v)) {
                if (v < 0)
                    p.fail("steps: must be >= 0");
                else
                    cfg.steps = static_cast<int>(v);
            }
        } else if (key == "q") {
            long long v = 0;
            if (p.parse_int(key, value, v)) {
                if (v < 1)
                    p.fail("q: must be >= 1");
                else
                    cfg.q = static_cast<int>(v);
            }
        } else if (key == "stride") {
            long long v = 0;
            if (p.parse_int(key, value, v)) {
                if (v < 1)
                    p.fail("stride: must be >= 1");
                else
                    cfg.stride = static_cast<int>(v);
            }
        } else if (key == "seed") {
            std::uint64_t v = 0;
            if (p.parse_u64(key, value, v)) cfg.seed = v;
        } else if (key == "epsilon") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v < 0)
                    p.fail("epsilon: must be nonnegative");
                else
                    cfg.epsilon = v;
            }
        } else if (key == "delta") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v < 0)
                    p.fail("delta: must be nonnegative");
                else
                    cfg.similarity.delta = v;
            }
        } else if (key == "jaccard_exponent") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v < 1)
                    p.fail("jaccard_exponent: must be >= 1");
                else
                    cfg.similarity.jaccard_exponent = v;
            }
        } else if (key == "interiority_exponent") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v < 1)
                    p.fail("interiority_exponent: must be >= 1");
                else
                    cfg.similarity.interiority_exponent = v;
            }
        } else if (key == "linkage") {
            try {
                cfg.linkage = linkage_from_name(value);
            } catch (const argument_error& e) {
                p.fail(std::string("linkage: ") + e.what());
            }
        } else if (key == "tau_mono") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v <= 0 || v > 1)
                    p.fail("tau_mono: must be in (0, 1]");
                else
                    cfg.thresholds.tau_mono = v;
            }
        } else if (key == "tau_mag_rel") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v < 0)
                    p.fail("tau_mag_rel: must be nonnegative");
                else
                    cfg.thresholds.tau_mag_rel = v;
            }
        } else if (key == "tau_disp") {
            double v = 0;
            if (p.parse_real(key, value, v)) {
                if (v <= 0)
                    p.fail("tau_disp: must be positive");
                else
                    cfg.thresholds.tau_disp = v;
            }
        } else if (key == "rewire_mode") {
            if (value == "uniform")
                cfg.rewiring = rewire_mode::uniform_pair;
            else if (value == "swap")
                cfg.rewiring = rewire_mode::degree_swap;
            else
                p.fail("rewire_mode: expected uniform or swap, got '" + value + "'");
        } else if (key == "rewiring_shared_initial") {
            bool v = false;
            if (p.parse_bool(key, value, v)) cfg.rewiring_shared_initial = v;
        } else if (key == "access_mode") {
            if (value == "full")
                cfg.access = access_mode::full_walk;
            else if (value == "ring")
                cfg.access = access_mode::ring_restricted;
            else
                p.fail("access_mode: expected full or ring, got '" + value + "'");
        } else if (key == "baseline") {
            if (value == "min")
                cfg.baseline = baseline_mode::curve_min;
            else if (value == "initial")
                cfg.baseline = baseline_mode::initial_value;
            else
                p.fail("baseline: expected min or initial, got '" + value + "'");
        } else if (key == "node_weight") {
            if (value == "normalized")
                cfg.raw_node_weight = false;
            else if (value == "raw")
                cfg.raw_node_weight = true;
            else
                p.fail("node_weight: expected normalized or raw, got '" + value + "'");
        } else if (key == "workers") {
            long long v = 0;
            if (p.parse_int(key, value, v)) {
                if (v < 0)
                    p.fail("workers: must be >= 0");
                else
                    cfg.workers = static_cast<int>(v);
            }
        } else {
            p.fail("unknown key '" + key + "'");
        }
    }

    // Duplicate list entries collapse to the first occurrence.
    auto dedupe = [](auto& xs) {
        auto seen_end = xs.begin();
        for (auto it = xs.begin(); it != xs.end(); ++it)
            if (std::find(xs.begin(), seen_end, *it) == seen_end) *seen_end++ = *it;
        xs.erase(seen_end, xs.end());
    };
    dedupe(cfg.models);
    dedupe(cfg.experiments);

    // Cross-field constraints.
    const bool has_geo = std::find(cfg.models.begin(), cfg.models.end(), model_kind::geo) !=
                         cfg.models.end();
    const bool has_ba =
        std::find(cfg.models.begin(), cfg.models.end(), model_kind::ba) != cfg.models.end();
    const bool has_size = std::find(cfg.experiments.begin(), cfg.experiments.end(),
                                    experiment_kind::size) != cfg.experiments.end();
    const bool has_fixed_n =
        std::any_of(cfg.experiments.begin(), cfg.experiments.end(),
                    [](experiment_kind e) { return e != experiment_kind::size; });

    std::vector<long long> node_counts;
    if (has_size)
        for (int s : cfg.sizes) node_counts.push_back(s);
    if (has_fixed_n) node_counts.push_back(cfg.n);

    if (has_geo) {
        for (long long s : node_counts)
            if (!is_perfect_square(s) || s < 4)
                p.fail("geo requires perfect-square sizes >= 4: " + std::to_string(s) +
                       " is not a perfect square");
    }
    for (long long s : node_counts) {
        const double max_edges = static_cast<double>(s) * (s - 1) / 2.0;
        if (std::llround(static_cast<double>(s) * cfg.avg_degree / 2.0) >
            static_cast<long long>(max_edges))
            p.fail("avg_degree " + std::to_string(cfg.avg_degree) + " implies more than " +
                   std::to_string(static_cast<long long>(max_edges)) + " edges on " +
                   std::to_string(s) + " nodes");
        if (has_ba) {
            long long m = std::llround(cfg.avg_degree / 2.0);
            if (std::max(m, 1LL) >= s)
                p.fail("ba requires round(avg_degree/2) < size " + std::to_string(s));
        }
    }

    if (!p.issues.empty()) throw config_error(std::move(p.issues));
    return cfg;
}

pipeline_config load_pipeline_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pipeline_config(buf.str());
}

namespace {

std::string render_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string canonical_config(const pipeline_config& cfg) {
    std::string out;
    out += "models = ";
    for (std::size_t i = 0; i < cfg.models.size(); ++i)
        out += std::string(i ? "," : "") + model_name(cfg.models[i]);
    out += "\nexperiments = ";
    for (std::size_t i = 0; i < cfg.experiments.size(); ++i)
        out += std::string(i ? "," : "") + experiment_name(cfg.experiments[i]);
    out += "\nprofile = " + cfg.profile;
    out += "\nsizes = ";
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
        out += std::string(i ? "," : "") + std::to_string(cfg.sizes[i]);
    out += "\nn = " + std::to_string(cfg.n);
    out += "\navg_degree = " + render_double(cfg.avg_degree);
    out += "\nsteps = " + std::to_string(cfg.steps);
    out += "\nq_size = " + std::to_string(cfg.resolved_q(experiment_kind::size));
    out += "\nq_removal = " + std::to_string(cfg.resolved_q(experiment_kind::removal));
    out += "\nq_rewiring = " + std::to_string(cfg.resolved_q(experiment_kind::rewiring));
    out += "\nstride = " + std::to_string(cfg.resolved_stride());
    out += "\nseed = " + std::to_string(cfg.seed);
    out += "\nepsilon = " + render_double(cfg.epsilon);
    out += "\ndelta = " + render_double(cfg.similarity.delta);
    out += "\njaccard_exponent = " + render_double(cfg.similarity.jaccard_exponent);
    out += "\ninteriority_exponent = " + render_double(cfg.similarity.interiority_exponent);
    out += std::string("\nlinkage = ") + linkage_name(cfg.linkage);
    out += "\ntau_mono = " + render_double(cfg.thresholds.tau_mono);
    out += "\ntau_mag_rel = " + render_double(cfg.thresholds.tau_mag_rel);
    out += std::string("\nrewire_mode = ") +
           (cfg.rewiring == rewire_mode::uniform_pair ? "uniform" : "swap");
    out += std::string("\nrewiring_shared_initial = ") +
           (cfg.rewiring_shared_initial ? "true" : "false");
    out += std::string("\naccess_mode = ") +
           (cfg.access == access_mode::full_walk ? "full" : "ring");
    out += std::string("\nbaseline = ") +
           (cfg.baseline == baseline_mode::curve_min ? "min" : "initial");
    out += std::string("\nnode_weight = ") + (cfg.raw_node_weight ? "raw" : "normalized");
    out += "\n";
    return out;
}

std::string config_hash(const pipeline_config& cfg) {
    const std::string canon = canonical_config(cfg);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace netperturb
