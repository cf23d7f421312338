#include "pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace netperturb {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cell_tag(model_kind m, experiment_kind e) {
    return std::string(model_name(m)) + "_" + experiment_name(e);
}

[[noreturn]] void stage_failure(const std::string& stage, const std::string& where,
                                const std::exception& err) {
    throw numeric_error("stage " + stage + " failed at " + where + ": " + err.what());
}

class output_file {
  public:
    output_file(const fs::path& dir, const std::string& rel, std::vector<std::string>& files)
        : path_(dir / rel), out_(path_) {
        if (!out_) throw io_error("cannot open '" + path_.string() + "' for writing");
        files.push_back(rel);
    }

    std::ofstream& stream() { return out_; }

    void close() {
        out_.close();
        if (!out_) throw io_error("write to '" + path_.string() + "' failed");
    }

  private:
    fs::path path_;
    std::ofstream out_;
};

} // namespace

cell_result analyze_cell(const pipeline_config& cfg, signature_matrix sig) {
    cell_result cell;
    cell.model = sig.model;
    cell.experiment = sig.experiment;
    const std::string where_base = cell_tag(sig.model, sig.experiment);

    for (int mi = 0; mi < k_measurement_count; ++mi) {
        const auto m = static_cast<measurement_id>(mi);
        const std::string where = where_base + "/" + measurement_name(m);
        try {
            std::vector<double> mean = mean_trajectory(sig, m);
            cell.curves.push_back(normalize_curve(m, sig.grid, mean, cfg.baseline));
        } catch (const std::exception& e) {
            stage_failure("normalize", where, e);
        }
        try {
            cell.stats.push_back(compute_curve_stats(sig, m, cell.curves.back(), cfg.baseline));
            cell.labels.push_back(classify_abc(cell.curves.back(), cell.stats.back(),
                                               cfg.thresholds));
        } catch (const std::exception& e) {
            stage_failure("classify", where, e);
        }
    }

    try {
        if (cfg.raw_node_weight) {
            // Node weight from raw changes relative to the trajectory start.
            std::vector<double> weights;
            for (int mi = 0; mi < k_measurement_count; ++mi) {
                std::vector<double> mean = mean_trajectory(sig, static_cast<measurement_id>(mi));
                double area = 0.0;
                for (double v : mean) area += std::abs(v - mean.front());
                weights.push_back(area);
            }
            cell.net = build_similarity_network(cell.curves, cell.labels, cfg.similarity, &weights);
        } else {
            cell.net = build_similarity_network(cell.curves, cell.labels, cfg.similarity);
        }
    } catch (const std::exception& e) {
        stage_failure("similarity", where_base, e);
    }
    try {
        cell.tree = agglomerate(cell.net.weights, cfg.linkage);
    } catch (const std::exception& e) {
        stage_failure("cluster", where_base, e);
    }

    cell.sig = std::move(sig);
    return cell;
}

pipeline_result run_pipeline(const pipeline_config& cfg, const std::string& out_dir) {
    pipeline_result result;
    result.hash = config_hash(cfg);

    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory '" + out_dir + "'");

    const std::string csv_preamble =
        "# netperturb config_hash=" + result.hash + " master_seed=" + std::to_string(cfg.seed) +
        "\n";

    // Run and analyze every cell, experiment-major like the membership table.
    for (experiment_kind e : cfg.experiments) {
        for (model_kind m : cfg.models) {
            signature_matrix sig;
            try {
                sig = run_experiment(cfg.cell_config(m, e));
            } catch (const std::exception& err) {
                stage_failure("experiment", cell_tag(m, e), err);
            }
            result.cells.push_back(analyze_cell(cfg, std::move(sig)));
        }
    }

    // raw.csv: long format, one row per cell of every signature matrix.
    {
        output_file raw(dir, "raw.csv", result.files);
        raw.stream() << csv_preamble
                     << "experiment,model,measurement,grid_value,realization,value,flags\n";
        for (const cell_result& cell : result.cells) {
            const auto& sig = cell.sig;
            for (int mi = 0; mi < k_measurement_count; ++mi)
                for (int g = 0; g < sig.grid_size(); ++g)
                    for (int q = 0; q < sig.realization_count; ++q) {
                        const auto m = static_cast<measurement_id>(mi);
                        raw.stream()
                            << experiment_name(sig.experiment) << ',' << model_name(sig.model)
                            << ',' << measurement_name(m) << ','
                            << fmt(sig.grid[static_cast<std::size_t>(g)]) << ',' << q << ','
                            << fmt(sig.value(m, g, q)) << ',' << degeneracy_name(sig.flag(m, g, q))
                            << '\n';
                    }
        }
        raw.close();
    }

    // curves.csv: the normalized change signatures.
    {
        output_file curves(dir, "curves.csv", result.files);
        curves.stream() << csv_preamble
                        << "model,experiment,measurement,grid_value,c_value,degenerate\n";
        for (const cell_result& cell : result.cells)
            for (const change_curve& c : cell.curves)
                for (std::size_t i = 0; i < c.values.size(); ++i)
                    curves.stream() << model_name(cell.model) << ','
                                    << experiment_name(cell.experiment) << ','
                                    << measurement_name(c.measurement) << ',' << fmt(c.grid[i])
                                    << ',' << fmt(c.values[i]) << ','
                                    << (c.degenerate ? 1 : 0) << '\n';
        curves.close();
    }

    // stats.csv: one row per (model, experiment, measurement).
    {
        output_file stats(dir, "stats.csv", result.files);
        stats.stream() << csv_preamble
                       << "model,experiment,measurement,psi,psi_degenerate,pearson,"
                          "pearson_degenerate,magnitude,spearman,mu,sigma,label\n";
        for (const cell_result& cell : result.cells)
            for (int mi = 0; mi < k_measurement_count; ++mi) {
                const auto& st = cell.stats[static_cast<std::size_t>(mi)];
                const auto& c = cell.curves[static_cast<std::size_t>(mi)];
                stats.stream() << model_name(cell.model) << ',' << experiment_name(cell.experiment)
                               << ',' << measurement_name(c.measurement) << ',' << fmt(st.psi)
                               << ',' << (st.psi_degenerate ? 1 : 0) << ',' << fmt(st.pearson)
                               << ',' << (st.pearson_degenerate ? 1 : 0) << ','
                               << fmt(st.magnitude) << ',' << fmt(st.spearman) << ',' << fmt(c.mu)
                               << ',' << fmt(c.sigma) << ','
                               << group_label_char(cell.labels[static_cast<std::size_t>(mi)])
                               << '\n';
            }
        stats.close();
    }

    // Per-cell similarity network and dendrogram.
    std::vector<std::string> leaf_names;
    for (int mi = 0; mi < k_measurement_count; ++mi)
        leaf_names.push_back(measurement_name(static_cast<measurement_id>(mi)));
    for (const cell_result& cell : result.cells) {
        const std::string sub = cell_tag(cell.model, cell.experiment);
        fs::create_directories(dir / sub, ec);
        if (ec) throw io_error("cannot create output directory '" + (dir / sub).string() + "'");

        output_file net_json(dir, sub + "/simnet.json", result.files);
        net_json.stream() << similarity_network_to_json(cell.net, cfg.seed, result.hash);
        net_json.close();

        output_file net_dot(dir, sub + "/simnet.dot", result.files);
        net_dot.stream() << similarity_network_to_dot(cell.net);
        net_dot.close();

        output_file tree_nwk(dir, sub + "/dendrogram.nwk", result.files);
        tree_nwk.stream() << dendrogram_to_newick(cell.tree, leaf_names) << "\n";
        tree_nwk.close();

        output_file tree_json(dir, sub + "/dendrogram.json", result.files);
        tree_json.stream() << dendrogram_to_json(cell.tree, leaf_names, cfg.seed, result.hash);
        tree_json.close();
    }

    // membership.csv: only meaningful for the full 3x3 batch.
    if (result.cells.size() == 9) {
        cell_labels labels;
        for (const cell_result& cell : result.cells) {
            std::array<group_label, k_measurement_count> row{};
            for (int mi = 0; mi < k_measurement_count; ++mi)
                row[static_cast<std::size_t>(mi)] = cell.labels[static_cast<std::size_t>(mi)];
            labels[{cell.model, cell.experiment}] = row;
        }
        membership_table table = build_membership_table(labels);
        output_file membership(dir, "membership.csv", result.files);
        membership.stream() << csv_preamble << membership_table_to_csv(table);
        membership.close();
        result.membership_written = true;
    }

    // meta.json: enough to re-execute and audit the run.
    {
        nlohmann::ordered_json meta;
        meta["tool"] = "netperturb";
        meta["config_hash"] = result.hash;
        meta["master_seed"] = cfg.seed;
        meta["seed_rule"] =
            "cell master = derive_seed(seed, 100, model, experiment); size cell (si, q) uses "
            "derive_seed(cell, 1, si, q); initial networks derive_seed(cell, 2, q, 0); "
            "perturbation streams derive_seed(cell, 3, q, 0); derive_seed is a splitmix64 chain";

        nlohmann::ordered_json echo;
        std::istringstream canon(canonical_config(cfg));
        std::string line;
        while (std::getline(canon, line)) {
            auto eq = line.find(" = ");
            if (eq != std::string::npos) echo[line.substr(0, eq)] = line.substr(eq + 3);
        }
        meta["config"] = std::move(echo);

        auto cells = nlohmann::ordered_json::array();
        for (const cell_result& cell : result.cells) {
            nlohmann::ordered_json c;
            c["model"] = model_name(cell.model);
            c["experiment"] = experiment_name(cell.experiment);
            c["realizations"] = cell.sig.realization_count;
            c["grid"] = cell.sig.grid;
            if (cell.sig.truncated_at_step >= 0)
                c["truncated_at_step"] = cell.sig.truncated_at_step;
            if (cell.sig.realized_seeds.size() <= 2048)
                c["realized_seeds"] = cell.sig.realized_seeds;
            else
                c["realized_seed_count"] = cell.sig.realized_seeds.size();

            nlohmann::ordered_json degeneracies;
            for (int mi = 0; mi < k_measurement_count; ++mi) {
                const auto m = static_cast<measurement_id>(mi);
                std::array<int, 5> counts{};
                for (int g = 0; g < cell.sig.grid_size(); ++g)
                    for (int q = 0; q < cell.sig.realization_count; ++q)
                        ++counts[static_cast<std::size_t>(cell.sig.flag(m, g, q))];
                nlohmann::ordered_json per;
                for (int f = 1; f < 5; ++f)
                    if (counts[static_cast<std::size_t>(f)] > 0)
                        per[degeneracy_name(static_cast<degeneracy>(f))] =
                            counts[static_cast<std::size_t>(f)];
                if (!per.empty()) degeneracies[measurement_name(m)] = std::move(per);
            }
            c["degeneracy_counts"] = std::move(degeneracies);
            cells.push_back(std::move(c));
        }
        meta["cells"] = std::move(cells);
        meta["membership_written"] = result.membership_written;

        output_file meta_file(dir, "meta.json", result.files);
        meta["files"] = result.files; // includes meta.json itself, listed last
        meta_file.stream() << meta.dump(2) << "\n";
        meta_file.close();
    }

    return result;
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

// Opens one of our CSVs, skips '#' comment lines, checks the header.
std::vector<std::vector<std::string>> read_csv_rows(const std::string& path,
                                                    const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::string line;
    std::vector<std::vector<std::string>> rows;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!saw_header) {
            if (line != expected_header)
                throw io_error("'" + path + "': unexpected header '" + line + "'");
            saw_header = true;
            continue;
        }
        rows.push_back(split_csv_row(line));
    }
    if (!saw_header) throw io_error("'" + path + "': missing header row");
    return rows;
}

} // namespace

std::map<cell_key, std::vector<change_curve>> load_curves_csv(const std::string& path) {
    auto rows = read_csv_rows(path, "model,experiment,measurement,grid_value,c_value,degenerate");

    struct point {
        double grid;
        double value;
        bool degenerate;
    };
    std::map<cell_key, std::map<measurement_id, std::vector<point>>> raw;
    for (const auto& row : rows) {
        if (row.size() != 6) throw io_error("'" + path + "': malformed curves row");
        cell_key key{model_from_name(row[0]), experiment_from_name(row[1])};
        measurement_id m = measurement_from_name(row[2]);
        raw[key][m].push_back({std::stod(row[3]), std::stod(row[4]), row[5] == "1"});
    }

    std::map<cell_key, std::vector<change_curve>> out;
    for (auto& [key, by_measurement] : raw) {
        std::vector<change_curve>& curves = out[key];
        for (int mi = 0; mi < k_measurement_count; ++mi) {
            const auto m = static_cast<measurement_id>(mi);
            auto it = by_measurement.find(m);
            if (it == by_measurement.end())
                throw io_error("'" + path + "': cell " + cell_tag(key.first, key.second) +
                               " is missing measurement " + measurement_name(m));
            change_curve c;
            c.measurement = m;
            for (const point& p : it->second) {
                c.grid.push_back(p.grid);
                c.values.push_back(p.value);
                c.degenerate = c.degenerate || p.degenerate;
            }
            curves.push_back(std::move(c));
        }
    }
    return out;
}

cell_labels load_stats_labels_csv(const std::string& path) {
    auto rows = read_csv_rows(path,
                              "model,experiment,measurement,psi,psi_degenerate,pearson,"
                              "pearson_degenerate,magnitude,spearman,mu,sigma,label");
    cell_labels out;
    for (const auto& row : rows) {
        if (row.size() != 12 || row[11].size() != 1)
            throw io_error("'" + path + "': malformed stats row");
        cell_key key{model_from_name(row[0]), experiment_from_name(row[1])};
        measurement_id m = measurement_from_name(row[2]);
        auto [it, inserted] = out.try_emplace(key);
        (void)inserted;
        it->second[static_cast<std::size_t>(m)] = group_label_from_char(row[11][0]);
    }
    return out;
}

similarity_network load_simnet_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("'" + path + "': " + e.what());
    }

    similarity_network net;
    try {
        net.params.delta = doc.at("params").at("delta").get<double>();
        net.params.jaccard_exponent = doc.at("params").at("jaccard_exponent").get<double>();
        net.params.interiority_exponent = doc.at("params").at("interiority_exponent").get<double>();
        const auto& nodes = doc.at("nodes");
        const std::size_t n = nodes.size();
        net.weights.assign(n, std::vector<double>(n, 1.0));
        for (const auto& node : nodes) {
            net.nodes.push_back(measurement_from_name(node.at("measurement").get<std::string>()));
            net.node_weights.push_back(node.at("weight").get<double>());
            if (node.contains("label")) {
                net.labels.push_back(
                    group_label_from_char(node.at("label").get<std::string>().at(0)));
            } else {
                net.labels.push_back(group_label::c);
                net.labels_attached = false;
            }
        }
        for (const auto& edge : doc.at("edges")) {
            auto i = edge.at("source").get<std::size_t>();
            auto j = edge.at("target").get<std::size_t>();
            double w = edge.at("weight").get<double>();
            if (i >= n || j >= n) throw io_error("'" + path + "': edge endpoint out of range");
            net.weights[i][j] = w;
            net.weights[j][i] = w;
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error("'" + path + "': " + e.what());
    }
    return net;
}

} // namespace netperturb
