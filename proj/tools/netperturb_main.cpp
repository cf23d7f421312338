// Command-line frontend for the netperturb shared library. Everything goes
// through the public C API in netperturb.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "netperturb.h"

namespace {

// Exit codes: 0 success, 2 configuration/argument error, 3 runtime
// degeneracy, 4 I/O error.
int exit_code(np_status status) {
    switch (status) {
        case NP_OK: return 0;
        case NP_ERR_ARGUMENT:
        case NP_ERR_CONFIG: return 2;
        case NP_ERR_IO: return 4;
        default: return 3;
    }
}

int report(np_status status) {
    if (status != NP_OK) std::fprintf(stderr, "netperturb: %s\n", np_last_error());
    return exit_code(status);
}

struct gen_options {
    std::string model;
    std::string out;
    int n = 0;
    int side = 0;
    double k = 5.7;
    int m = 0;
    double epsilon = 0.001;
    std::uint64_t seed = 42;
};

int run_gen(const gen_options& opt) {
    np_graph* g = nullptr;
    np_status status = NP_OK;

    if (opt.model == "er") {
        if (opt.n < 1) {
            std::fprintf(stderr, "netperturb: gen er requires --n\n");
            return 2;
        }
        status = np_gen_er(opt.n, opt.k, opt.seed, &g);
    } else if (opt.model == "ba") {
        if (opt.n < 1) {
            std::fprintf(stderr, "netperturb: gen ba requires --n\n");
            return 2;
        }
        int m = opt.m > 0 ? opt.m : static_cast<int>(std::llround(opt.k / 2.0));
        status = np_gen_ba(opt.n, m < 1 ? 1 : m, opt.seed, &g);
    } else if (opt.model == "geo") {
        int side = opt.side;
        if (side == 0 && opt.n > 0) {
            side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(opt.n))));
            if (side * side != opt.n) {
                std::fprintf(stderr, "netperturb: geo --n %d is not a perfect square\n", opt.n);
                return 2;
            }
        }
        if (side < 2) {
            std::fprintf(stderr, "netperturb: gen geo requires --side >= 2 (or square --n)\n");
            return 2;
        }
        if (opt.epsilon == 0.0)
            std::fprintf(stderr,
                         "netperturb: warning: epsilon = 0 is a degenerate lattice; diagonal "
                         "ties are broken by a fixed rule\n");
        status = np_gen_geo(side, opt.epsilon, opt.seed, &g);
    } else {
        std::fprintf(stderr, "netperturb: unknown model '%s' (er, ba, geo)\n", opt.model.c_str());
        return 2;
    }

    if (status == NP_OK) {
        status = np_graph_save(g, opt.out.c_str());
        if (status == NP_OK)
            std::printf("%s: N=%d E=%lld\n", opt.out.c_str(), np_graph_node_count(g),
                        static_cast<long long>(np_graph_edge_count(g)));
    }
    np_graph_free(g);
    return report(status);
}

int run_measure(const std::string& in, const std::string& out) {
    np_graph* g = nullptr;
    np_status status = np_graph_load(in.c_str(), &g);
    if (status != NP_OK) return report(status);

    char* json = nullptr;
    status = np_measure_json(g, &json);
    np_graph_free(g);
    if (status != NP_OK) return report(status);

    if (out.empty()) {
        std::fputs(json, stdout);
    } else {
        std::FILE* f = std::fopen(out.c_str(), "w");
        if (!f) {
            std::fprintf(stderr, "netperturb: cannot open '%s' for writing\n", out.c_str());
            np_string_free(json);
            return 4;
        }
        std::fputs(json, f);
        std::fclose(f);
    }
    np_string_free(json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"netperturb: perturbation response of complex-network measurements"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(np_version()));

    gen_options gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a network and save it as an edge list");
    cmd_gen->add_option("--model", gen.model, "er, ba or geo")->required();
    cmd_gen->add_option("--n", gen.n, "node count (geo: must be a perfect square)");
    cmd_gen->add_option("--side", gen.side, "geo lattice side (alternative to --n)");
    cmd_gen->add_option("--k", gen.k, "target average degree (er; ba uses m = round(k/2))");
    cmd_gen->add_option("--m", gen.m, "ba: edges per added node (overrides --k)");
    cmd_gen->add_option("--epsilon", gen.epsilon, "geo: lattice jitter amplitude");
    cmd_gen->add_option("--seed", gen.seed, "random seed");
    cmd_gen->add_option("--out", gen.out, "output edge-list path")->required();

    std::string measure_in, measure_out;
    auto* cmd_measure = app.add_subcommand("measure", "compute the 14 measurements of a graph");
    cmd_measure->add_option("--in", measure_in, "input edge-list path")->required();
    cmd_measure->add_option("--out", measure_out, "output JSON path (default: stdout)");

    std::string run_config, run_out;
    bool validate_only = false;
    auto* cmd_run = app.add_subcommand("run", "run the configured perturbation experiments");
    cmd_run->add_option("--config", run_config, "flat key = value config file")->required();
    cmd_run->add_option("--out", run_out, "output directory");
    cmd_run->add_flag("--validate-only", validate_only, "check the config and exit");

    std::string sn_curves, sn_model, sn_experiment, sn_stats, sn_json, sn_dot;
    double sn_delta = 0.0, sn_d = 5.0, sn_e = 1.0;
    auto* cmd_simnet =
        app.add_subcommand("simnet", "coincidence similarity network from a curves.csv");
    cmd_simnet->add_option("--curves", sn_curves, "curves.csv from a pipeline run")->required();
    cmd_simnet->add_option("--model", sn_model, "er, ba or geo")->required();
    cmd_simnet->add_option("--experiment", sn_experiment, "size, removal or rewiring")->required();
    cmd_simnet->add_option("--stats", sn_stats, "stats.csv (attaches group labels)");
    cmd_simnet->add_option("--delta", sn_delta, "regularization constant");
    cmd_simnet->add_option("--jaccard-exponent", sn_d, "Jaccard strictness exponent");
    cmd_simnet->add_option("--interiority-exponent", sn_e, "interiority strictness exponent");
    cmd_simnet->add_option("--out-json", sn_json, "output JSON path");
    cmd_simnet->add_option("--out-dot", sn_dot, "output DOT path");

    std::string cl_simnet, cl_linkage = "average", cl_newick, cl_json;
    auto* cmd_cluster =
        app.add_subcommand("cluster", "agglomerative dendrogram from a simnet.json");
    cmd_cluster->add_option("--simnet", cl_simnet, "simnet.json path")->required();
    cmd_cluster->add_option("--linkage", cl_linkage, "average, single or complete");
    cmd_cluster->add_option("--out-newick", cl_newick, "output Newick path");
    cmd_cluster->add_option("--out-json", cl_json, "output merge-list JSON path");

    std::string rp_stats, rp_out;
    auto* cmd_report =
        app.add_subcommand("report", "14 x 9 membership table from a full-batch stats.csv");
    cmd_report->add_option("--stats", rp_stats, "stats.csv covering all nine cells")->required();
    cmd_report->add_option("--out", rp_out, "output membership.csv path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help/version exit cleanly; parse errors are config errors
    }

    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_measure->parsed()) return run_measure(measure_in, measure_out);

    if (cmd_run->parsed()) {
        if (validate_only) {
            char* errors = nullptr;
            np_status status = np_validate_config(run_config.c_str(), &errors);
            if (status == NP_OK) {
                std::printf("config ok\n");
                return 0;
            }
            if (errors) {
                std::fputs(errors, stderr);
                np_string_free(errors);
            }
            return report(status);
        }
        if (run_out.empty()) {
            std::fprintf(stderr, "netperturb: run requires --out\n");
            return 2;
        }
        np_status status = np_run_pipeline(run_config.c_str(), run_out.c_str());
        if (status == NP_OK) std::printf("results written to %s\n", run_out.c_str());
        return report(status);
    }

    if (cmd_simnet->parsed()) {
        np_status status = np_simnet_from_curves(
            sn_curves.c_str(), sn_model.c_str(), sn_experiment.c_str(),
            sn_stats.empty() ? nullptr : sn_stats.c_str(), sn_delta, sn_d, sn_e,
            sn_json.empty() ? nullptr : sn_json.c_str(), sn_dot.empty() ? nullptr : sn_dot.c_str());
        return report(status);
    }

    if (cmd_cluster->parsed()) {
        np_status status = np_cluster_from_simnet(cl_simnet.c_str(), cl_linkage.c_str(),
                                                  cl_newick.empty() ? nullptr : cl_newick.c_str(),
                                                  cl_json.empty() ? nullptr : cl_json.c_str());
        return report(status);
    }

    if (cmd_report->parsed()) {
        np_status status = np_membership_from_stats(rp_stats.c_str(), rp_out.c_str());
        return report(status);
    }

    return 2;
}
