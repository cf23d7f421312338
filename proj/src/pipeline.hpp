#ifndef NETPERTURB_PIPELINE_HPP
#define NETPERTURB_PIPELINE_HPP

#include <string>
#include <vector>

#include "coincidence.hpp"
#include "config.hpp"
#include "hcluster.hpp"

namespace netperturb {

// Everything derived from one (model, experiment) cell.
struct cell_result {
    model_kind model = model_kind::er;
    experiment_kind experiment = experiment_kind::size;
    signature_matrix sig;
    std::vector<change_curve> curves;       // one per measurement
    std::vector<curve_stats> stats;         // aligned with curves
    std::vector<group_label> labels;        // aligned with curves
    similarity_network net;
    dendrogram tree;
};

struct pipeline_result {
    std::string hash;
    std::vector<cell_result> cells;
    bool membership_written = false;
    std::vector<std::string> files; // relative paths written under out_dir
};

// Runs every configured (model, experiment) cell and writes raw.csv,
// curves.csv, stats.csv, per-cell simnet.{json,dot} and dendrogram.{nwk,json},
// membership.csv (when all nine cells are present), and meta.json into
// out_dir. Identical configs reproduce identical bytes.
pipeline_result run_pipeline(const pipeline_config& cfg, const std::string& out_dir);

// The per-cell analysis stages alone (normalize through classify), for
// callers that already have a signature matrix.
cell_result analyze_cell(const pipeline_config& cfg, signature_matrix sig);

// Readers for the pipeline's own output formats, used by the standalone
// simnet / cluster / report subcommands.
using cell_key = std::pair<model_kind, experiment_kind>;

std::map<cell_key, std::vector<change_curve>> load_curves_csv(const std::string& path);
cell_labels load_stats_labels_csv(const std::string& path);
similarity_network load_simnet_json(const std::string& path);

} // namespace netperturb

#endif
