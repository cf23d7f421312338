#ifndef NETPERTURB_HCLUSTER_HPP
#define NETPERTURB_HCLUSTER_HPP

#include <string>
#include <vector>

namespace netperturb {

enum class linkage_kind : int { average = 0, single, complete };

const char* linkage_name(linkage_kind l);
linkage_kind linkage_from_name(const std::string& name);

// Binary merge tree over similarities. Leaves are 0..leaf_count-1; the i-th
// merge creates cluster id leaf_count + i. Heights are similarities and are
// non-increasing over the merge sequence.
struct dendrogram {
    struct merge {
        int left = 0;
        int right = 0;
        double height = 0.0;
    };
    int leaf_count = 0;
    std::vector<merge> merges;
};

// Agglomerates by repeatedly joining the pair of active clusters with the
// highest inter-cluster similarity (average of cross-pair similarities by
// default, max for single, min for complete). Ties go to the smallest
// (id, id) pair.
dendrogram agglomerate(const std::vector<std::vector<double>>& similarity,
                       linkage_kind linkage = linkage_kind::average);

// Newick text with distance branch lengths (1 - similarity heights).
std::string dendrogram_to_newick(const dendrogram& d, const std::vector<std::string>& leaf_names);

std::string dendrogram_to_json(const dendrogram& d, const std::vector<std::string>& leaf_names,
                               std::uint64_t master_seed, const std::string& config_hash);

// Active-cluster membership after the first `merge_count` merges, each
// cluster as a sorted leaf list, clusters ordered by smallest leaf.
std::vector<std::vector<int>> cut_after_merges(const dendrogram& d, int merge_count);

} // namespace netperturb

#endif
