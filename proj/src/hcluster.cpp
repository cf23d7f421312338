#include "hcluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "errors.hpp"
#include "json.hpp"

namespace netperturb {

const char* linkage_name(linkage_kind l) {
    switch (l) {
        case linkage_kind::average: return "average";
        case linkage_kind::single: return "single";
        case linkage_kind::complete: return "complete";
    }
    return "";
}

linkage_kind linkage_from_name(const std::string& name) {
    if (name == "average") return linkage_kind::average;
    if (name == "single") return linkage_kind::single;
    if (name == "complete") return linkage_kind::complete;
    throw argument_error("unknown linkage '" + name + "'");
}

dendrogram agglomerate(const std::vector<std::vector<double>>& similarity, linkage_kind linkage) {
    const int n = static_cast<int>(similarity.size());
    if (n < 1) throw argument_error("agglomerate: empty similarity matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(similarity[static_cast<std::size_t>(i)].size()) != n)
            throw argument_error("agglomerate: similarity matrix is not square");
        for (int j = 0; j < n; ++j) {
            double s = similarity[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!(s >= 0.0 && s <= 1.0))
                throw argument_error("agglomerate: similarity out of [0, 1]");
            if (s != similarity[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw argument_error("agglomerate: similarity matrix is not symmetric");
        }
        if (similarity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 1.0)
            throw argument_error("agglomerate: diagonal must be 1");
    }

    dendrogram d;
    d.leaf_count = n;
    d.merges.reserve(static_cast<std::size_t>(n) - 1);

    // Active clusters: id, members (for cross-pair aggregation).
    struct cluster {
        int id;
        std::vector<int> leaves;
    };
    std::vector<cluster> active;
    active.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) active.push_back({i, {i}});

    auto linkage_sim = [&](const cluster& a, const cluster& b) {
        double agg = linkage == linkage_kind::single ? -1.0
                     : linkage == linkage_kind::complete ? 2.0
                                                         : 0.0;
        for (int u : a.leaves)
            for (int v : b.leaves) {
                double s = similarity[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                switch (linkage) {
                    case linkage_kind::average: agg += s; break;
                    case linkage_kind::single: agg = std::max(agg, s); break;
                    case linkage_kind::complete: agg = std::min(agg, s); break;
                }
            }
        if (linkage == linkage_kind::average)
            agg /= static_cast<double>(a.leaves.size()) * static_cast<double>(b.leaves.size());
        return agg;
    };

    int next_id = n;
    while (active.size() > 1) {
        double best = -1.0;
        std::size_t bi = 0, bj = 1;
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                double s = linkage_sim(active[i], active[j]);
                auto key = std::minmax(active[i].id, active[j].id);
                auto best_key = std::minmax(active[bi].id, active[bj].id);
                if (s > best || (s == best && key < best_key)) {
                    best = s;
                    bi = i;
                    bj = j;
                }
            }

        cluster merged;
        merged.id = next_id++;
        auto lo = std::minmax(active[bi].id, active[bj].id);
        merged.leaves = active[bi].leaves;
        merged.leaves.insert(merged.leaves.end(), active[bj].leaves.begin(),
                             active[bj].leaves.end());
        std::sort(merged.leaves.begin(), merged.leaves.end());
        // Averaging cross-pair sums can round a hair above the previous
        // height; clamp so the recorded sequence is exactly non-increasing.
        double height = best;
        if (!d.merges.empty()) height = std::min(height, d.merges.back().height);
        d.merges.push_back({lo.first, lo.second, height});

        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bi));
        active.push_back(std::move(merged));
    }
    return d;
}

namespace {

std::string format_branch(double length) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", length);
    return buf;
}

// Height of a cluster in similarity terms: 1 for leaves, merge height
// otherwise.
double cluster_height(const dendrogram& d, int id) {
    if (id < d.leaf_count) return 1.0;
    return d.merges[static_cast<std::size_t>(id - d.leaf_count)].height;
}

std::string newick_node(const dendrogram& d, const std::vector<std::string>& names, int id) {
    if (id < d.leaf_count) return names[static_cast<std::size_t>(id)];
    const auto& m = d.merges[static_cast<std::size_t>(id - d.leaf_count)];
    // Branch length = child distance-height above this merge,
    // i.e. (1 - child_sim) measured from (1 - merge_sim).
    double left_len = cluster_height(d, m.left) - m.height;
    double right_len = cluster_height(d, m.right) - m.height;
    return "(" + newick_node(d, names, m.left) + ":" + format_branch(left_len) + "," +
           newick_node(d, names, m.right) + ":" + format_branch(right_len) + ")";
}

} // namespace

std::string dendrogram_to_newick(const dendrogram& d, const std::vector<std::string>& leaf_names) {
    if (static_cast<int>(leaf_names.size()) != d.leaf_count)
        throw argument_error("dendrogram_to_newick: leaf name count mismatch");
    if (d.leaf_count == 1) return leaf_names[0] + ";";
    return newick_node(d, leaf_names, d.leaf_count + static_cast<int>(d.merges.size()) - 1) + ";";
}

std::string dendrogram_to_json(const dendrogram& d, const std::vector<std::string>& leaf_names,
                               std::uint64_t master_seed, const std::string& config_hash) {
    nlohmann::ordered_json doc;
    doc["config_hash"] = config_hash;
    doc["master_seed"] = master_seed;
    doc["leaves"] = leaf_names;
    auto merges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < d.merges.size(); ++i) {
        merges.push_back({{"id", d.leaf_count + static_cast<int>(i)},
                          {"left", d.merges[i].left},
                          {"right", d.merges[i].right},
                          {"height", d.merges[i].height}});
    }
    doc["merges"] = std::move(merges);
    return doc.dump(2) + "\n";
}

std::vector<std::vector<int>> cut_after_merges(const dendrogram& d, int merge_count) {
    if (merge_count < 0 || merge_count > static_cast<int>(d.merges.size()))
        throw argument_error("cut_after_merges: merge count out of range");

    std::vector<std::vector<int>> members(
        static_cast<std::size_t>(d.leaf_count + merge_count));
    std::vector<char> active(members.size(), 0);
    for (int i = 0; i < d.leaf_count; ++i) {
        members[static_cast<std::size_t>(i)] = {i};
        active[static_cast<std::size_t>(i)] = 1;
    }
    for (int k = 0; k < merge_count; ++k) {
        const auto& m = d.merges[static_cast<std::size_t>(k)];
        int id = d.leaf_count + k;
        auto& dst = members[static_cast<std::size_t>(id)];
        dst = members[static_cast<std::size_t>(m.left)];
        dst.insert(dst.end(), members[static_cast<std::size_t>(m.right)].begin(),
                   members[static_cast<std::size_t>(m.right)].end());
        std::sort(dst.begin(), dst.end());
        active[static_cast<std::size_t>(m.left)] = 0;
        active[static_cast<std::size_t>(m.right)] = 0;
        active[static_cast<std::size_t>(id)] = 1;
    }

    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (active[i]) out.push_back(members[i]);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

} // namespace netperturb
