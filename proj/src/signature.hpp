#ifndef NETPERTURB_SIGNATURE_HPP
#define NETPERTURB_SIGNATURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "measurements.hpp"

namespace netperturb {

enum class model_kind : int { er = 0, ba, geo };
enum class experiment_kind : int { size = 0, removal, rewiring };

const char* model_name(model_kind m);
const char* experiment_name(experiment_kind e);
model_kind model_from_name(const std::string& name);
experiment_kind experiment_from_name(const std::string& name);

// Raw (non-standardized) measurement values of one experiment run:
// 14 measurements x grid points x realizations, plus per-cell degeneracy
// flags. The grid holds the free variable (edge count for size/removal,
// rewiring count for rewiring).
struct signature_matrix {
    model_kind model = model_kind::er;
    experiment_kind experiment = experiment_kind::size;
    std::vector<double> grid;
    int realization_count = 0;
    std::vector<double> values;     // [measurement][grid][realization]
    std::vector<degeneracy> flags;  // same layout
    std::vector<std::uint64_t> realized_seeds;
    int truncated_at_step = -1;     // removal ran out of edges at this step, -1 if never

    int grid_size() const { return static_cast<int>(grid.size()); }

    std::size_t cell(int m, int g, int q) const {
        return (static_cast<std::size_t>(m) * grid.size() + static_cast<std::size_t>(g)) *
                   static_cast<std::size_t>(realization_count) +
               static_cast<std::size_t>(q);
    }
    double value(measurement_id m, int g, int q) const {
        return values[cell(static_cast<int>(m), g, q)];
    }
    degeneracy flag(measurement_id m, int g, int q) const {
        return flags[cell(static_cast<int>(m), g, q)];
    }
};

inline const char* model_name(model_kind m) {
    switch (m) {
        case model_kind::er: return "er";
        case model_kind::ba: return "ba";
        case model_kind::geo: return "geo";
    }
    return "";
}

inline const char* experiment_name(experiment_kind e) {
    switch (e) {
        case experiment_kind::size: return "size";
        case experiment_kind::removal: return "removal";
        case experiment_kind::rewiring: return "rewiring";
    }
    return "";
}

inline model_kind model_from_name(const std::string& name) {
    if (name == "er") return model_kind::er;
    if (name == "ba") return model_kind::ba;
    if (name == "geo") return model_kind::geo;
    throw argument_error("unknown model '" + name + "' (er, ba, geo)");
}

inline experiment_kind experiment_from_name(const std::string& name) {
    if (name == "size") return experiment_kind::size;
    if (name == "removal") return experiment_kind::removal;
    if (name == "rewiring") return experiment_kind::rewiring;
    throw argument_error("unknown experiment '" + name + "' (size, removal, rewiring)");
}

} // namespace netperturb

#endif
