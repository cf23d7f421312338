#ifndef NETPERTURB_ERRORS_HPP
#define NETPERTURB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace netperturb {

// Invalid argument to a library operation (bad node id, negative vector
// entry, length mismatch, ...).
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Configuration rejected; carries the full list of violations, not just the
// first one encountered.
struct config_error : std::runtime_error {
    std::vector<std::string> issues;

    explicit config_error(std::vector<std::string> problems)
        : std::runtime_error(join(problems)), issues(std::move(problems)) {}

  private:
    static std::string join(const std::vector<std::string>& problems) {
        std::string out = "invalid configuration:";
        for (const auto& p : problems) {
            out += "\n  - ";
            out += p;
        }
        return out;
    }
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation that cannot produce a defined value (no connected pair,
// walk from an edgeless graph, failed convergence).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace netperturb

#endif
