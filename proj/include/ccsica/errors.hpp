#pragma once

#include <stdexcept>
#include <string>

namespace ccsica {

/// Numerical failure: singular matrices, non-convergent iterations,
/// degenerate signals. Distinct from bad arguments so callers can map
/// it to a dedicated exit status.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// File-format or filesystem failure.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccsica
