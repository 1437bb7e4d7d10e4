#pragma once

#include <stdexcept>
#include <string>

namespace mck {

// Raised when a computation would need stages beyond the scenario cutoff D.
struct StageOverflow : std::runtime_error {
    explicit StageOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a puncture-sector index would exceed the cutoff M. The result is
// flagged, never silently dropped.
struct IndexOverflow : std::runtime_error {
    explicit IndexOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a restriction or product leaves a truncated section basis.
struct TruncationLeak : std::runtime_error {
    explicit TruncationLeak(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mck
