#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bipwalk {

struct WalkStep {
    int from;
    int to;
    std::uint8_t parity;  // 1 for plain graph edges; path-length parity on contracted multigraphs
};

// Record of one random walk. The walk always runs to its full requested
// length; detected_at is the 0-based index of the first step whose edge made
// the traversed multiset non-2-colorable, if any. A walk started on an
// isolated vertex has no steps.
struct WalkTrace {
    int start = 0;
    std::vector<WalkStep> steps;
    std::optional<int> detected_at;

    bool detected() const { return detected_at.has_value(); }
};

}  // namespace bipwalk
