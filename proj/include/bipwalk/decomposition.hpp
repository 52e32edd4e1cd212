#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipwalk/graph.hpp"
#include "bipwalk/rng.hpp"

namespace bipwalk {

struct DecomposeOptions {
    double c_diameter = 54.0;        // weak diameter bound is c_diameter / delta^2
    int retries = 16;                // fresh random offsets per failed attempt
    int max_recursion_depth = 8;     // extra chopping passes on oversized components
    int rounds = 3;                  // band-chopping rounds per pass
    int exact_verify_threshold = 200;  // components up to this size are verified exactly
    int verify_sample_pairs = 8;     // BFS sources sampled in larger components
};

struct Decomposition {
    std::vector<int> component_of;            // vertex -> component id, ids dense from 0
    std::vector<std::vector<int>> components; // members per component, ascending
    std::vector<std::pair<int, int>> cut_edges;
    std::vector<long long> weak_diameter;     // verified bound per component (distances in the input graph)
    double delta = 0;
    double diameter_bound = 0;
    int attempts_used = 0;
    int recursion_used = 0;
};

// Thrown when the retry/recursion budget runs out; carries the closest
// attempt so callers can inspect how far off it was.
struct DecompositionError : std::runtime_error {
    DecompositionError(const std::string& msg, Decomposition attempt)
        : std::runtime_error(msg), best_attempt(std::move(attempt)) {}
    Decomposition best_attempt;
};

// Deletes at most delta*|V| edges so that vertices sharing a component stay
// within c_diameter/delta^2 of each other in the input graph. Works by
// repeated BFS band chopping with random band offsets (band width
// ceil(9/delta)), verifies both bounds afterwards, and retries or re-chops
// oversized components before giving up with DecompositionError.
Decomposition decompose(const Graph& g, double delta, Rng& rng, const DecomposeOptions& opt = {});

// Per-component upper-bound estimate of the weak diameter: exact for
// components up to opt.exact_verify_threshold vertices, otherwise the max
// over verify_sample_pairs sampled BFS sources. Distances are measured in g.
std::vector<long long> verify_weak_diameter(const Graph& g, const std::vector<std::vector<int>>& components,
                                            int exact_threshold, int sample_sources, Rng& rng);

}  // namespace bipwalk
