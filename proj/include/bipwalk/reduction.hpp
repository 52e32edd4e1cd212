#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipwalk/harvest.hpp"
#include "bipwalk/multigraph.hpp"
#include "bipwalk/rng.hpp"

namespace bipwalk {

// Vertex-contraction map: head_of[v] is the vertex v contracts into. Good for
// a cycle set when heads are fixed points, vertices on no cycle map to
// themselves, a class that meets a cycle has its head on that cycle, and each
// class restricted to a cycle is nothing, everything, or one contiguous arc.
struct GoodPartition {
    std::vector<int> head_of;

    static GoodPartition identity(int n);
    int operator()(int v) const { return head_of[v]; }
    int size() const { return static_cast<int>(head_of.size()); }
};

// Throws ValidationError naming the violated property and a witness.
void check_good_partition(const CycleSet& cs, const GoodPartition& p);

// Image of one base cycle: the heads it visits, in traversal order, each
// exactly once. parities[i] is the mod-2 length of the base arc from heads[i]
// to heads[(i+1) % q]. q == 1 is a self-loop (parity 1, base cycles being
// odd); q == 2 is a doubled edge whose two parities differ.
struct CycleImage {
    std::vector<int> heads;
    std::vector<std::uint8_t> parities;

    int length() const { return static_cast<int>(heads.size()); }
    bool self_loop() const { return heads.size() == 1; }
};

struct ContractedState {
    CycleSet cycles;
    GoodPartition partition;
    std::vector<CycleImage> images;  // parallel to cycles
    ContractedMultigraph image;      // aggregate of all images
    int max_image_length = 0;

    int vertex_count() const { return image.base_vertex_count; }
    bool all_self_loops() const { return !cycles.empty() && max_image_length == 1; }
};

// Validates the partition against the cycles, computes every per-cycle image,
// and aggregates the multigraph. n is the base vertex count.
ContractedState build_contracted(int n, CycleSet cs, GoodPartition p);

// Copy of p with every vertex off the cycles mapped to itself. Heads of
// classes that still meet a cycle are never touched (their head lies on that
// cycle too), so the images are unchanged and goodness is preserved.
GoodPartition refix_isolated(int n, const CycleSet& cs, const GoodPartition& p);

// Two-phase level assignment over the image multigraph. Phase 1 repeatedly
// takes the smallest non-isolated vertex with at most 6 distinct neighbors (a
// self-loop makes a vertex its own neighbor) and moves all cycles through it
// to the next level; no candidate means the image is too dense for a
// minor-free base and raises DiagnosticError. Phase 2 walks levels downward,
// keeping a level when its surviving cycles number at least 1/(2k) of the
// surviving lower-level cycles through the same vertex and dropping the
// smaller side, k being the current max image length. At least |C|/(4k+2)
// cycles survive and every surviving image has a <= 6-distinct-neighbor
// vertex.
CycleSet assigning_levels(const ContractedState& state);

struct ThinOptions {
    int retries = 64;                // independent draws; the largest survivor set wins
    bool until_nonempty = false;     // keep drawing past retries while nothing survives
    long long draw_cap = 4'000'000;  // hard stop for until_nonempty
};

struct ThinResult {
    CycleSet cycles;
    std::vector<int> contractible;  // vertices well-contractible in the surviving image, ascending
    long long draws_used = 0;
};

// Random thinning towards well-contractible vertices. Every image vertex
// with at most 6 distinct neighbors draws a neighbor pair (x, y) and, when
// x != y, parities (p_x, p_y); a cycle through v survives the draw at v only
// if its image is the doubled edge between v and x (case x == y) or its two
// v-incident image edges are exactly (v, x) with parity p_x and (v, y) with
// parity p_y. A cycle survives a draw when it conforms at every such vertex
// it visits; draws are independent and judged against the input images.
// Requires a self-loop-free image.
ThinResult thin_well_contractible(const ContractedState& state, const ThinOptions& opt, Rng& rng);

// Per image vertex: true when it has no self-loop and either a single
// distinct neighbor, or exactly two distinct neighbors x, y such that every
// cycle through it enters from x and leaves to y with parities that agree
// across all those cycles. These are the vertices whose contraction cannot
// shortcut or reparity any remaining cycle.
std::vector<char> well_contractible_vertices(const ContractedState& state);

struct MainStepResult {
    CycleSet cycles;          // C'
    std::vector<int> q;       // independent well-contractible vertices, ascending
    GoodPartition partition;  // P', re-fixed after every deletion stage
};

// One preparation step: if self-loop cycles already dominate, returns them
// with an empty q; otherwise runs assigning_levels, the thinning draw, and
// the degree-retention rule (reference degrees taken from the input image),
// then greedily picks an ascending maximal independent set of thin-certified
// well-contractible vertices. Every returned non-self-loop cycle contains a
// q vertex.
MainStepResult main_step(const ContractedState& state, const ThinOptions& thin, Rng& rng);

// Contracts every u in q into gamma(u), its neighbor with the most parallel
// edges (ties to the smallest id): the class of u is re-headed to gamma(u)
// and all images are rebuilt from the base cycles. Image paths x-u-y become
// an edge (x, y) of summed parity; a doubled edge (u, x) becomes a parity-1
// self-loop at x. Throws ValidationError when q is not independent or a
// member is not well-contractible.
ContractedState contract_step(const ContractedState& state, const std::vector<int>& q);

struct ReductionOptions {
    // A lone length-7 cycle conforms to a thinning draw with probability
    // 8^-7, so the escape hatch needs room for a few million draws.
    ThinOptions thin{64, true, 20'000'000};
};

enum class ReductionStepKind { initial, main, contract };

struct ReductionChain {
    std::vector<ContractedState> states;
    std::vector<ReductionStepKind> kinds;  // parallel to states
    int contract_steps = 0;

    const ContractedState& final_state() const { return states.back(); }
};

struct ReductionCollapseError : std::runtime_error {
    ReductionCollapseError(const std::string& msg, ReductionChain chain)
        : std::runtime_error(msg), chain_so_far(std::move(chain)) {}
    ReductionChain chain_so_far;
};

// Full pipeline: start from the identity partition and alternate main_step
// and contract_step until every image cycle is a self-loop. Returns the whole
// state chain for audit; at most k-1 contract steps happen when the longest
// input cycle has length k. An emptied cycle set raises
// ReductionCollapseError carrying the chain gathered so far.
ReductionChain reduce_to_selfloops(int n, const CycleSet& cs, Rng& rng, const ReductionOptions& opt = {});

}  // namespace bipwalk
