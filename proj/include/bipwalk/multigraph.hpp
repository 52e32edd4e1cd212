#pragma once

#include <cstdint>
#include <vector>

namespace bipwalk {

struct MultiEdge {
    int a;
    int b;
    std::uint8_t parity;   // parity of the base path this edge stands for
    int origin_cycle;      // index into the owning cycle set, -1 for ad-hoc graphs
};

// Multigraph over the image of a partition: parallel edges and self-loops are
// kept, each with a parity. Vertices carry the size of the partition class
// they head; class sizes sum to the base vertex count.
struct ContractedMultigraph {
    int base_vertex_count = 0;
    std::vector<int> vertices;               // image vertex ids, ascending
    std::vector<MultiEdge> edges;
    std::vector<long long> class_size;       // indexed by base vertex id, 0 off the image
    std::vector<std::vector<int>> incident;  // base vertex id -> edge indices (self-loop listed once)

    // Incident edge records; a self-loop counts once.
    int degree(int v) const { return static_cast<int>(incident[v].size()); }

    bool has_self_loop(int v) const {
        for (int e : incident[v])
            if (edges[e].a == edges[e].b) return true;
        return false;
    }
};

// Builds the incidence index and checks basic shape: endpoints on the image,
// self-loops all of parity 1, class sizes non-negative and summing to the base
// count. Throws ValidationError.
void finalize_multigraph(ContractedMultigraph& m);

}  // namespace bipwalk
