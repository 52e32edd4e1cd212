#include "bipwalk/multigraph.hpp"

#include <algorithm>
#include <string>

#include "bipwalk/errors.hpp"

namespace bipwalk {

void finalize_multigraph(ContractedMultigraph& m) {
    const int n = m.base_vertex_count;
    if (static_cast<int>(m.class_size.size()) != n)
        throw ValidationError("class_size must cover every base vertex");
    std::vector<char> on_image(n, 0);
    for (int v : m.vertices) {
        if (v < 0 || v >= n) throw ValidationError("image vertex " + std::to_string(v) + " out of range");
        on_image[v] = 1;
    }
    long long mass = 0;
    for (int v = 0; v < n; ++v) {
        if (m.class_size[v] < 0) throw ValidationError("negative class size");
        if (m.class_size[v] > 0 && !on_image[v])
            throw ValidationError("vertex " + std::to_string(v) + " has class mass but is not on the image");
        mass += m.class_size[v];
    }
    if (mass != n) throw ValidationError("class sizes sum to " + std::to_string(mass) + ", expected " + std::to_string(n));
    m.incident.assign(n, {});
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const MultiEdge& e = m.edges[i];
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || !on_image[e.a] || !on_image[e.b])
            throw ValidationError("edge endpoint off the image");
        if (e.a == e.b && e.parity != 1)
            throw ValidationError("self-loop at " + std::to_string(e.a) + " must have parity 1");
        m.incident[e.a].push_back(static_cast<int>(i));
        if (e.b != e.a) m.incident[e.b].push_back(static_cast<int>(i));
    }
}

}  // namespace bipwalk
