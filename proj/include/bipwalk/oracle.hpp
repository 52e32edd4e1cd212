#pragma once

#include <cstdint>

#include "bipwalk/graph.hpp"
#include "bipwalk/rng.hpp"

namespace bipwalk {

struct QueryCounters {
    long long degree = 0;
    long long neighbor = 0;
    long long random_neighbor = 0;
    long long total() const { return degree + neighbor + random_neighbor; }
};

// Query facade for sublinear algorithms: the number of vertices is known, the
// structure is reachable only through the three counted queries below. Tests
// substitute their own subclasses to audit access patterns.
class Oracle {
  public:
    virtual ~Oracle() = default;

    virtual int vertex_count() const = 0;

    int degree(int v) {
        ++counters_.degree;
        return do_degree(v);
    }
    // i-th neighbor, 0 <= i < degree(v)
    int neighbor(int v, int i) {
        ++counters_.neighbor;
        return do_neighbor(v, i);
    }
    // Uniformly random neighbor, independent across calls.
    int random_neighbor(int v, Rng& rng) {
        ++counters_.random_neighbor;
        return do_random_neighbor(v, rng);
    }

    const QueryCounters& counters() const { return counters_; }

  protected:
    virtual int do_degree(int v) = 0;
    virtual int do_neighbor(int v, int i) = 0;
    virtual int do_random_neighbor(int v, Rng& rng) = 0;

  private:
    QueryCounters counters_;
};

class GraphOracle final : public Oracle {
  public:
    explicit GraphOracle(const Graph& g) : g_(&g) {}

    int vertex_count() const override { return g_->vertex_count(); }

  protected:
    int do_degree(int v) override { return g_->degree(v); }
    int do_neighbor(int v, int i) override { return g_->neighbors(v)[static_cast<std::size_t>(i)]; }
    int do_random_neighbor(int v, Rng& rng) override {
        const auto& nbrs = g_->neighbors(v);
        return nbrs[rand_below(rng, nbrs.size())];
    }

  private:
    const Graph* g_;
};

}  // namespace bipwalk
