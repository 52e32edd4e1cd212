#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bipwalk {

// Union-find over {0, ..., n-1} where every element carries the parity of its
// path to the set root. Connecting two elements whose recorded relative parity
// contradicts the requested one is a conflict: the traversed edge multiset has
// become non-2-colorable. Conflicting calls leave the structure unchanged.
class ParityDsu {
  public:
    explicit ParityDsu(int n = 0) { reset(n); }

    void reset(int n) {
        parent_.resize(n);
        rank_.assign(n, 0);
        parity_.assign(n, 0);
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int size() const { return static_cast<int>(parent_.size()); }

    // (root, parity of x relative to root)
    std::pair<int, std::uint8_t> find(int x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, par] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= par;
        return {root, parity_[x]};
    }

    // Records that x and y are joined with relative parity p (1 = must be on
    // opposite sides). Returns true iff this contradicts what is already
    // known; the contradiction is not recorded.
    bool add_edge(int x, int y, std::uint8_t p) {
        if (x == y) return p != 0;
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return static_cast<std::uint8_t>(px ^ py) != p;
        if (rank_[rx] < rank_[ry]) {
            std::swap(rx, ry);
            std::swap(px, py);
        }
        parent_[ry] = rx;
        parity_[ry] = static_cast<std::uint8_t>(px ^ py ^ p);
        if (rank_[rx] == rank_[ry]) ++rank_[rx];
        return false;
    }

    bool same_set(int x, int y) { return find(x).first == find(y).first; }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::uint8_t> parity_;  // parity relative to parent_
};

}  // namespace bipwalk
