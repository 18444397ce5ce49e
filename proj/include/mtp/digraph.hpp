#pragma once

// Plain digraph: dense integer vertices 0..n-1, no loops, no duplicate arcs.
// Opposite arc pairs (u,v) and (v,u) may coexist, which keeps complete
// digraphs K*_n representable; multipartite tournaments forbid them via
// their own validator.

#include <algorithm>
#include <utility>
#include <vector>

#include "mtp/errors.hpp"

namespace mtp {

using Arc = std::pair<int, int>;

class Digraph {
public:
    Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        if (n_ < 0) throw ValidationError(ValidationError::Kind::BadVertex, n_, n_, "negative vertex count");
        out_.resize(n_);
        in_.resize(n_);
        adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
        std::sort(arcs_.begin(), arcs_.end());
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            auto [u, v] = arcs_[i];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw ValidationError(ValidationError::Kind::BadVertex, u, v, "arc endpoint out of range");
            if (u == v)
                throw ValidationError(ValidationError::Kind::Loop, u, v, "loop at vertex " + std::to_string(u));
            if (i > 0 && arcs_[i] == arcs_[i - 1])
                throw ValidationError(ValidationError::Kind::DuplicateArc, u, v,
                                      "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
            out_[u].push_back(v);
            in_[v].push_back(u);
            adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        }
        for (auto& nb : in_) std::sort(nb.begin(), nb.end());
        // out_ lists are already sorted because arcs_ is.
    }

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }

    bool has_arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    // d^+ restricted to the vertices marked in `mask` (size n).
    int out_degree_within(int v, const std::vector<char>& mask) const {
        int d = 0;
        for (int w : out_[v]) d += mask[w] ? 1 : 0;
        return d;
    }

    int in_degree_within(int v, const std::vector<char>& mask) const {
        int d = 0;
        for (int w : in_[v]) d += mask[w] ? 1 : 0;
        return d;
    }

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<char> adj_;
};

inline int min_out_degree(const Digraph& g) {
    if (g.vertex_count() == 0) throw EmptyGraph();
    int d = g.out_degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.out_degree(v));
    return d;
}

// |A_D(X,Y)|: arcs with tail in X and head in Y. X and Y must be disjoint.
inline int arc_count_between(const Digraph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    std::vector<char> in_y(g.vertex_count(), 0);
    for (int y : ys) in_y[y] = 1;
    for (int x : xs)
        if (in_y[x]) throw OverlappingSets(x);
    int count = 0;
    for (int x : xs)
        for (int w : g.out(x)) count += in_y[w] ? 1 : 0;
    return count;
}

// K*_n: both arcs between every pair of distinct vertices.
inline Digraph complete_digraph(int n) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

}  // namespace mtp
