#pragma once

// Directed cycles and cycle packings. A Cycle stores its vertex sequence in
// canonical form (rotated so the minimum label comes first), which makes
// equality and ordering deterministic across runs.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mtp/errors.hpp"

namespace mtp {

class Cycle {
public:
    explicit Cycle(std::vector<int> verts) : verts_(std::move(verts)) {
        if (verts_.size() < 2) throw ValidationError(ValidationError::Kind::BadVertex, -1, -1, "cycle shorter than 2");
        auto min_it = std::min_element(verts_.begin(), verts_.end());
        std::rotate(verts_.begin(), min_it, verts_.end());
        std::vector<int> sorted = verts_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError(ValidationError::Kind::BadVertex, -1, -1, "repeated vertex on cycle");
    }

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& verts() const { return verts_; }

    bool contains(int v) const { return std::find(verts_.begin(), verts_.end(), v) != verts_.end(); }

    int successor(int v) const { return verts_[(index_of(v) + 1) % verts_.size()]; }
    int predecessor(int v) const { return verts_[(index_of(v) + verts_.size() - 1) % verts_.size()]; }

    bool operator==(const Cycle& other) const { return verts_ == other.verts_; }
    bool operator!=(const Cycle& other) const { return !(*this == other); }

    // Shorter cycles first, then lexicographic on the canonical sequence.
    bool operator<(const Cycle& other) const {
        if (verts_.size() != other.verts_.size()) return verts_.size() < other.verts_.size();
        return verts_ < other.verts_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(verts_[i]);
        }
        return s;
    }

private:
    std::size_t index_of(int v) const {
        auto it = std::find(verts_.begin(), verts_.end(), v);
        if (it == verts_.end()) throw VertexNotOnCycle(v);
        return static_cast<std::size_t>(it - verts_.begin());
    }

    std::vector<int> verts_;
};

// C[x,y]: the (x,y)-path along the cycle, endpoints inclusive.
// C[x,x] is the single-vertex path.
inline std::vector<int> path_on_cycle(const Cycle& c, int x, int y) {
    const auto& vs = c.verts();
    auto ix = std::find(vs.begin(), vs.end(), x);
    if (ix == vs.end()) throw VertexNotOnCycle(x);
    if (std::find(vs.begin(), vs.end(), y) == vs.end()) throw VertexNotOnCycle(y);
    std::vector<int> path;
    std::size_t i = static_cast<std::size_t>(ix - vs.begin());
    for (;;) {
        path.push_back(vs[i]);
        if (vs[i] == y) break;
        i = (i + 1) % vs.size();
    }
    return path;
}

struct CyclePacking {
    std::vector<Cycle> cycles;

    int k() const { return static_cast<int>(cycles.size()); }

    int distinct_lengths() const {
        std::set<int> lens;
        for (const auto& c : cycles) lens.insert(c.length());
        return static_cast<int>(lens.size());
    }

    std::vector<int> lengths() const {
        std::vector<int> lens;
        lens.reserve(cycles.size());
        for (const auto& c : cycles) lens.push_back(c.length());
        return lens;
    }
};

// Packing equality in tests is set equality of canonical cycles.
inline std::vector<Cycle> canonical_cycles(const CyclePacking& p) {
    std::vector<Cycle> cs = p.cycles;
    std::sort(cs.begin(), cs.end());
    return cs;
}

}  // namespace mtp
