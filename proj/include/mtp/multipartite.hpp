#pragma once

// Multipartite tournament: an orientation of a complete multipartite graph.
// The validator runs an exhaustive pair scan and reports the first offending
// pair in lexicographic order, so error cases are deterministic.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mtp/digraph.hpp"
#include "mtp/errors.hpp"

namespace mtp {

class MultipartiteTournament {
public:
    static MultipartiteTournament build(std::vector<std::vector<int>> parts, std::vector<Arc> arcs) {
        int n = 0;
        for (const auto& p : parts) n += static_cast<int>(p.size());
        std::vector<int> part_of(n, -1);
        for (std::size_t pid = 0; pid < parts.size(); ++pid) {
            if (parts[pid].empty())
                throw ValidationError(ValidationError::Kind::BadParts, static_cast<int>(pid), -1,
                                      "part " + std::to_string(pid) + " is empty");
            for (int v : parts[pid]) {
                if (v < 0 || v >= n)
                    throw ValidationError(ValidationError::Kind::BadVertex, v, -1,
                                          "vertex " + std::to_string(v) + " out of range (labels must be 0.." +
                                              std::to_string(n - 1) + ")");
                if (part_of[v] != -1)
                    throw ValidationError(ValidationError::Kind::BadParts, v, -1,
                                          "vertex " + std::to_string(v) + " listed in two parts");
                part_of[v] = static_cast<int>(pid);
            }
            std::sort(parts[pid].begin(), parts[pid].end());
        }

        Digraph g(n, std::move(arcs));  // catches loops, duplicates, range

        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                bool uv = g.has_arc(u, v), vu = g.has_arc(v, u);
                if (part_of[u] == part_of[v]) {
                    if (uv || vu)
                        throw ValidationError(ValidationError::Kind::IntraPartArc, u, v,
                                              "arc joins same-part vertices " + pair_str(u, v));
                } else {
                    if (uv && vu)
                        throw ValidationError(ValidationError::Kind::DoubleArc, u, v,
                                              "both orientations present for pair " + pair_str(u, v));
                    if (!uv && !vu)
                        throw ValidationError(ValidationError::Kind::MissingArc, u, v,
                                              "cross-part pair " + pair_str(u, v) + " has no orientation");
                }
            }
        }
        return MultipartiteTournament(std::move(g), std::move(parts), std::move(part_of));
    }

    const Digraph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int part_of(int v) const { return part_of_[v]; }
    bool same_part(int u, int v) const { return part_of_[u] == part_of_[v]; }

    // Every part a singleton, i.e. an ordinary tournament.
    bool is_tournament() const { return part_count() == vertex_count(); }

private:
    MultipartiteTournament(Digraph g, std::vector<std::vector<int>> parts, std::vector<int> part_of)
        : graph_(std::move(g)), parts_(std::move(parts)), part_of_(std::move(part_of)) {}

    static std::string pair_str(int u, int v) {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }

    Digraph graph_;
    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

// Sub-tournament induced by `vertices` (host labels, any order). Vertices are
// renumbered 0..|vertices|-1 in ascending host order; parts that become
// empty are dropped.
struct InducedSubgraph {
    MultipartiteTournament graph;
    std::vector<int> to_host;    // new label -> host label
    std::vector<int> from_host;  // host label -> new label, -1 if absent

    Cycle lift(const Cycle& c) const {
        std::vector<int> vs;
        vs.reserve(c.verts().size());
        for (int v : c.verts()) vs.push_back(to_host[v]);
        return Cycle(std::move(vs));
    }
};

inline InducedSubgraph induce(const MultipartiteTournament& host, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<int> from_host(host.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) from_host[vertices[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> parts;
    for (const auto& part : host.parts()) {
        std::vector<int> keep;
        for (int v : part)
            if (from_host[v] != -1) keep.push_back(from_host[v]);
        if (!keep.empty()) parts.push_back(std::move(keep));
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : host.graph().arcs())
        if (from_host[u] != -1 && from_host[v] != -1) arcs.emplace_back(from_host[u], from_host[v]);

    return InducedSubgraph{MultipartiteTournament::build(std::move(parts), std::move(arcs)),
                           std::move(vertices), std::move(from_host)};
}

// Sinks of D[U]: vertices of U with no out-neighbour inside U. Also checks
// the structural facts every multipartite tournament must satisfy -- all
// sinks in one part, and every non-sink reaches every sink within two steps
// inside U -- and aborts with ObservationViolated if they fail, since that
// would invalidate the algorithms built on top.
inline std::vector<int> sinks_within(const MultipartiteTournament& d, const std::vector<int>& u_set) {
    const Digraph& g = d.graph();
    std::vector<char> in_u(g.vertex_count(), 0);
    for (int v : u_set) {
        if (v < 0 || v >= g.vertex_count())
            throw ValidationError(ValidationError::Kind::BadVertex, v, -1, "sinks_within: vertex out of range");
        in_u[v] = 1;
    }

    std::vector<int> sinks;
    for (int v : u_set)
        if (g.out_degree_within(v, in_u) == 0) sinks.push_back(v);
    std::sort(sinks.begin(), sinks.end());
    if (sinks.empty()) return sinks;

    for (int s : sinks)
        if (!d.same_part(s, sinks[0]))
            throw ObservationViolated("sinks " + std::to_string(sinks[0]) + " and " + std::to_string(s) +
                                      " lie in different parts");

    std::vector<char> is_sink(g.vertex_count(), 0);
    for (int s : sinks) is_sink[s] = 1;
    for (int v : u_set) {
        if (is_sink[v]) continue;
        for (int s : sinks) {
            bool reach = g.has_arc(v, s);
            if (!reach) {
                for (int w : g.out(v)) {
                    if (in_u[w] && g.has_arc(w, s)) {
                        reach = true;
                        break;
                    }
                }
            }
            if (!reach)
                throw ObservationViolated("vertex " + std::to_string(v) + " cannot reach sink " +
                                          std::to_string(s) + " in two steps");
        }
    }
    return sinks;
}

}  // namespace mtp
