#pragma once

// Strong components and their acyclic ordering. Tarjan's algorithm with an
// explicit stack, then a Kahn pass over the component DAG. Incomparable
// components are ordered by minimum vertex label so the result is unique.

#include <algorithm>
#include <queue>
#include <vector>

#include "mtp/digraph.hpp"
#include "mtp/multipartite.hpp"

namespace mtp {

struct CondensationDAG {
    std::vector<std::vector<int>> components;  // acyclic order, each sorted
    std::vector<int> comp_of;                  // vertex -> component index
    int terminal_index = -1;                   // last component in the order
};

inline CondensationDAG condensation(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> raw_comps;
    int next_index = 0;

    // Tarjan, iterative.
    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> dfs;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        dfs.push_back({root, 0});
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            int v = f.v;
            if (f.child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            const auto& outs = g.out(v);
            while (f.child < outs.size()) {
                int w = outs[f.child++];
                if (index[w] == -1) {
                    dfs.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::vector<int> c;
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = static_cast<int>(raw_comps.size());
                    c.push_back(w);
                    if (w == v) break;
                }
                std::sort(c.begin(), c.end());
                raw_comps.push_back(std::move(c));
            }
            dfs.pop_back();
            if (!dfs.empty()) low[dfs.back().v] = std::min(low[dfs.back().v], low[v]);
        }
    }

    // Component DAG, then Kahn ordering keyed by minimum vertex label.
    const int m = static_cast<int>(raw_comps.size());
    std::vector<std::vector<int>> comp_out(m);
    std::vector<int> in_deg(m, 0);
    for (auto [u, v] : g.arcs()) {
        int cu = comp[u], cv = comp[v];
        if (cu != cv) comp_out[cu].push_back(cv);
    }
    for (auto& outs : comp_out) {
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        for (int w : outs) ++in_deg[w];
    }

    using Key = std::pair<int, int>;  // (min vertex label, comp id)
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> ready;
    for (int c = 0; c < m; ++c)
        if (in_deg[c] == 0) ready.push({raw_comps[c][0], c});

    CondensationDAG result;
    result.comp_of.assign(n, -1);
    std::vector<int> position(m, -1);
    while (!ready.empty()) {
        int c = ready.top().second;
        ready.pop();
        position[c] = static_cast<int>(result.components.size());
        result.components.push_back(raw_comps[c]);
        for (int w : comp_out[c])
            if (--in_deg[w] == 0) ready.push({raw_comps[w][0], w});
    }
    for (int v = 0; v < n; ++v) result.comp_of[v] = position[comp[v]];
    result.terminal_index = static_cast<int>(result.components.size()) - 1;
    return result;
}

inline bool is_strong(const Digraph& g) {
    return g.vertex_count() > 0 && condensation(g).components.size() == 1;
}

// The terminal strong component: the unique component with no outgoing arcs.
// Uniqueness holds for every multipartite tournament with min out-degree >= 1.
inline std::vector<int> terminal_component(const MultipartiteTournament& d) {
    CondensationDAG dag = condensation(d.graph());
    return dag.components[dag.terminal_index];
}

}  // namespace mtp
