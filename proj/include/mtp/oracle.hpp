#pragma once

// Exponential-time ground truth: simple-cycle enumeration, exact
// k-disjoint-packing search, exact kappa^k, packing validation, and the
// pancyclicity property check. Budgets fail loud -- a silently truncated
// oracle would corrupt every acceptance run built on it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "mtp/condensation.hpp"
#include "mtp/cycle.hpp"
#include "mtp/digraph.hpp"
#include "mtp/errors.hpp"
#include "mtp/multipartite.hpp"

namespace mtp {

struct OracleBudget {
    int max_cycle_len = 2;
    std::uint64_t max_nodes = 200'000'000;

    static OracleBudget unconditional(const Digraph& g, std::uint64_t nodes = 200'000'000) {
        return OracleBudget{std::max(2, g.vertex_count()), nodes};
    }
};

struct PackingCheck {
    bool ok = true;
    std::string violation;
    explicit operator bool() const { return ok; }
};

// True iff every consecutive pair of every cycle is an arc, vertices inside
// each cycle are distinct, and the cycles are pairwise vertex-disjoint.
inline PackingCheck verify_packing(const Digraph& g, const CyclePacking& p) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& c : p.cycles) {
        const auto& vs = c.verts();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int u = vs[i], v = vs[(i + 1) % vs.size()];
            if (u < 0 || u >= g.vertex_count())
                return {false, "vertex " + std::to_string(u) + " not in host"};
            if (used[u]) return {false, "vertex " + std::to_string(u) + " used twice"};
            if (!g.has_arc(u, v))
                return {false, "missing arc (" + std::to_string(u) + "," + std::to_string(v) + ")"};
        }
        for (int v : vs) used[v] = 1;
    }
    return {};
}

namespace detail {

struct NodeBudget {
    std::uint64_t left;
    void spend(const char* where) {
        if (left == 0) throw BudgetExceeded(std::string("oracle node budget exceeded in ") + where);
        --left;
    }
};

}  // namespace detail

// All simple directed cycles of length <= budget.max_cycle_len, canonical,
// sorted shortest-first then lexicographically. Rooted DFS: cycles are found
// at their minimum vertex, and a branch is cut as soon as the shortest way
// back to the root no longer fits in the length cap.
inline std::vector<Cycle> enumerate_cycles(const Digraph& g, const OracleBudget& budget) {
    const int n = g.vertex_count();
    const int cap = std::min(budget.max_cycle_len, n);
    detail::NodeBudget nodes{budget.max_nodes};
    std::vector<Cycle> found;

    std::vector<int> dist_back(n);
    std::vector<char> allowed(n);
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    constexpr int kInf = 1 << 29;

    for (int root = 0; root < n; ++root) {
        // BFS on the reverse graph over {root} u {v > root}: shortest arc
        // count from v back to root.
        std::fill(allowed.begin(), allowed.end(), 0);
        for (int v = root; v < n; ++v) allowed[v] = 1;
        std::fill(dist_back.begin(), dist_back.end(), kInf);
        dist_back[root] = 0;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : g.in(v))
                if (allowed[w] && dist_back[w] == kInf) {
                    dist_back[w] = dist_back[v] + 1;
                    bfs.push(w);
                }
        }

        path.assign(1, root);
        on_path[root] = 1;

        // Iterative DFS over out-neighbour indices.
        std::vector<std::size_t> iter(1, 0);
        while (!iter.empty()) {
            int v = path.back();
            const auto& outs = g.out(v);
            bool descended = false;
            while (iter.back() < outs.size()) {
                int w = outs[iter.back()++];
                nodes.spend("enumerate_cycles");
                if (w == root) {
                    if (path.size() >= 2) found.push_back(Cycle(path));
                    continue;
                }
                if (!allowed[w] || on_path[w]) continue;
                if (static_cast<int>(path.size()) + dist_back[w] > cap) continue;
                path.push_back(w);
                on_path[w] = 1;
                iter.push_back(0);
                descended = true;
                break;
            }
            if (descended) continue;
            on_path[path.back()] = 0;
            path.pop_back();
            iter.pop_back();
        }
    }

    std::sort(found.begin(), found.end());
    return found;
}

namespace detail {

// Backtracking search for k pairwise disjoint cycles from a pre-enumerated,
// sorted list. Lexicographic on cycle indices, so the witness is the least
// packing in that order.
inline bool pick_disjoint(const std::vector<Cycle>& cycles, int k, int n, NodeBudget& nodes,
                          std::vector<int>& chosen, std::vector<char>& used, int used_count,
                          std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t i = from; i < cycles.size(); ++i) {
        nodes.spend("exists_k_disjoint");
        const auto& vs = cycles[i].verts();
        bool free = true;
        for (int v : vs)
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        if (used_count + static_cast<int>(vs.size()) + 2 * (k - static_cast<int>(chosen.size()) - 1) > n) continue;
        for (int v : vs) used[v] = 1;
        chosen.push_back(static_cast<int>(i));
        if (pick_disjoint(cycles, k, n, nodes, chosen, used, used_count + static_cast<int>(vs.size()), i + 1))
            return true;
        chosen.pop_back();
        for (int v : vs) used[v] = 0;
    }
    return false;
}

}  // namespace detail

// Exact decision: a packing of k pairwise disjoint cycles of length
// <= budget.max_cycle_len, or nullopt if none exists within the cap. A cap
// of n makes the answer unconditional. Short cycles are tried first (a
// quick pass capped at length 4, then the full cap), which settles the
// abundant positive instances without enumerating long cycles.
inline std::optional<CyclePacking> exists_k_disjoint(const Digraph& g, int k, const OracleBudget& budget) {
    if (k < 0) throw Error("exists_k_disjoint: k must be >= 0");
    if (k == 0) return CyclePacking{};
    if (2 * k > g.vertex_count()) return std::nullopt;

    detail::NodeBudget nodes{budget.max_nodes};
    std::vector<int> caps;
    if (budget.max_cycle_len > 4) caps.push_back(4);
    caps.push_back(budget.max_cycle_len);

    for (int cap : caps) {
        OracleBudget stage{cap, nodes.left};
        std::vector<Cycle> cycles = enumerate_cycles(g, stage);
        std::vector<int> chosen;
        std::vector<char> used(g.vertex_count(), 0);
        if (detail::pick_disjoint(cycles, k, g.vertex_count(), nodes, chosen, used, 0, 0)) {
            CyclePacking p;
            for (int i : chosen) p.cycles.push_back(cycles[i]);
            return p;
        }
    }
    return std::nullopt;
}

struct KappaResult {
    int value = 0;
    std::optional<CyclePacking> witness;
};

namespace detail {

inline void kappa_search(const std::vector<Cycle>& cycles, int k, int n, NodeBudget& nodes,
                         std::vector<int>& chosen, std::vector<char>& used, std::size_t from,
                         std::set<int>& lengths, KappaResult& best, int max_possible) {
    if (static_cast<int>(chosen.size()) == k) {
        int distinct = static_cast<int>(lengths.size());
        if (distinct > best.value) {
            best.value = distinct;
            CyclePacking p;
            for (int i : chosen) p.cycles.push_back(cycles[i]);
            best.witness = p;
        }
        return;
    }
    int remaining = k - static_cast<int>(chosen.size());
    if (static_cast<int>(lengths.size()) + remaining <= best.value) return;  // cannot improve
    for (std::size_t i = from; i < cycles.size(); ++i) {
        if (best.value == max_possible) return;
        nodes.spend("kappa_exact");
        const auto& vs = cycles[i].verts();
        bool free = true;
        for (int v : vs)
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        int used_count = 0;
        for (int v = 0; v < n; ++v) used_count += used[v];
        if (used_count + static_cast<int>(vs.size()) + 2 * (remaining - 1) > n) continue;
        for (int v : vs) used[v] = 1;
        chosen.push_back(static_cast<int>(i));
        bool new_len = lengths.insert(cycles[i].length()).second;
        kappa_search(cycles, k, n, nodes, chosen, used, i + 1, lengths, best, max_possible);
        if (new_len) lengths.erase(cycles[i].length());
        chosen.pop_back();
        for (int v : vs) used[v] = 0;
    }
}

}  // namespace detail

// kappa^k(D) within the length cap: the maximum number of distinct cycle
// lengths over all k-disjoint-cycle packings, 0 if no k-packing exists.
inline KappaResult kappa_exact(const Digraph& g, int k, const OracleBudget& budget) {
    if (k < 0) throw Error("kappa_exact: k must be >= 0");
    KappaResult best;
    if (k == 0 || 2 * k > g.vertex_count()) return best;

    detail::NodeBudget nodes{budget.max_nodes};
    std::vector<Cycle> cycles = enumerate_cycles(g, budget);
    std::set<int> all_lengths;
    for (const auto& c : cycles) all_lengths.insert(c.length());
    int max_possible = std::min<int>(k, static_cast<int>(all_lengths.size()));

    std::vector<int> chosen;
    std::vector<char> used(g.vertex_count(), 0);
    std::set<int> lengths;
    detail::kappa_search(cycles, k, g.vertex_count(), nodes, chosen, used, 0, lengths, best, max_possible);
    return best;
}

struct PancyclicCheck {
    bool ok = true;
    std::vector<int> witness_per_part;  // one vertex per partite set
    std::string violation;
    explicit operator bool() const { return ok; }
};

// For each partite set of a strong t-partite (t >= 3) tournament, find a
// vertex lying on an m-cycle for every m in {3,...,t}. A violation would
// contradict the theorem this check is named for, so callers log it loudly.
inline PancyclicCheck vertex_pancyclic_check(const MultipartiteTournament& d, const OracleBudget& budget) {
    const int t = d.part_count();
    if (t < 3) throw Error("vertex_pancyclic_check: need t >= 3 partite sets");
    if (!is_strong(d.graph())) throw NotStrong("vertex_pancyclic_check: input is not strong");

    OracleBudget capped{t, budget.max_nodes};
    std::vector<Cycle> cycles = enumerate_cycles(d.graph(), capped);

    const int n = d.vertex_count();
    std::vector<std::vector<char>> on_len(n, std::vector<char>(t + 1, 0));
    for (const auto& c : cycles)
        for (int v : c.verts()) on_len[v][c.length()] = 1;

    PancyclicCheck result;
    for (int pid = 0; pid < t; ++pid) {
        int witness = -1;
        for (int v : d.parts()[pid]) {
            bool all = true;
            for (int m = 3; m <= t; ++m)
                if (!on_len[v][m]) {
                    all = false;
                    break;
                }
            if (all) {
                witness = v;
                break;
            }
        }
        if (witness == -1) {
            result.ok = false;
            result.violation = "part " + std::to_string(pid) + " has no vertex on all cycle lengths 3.." +
                               std::to_string(t);
            return result;
        }
        result.witness_per_part.push_back(witness);
    }
    return result;
}

}  // namespace mtp
