#pragma once

// Instance generators: random multipartite tournaments, the extremal BT
// family, blow-ups of tournaments, and complete split oriented graphs.
// All randomness comes from SplitMix64 (see prng.hpp), so a spec plus a seed
// pins the instance byte for byte.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mtp/errors.hpp"
#include "mtp/multipartite.hpp"
#include "mtp/prng.hpp"

namespace mtp {

struct GenSpec {
    std::vector<int> sizes;
    std::uint64_t seed = 0;
    std::optional<int> delta_min;
    int max_attempts = 10000;

    void validate() const {
        if (sizes.empty()) throw Error("GenSpec: sizes must be nonempty");
        for (int s : sizes)
            if (s < 1) throw Error("GenSpec: part sizes must be >= 1");
        if (max_attempts < 1) throw Error("GenSpec: max_attempts must be >= 1");
    }
};

namespace detail {

// Part layout shared by all generators: part i gets the next sizes[i] labels.
inline std::vector<std::vector<int>> consecutive_parts(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> parts;
    int next = 0;
    for (int s : sizes) {
        std::vector<int> p(s);
        std::iota(p.begin(), p.end(), next);
        next += s;
        parts.push_back(std::move(p));
    }
    return parts;
}

// Orient every cross-part pair (u,v), u < v, with one coin flip each, in
// lexicographic pair order. Callers that rejection-sample share the stream.
inline MultipartiteTournament random_multipartite(const std::vector<int>& sizes, SplitMix64& rng) {
    auto parts = consecutive_parts(sizes);
    int n = 0;
    for (int s : sizes) n += s;
    std::vector<int> part_of(n);
    for (std::size_t pid = 0; pid < parts.size(); ++pid)
        for (int v : parts[pid]) part_of[v] = static_cast<int>(pid);

    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) arcs.emplace_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    return MultipartiteTournament::build(std::move(parts), std::move(arcs));
}

}  // namespace detail

inline MultipartiteTournament gen_random_multipartite(const GenSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    return detail::random_multipartite(spec.sizes, rng);
}

// Rejection-sample until delta^+ >= spec.delta_min.
inline MultipartiteTournament gen_with_min_outdegree(const GenSpec& spec) {
    spec.validate();
    if (!spec.delta_min) throw Error("gen_with_min_outdegree: delta_min not set");
    SplitMix64 rng(spec.seed);
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        MultipartiteTournament d = detail::random_multipartite(spec.sizes, rng);
        if (min_out_degree(d.graph()) >= *spec.delta_min) return d;
    }
    throw ExhaustedAttempts("no instance with min out-degree >= " + std::to_string(*spec.delta_min) +
                            " found in " + std::to_string(spec.max_attempts) + " attempts");
}

// BT(n_1,...,n_2k): bipartite tournament with X = X_1 u ... u X_2k and
// singleton Y-vertices y_1..y_2k; arcs X_i -> y_j for i != j and y_i -> X_i.
// Labels: X groups consecutively from 0, then the y's.
inline MultipartiteTournament gen_bt(const std::vector<int>& n_list) {
    if (n_list.size() < 4 || n_list.size() % 2 != 0)
        throw BadArity("BT needs 2k >= 4 group sizes, got " + std::to_string(n_list.size()));
    for (int s : n_list)
        if (s < 1) throw BadArity("BT group sizes must be >= 1");

    const int groups = static_cast<int>(n_list.size());
    int x_total = 0;
    for (int s : n_list) x_total += s;

    std::vector<std::vector<int>> x_group(groups);
    int next = 0;
    for (int i = 0; i < groups; ++i) {
        x_group[i].resize(n_list[i]);
        std::iota(x_group[i].begin(), x_group[i].end(), next);
        next += n_list[i];
    }
    std::vector<int> ys(groups);
    std::iota(ys.begin(), ys.end(), x_total);

    std::vector<int> x_part, y_part = ys;
    for (int v = 0; v < x_total; ++v) x_part.push_back(v);

    std::vector<Arc> arcs;
    for (int i = 0; i < groups; ++i)
        for (int j = 0; j < groups; ++j) {
            if (i == j) {
                for (int x : x_group[i]) arcs.emplace_back(ys[i], x);
            } else {
                for (int x : x_group[i]) arcs.emplace_back(x, ys[j]);
            }
        }
    return MultipartiteTournament::build({std::move(x_part), std::move(y_part)}, std::move(arcs));
}

// Blow-up: vertex i of the tournament becomes an independent set of
// sizes[i] vertices; arcs go blob-to-blob. Blob i occupies consecutive
// labels, in core-vertex order.
inline MultipartiteTournament extend_tournament(const MultipartiteTournament& t, const std::vector<int>& sizes) {
    if (!t.is_tournament()) throw SizeMismatch("extend_tournament: core must be a tournament");
    if (static_cast<int>(sizes.size()) != t.vertex_count())
        throw SizeMismatch("extend_tournament: need one size per core vertex");
    for (int s : sizes)
        if (s < 1) throw SizeMismatch("extend_tournament: blob sizes must be >= 1");

    auto parts = detail::consecutive_parts(sizes);
    std::vector<Arc> arcs;
    for (auto [i, j] : t.graph().arcs())
        for (int u : parts[i])
            for (int v : parts[j]) arcs.emplace_back(u, v);
    return MultipartiteTournament::build(std::move(parts), std::move(arcs));
}

inline MultipartiteTournament gen_random_tournament(int n, SplitMix64& rng) {
    return detail::random_multipartite(std::vector<int>(n, 1), rng);
}

inline MultipartiteTournament gen_random_tournament(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return gen_random_tournament(n, rng);
}

// Orientation of a complete split graph: clique vertices become singleton
// parts 0..clique_size-1, the independent set is one final part. Every
// clique-clique and clique-independent pair is oriented by coin flip.
inline MultipartiteTournament gen_complete_split(int clique_size, int independent_size, std::uint64_t seed) {
    if (clique_size < 1 || independent_size < 1)
        throw Error("gen_complete_split: both sides must be >= 1");
    std::vector<int> sizes(clique_size, 1);
    sizes.push_back(independent_size);
    SplitMix64 rng(seed);
    return detail::random_multipartite(sizes, rng);
}

}  // namespace mtp
