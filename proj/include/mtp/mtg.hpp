#pragma once

// The "mtg" text format, line oriented:
//
//   c <free text>                 comments, anywhere
//   p mtg <n> <t> <m>             exactly one problem line
//   s <part_id> <v> <v> ...       exactly t part lines, ids 0..t-1
//   a <u> <v>                     exactly m arc lines
//
// Plain digraphs use "p dig <n> <m>" and carry no s-lines. Serialization is
// canonical: parts ascending by id with ascending vertex lists, arcs sorted
// lexicographically, so serialize(parse(f)) == f for canonical f.

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mtp/digraph.hpp"
#include "mtp/errors.hpp"
#include "mtp/multipartite.hpp"

namespace mtp {

using ParsedGraph = std::variant<Digraph, MultipartiteTournament>;

inline std::string serialize_mtg(const MultipartiteTournament& d) {
    std::ostringstream os;
    os << "p mtg " << d.vertex_count() << ' ' << d.part_count() << ' ' << d.graph().arc_count() << '\n';
    for (int pid = 0; pid < d.part_count(); ++pid) {
        os << "s " << pid;
        for (int v : d.parts()[pid]) os << ' ' << v;
        os << '\n';
    }
    for (auto [u, v] : d.graph().arcs()) os << "a " << u << ' ' << v << '\n';
    return os.str();
}

inline std::string serialize_mtg(const Digraph& g) {
    std::ostringstream os;
    os << "p dig " << g.vertex_count() << ' ' << g.arc_count() << '\n';
    for (auto [u, v] : g.arcs()) os << "a " << u << ' ' << v << '\n';
    return os.str();
}

inline std::string serialize_mtg(const ParsedGraph& g) {
    return std::visit([](const auto& x) { return serialize_mtg(x); }, g);
}

inline const Digraph& underlying_graph(const ParsedGraph& g) {
    if (std::holds_alternative<Digraph>(g)) return std::get<Digraph>(g);
    return std::get<MultipartiteTournament>(g).graph();
}

inline ParsedGraph parse_mtg(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    bool have_p = false, is_mt = false;
    int n = 0, t = 0, m = 0;
    std::vector<std::vector<int>> parts;
    std::vector<char> part_seen;
    std::vector<Arc> arcs;
    int s_lines = 0;

    auto fail = [&](const std::string& msg) -> void { throw ParseError(lineno, msg); };

    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_p) fail("second p-line");
            std::string kind;
            if (!(ls >> kind)) fail("p-line missing format name");
            if (kind == "mtg") {
                if (!(ls >> n >> t >> m)) fail("p mtg expects <n> <t> <m>");
                if (n < 0 || t < 1 || m < 0) fail("bad counts on p-line");
                is_mt = true;
                parts.resize(t);
                part_seen.assign(t, 0);
            } else if (kind == "dig") {
                if (!(ls >> n >> m)) fail("p dig expects <n> <m>");
                if (n < 0 || m < 0) fail("bad counts on p-line");
                is_mt = false;
            } else {
                fail("unknown format '" + kind + "'");
            }
            have_p = true;
        } else if (tag == "s") {
            if (!have_p) fail("s-line before p-line");
            if (!is_mt) fail("s-line in a dig file");
            int pid;
            if (!(ls >> pid)) fail("s-line missing part id");
            if (pid < 0 || pid >= t) fail("part id " + std::to_string(pid) + " out of range");
            if (part_seen[pid]) fail("part " + std::to_string(pid) + " declared twice");
            part_seen[pid] = 1;
            int v;
            while (ls >> v) parts[pid].push_back(v);
            if (parts[pid].empty()) fail("part " + std::to_string(pid) + " is empty");
            if (!ls.eof()) fail("trailing junk on s-line");
            ++s_lines;
        } else if (tag == "a") {
            if (!have_p) fail("a-line before p-line");
            int u, v;
            if (!(ls >> u >> v)) fail("a-line expects <u> <v>");
            arcs.emplace_back(u, v);
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }

    if (!have_p) throw ParseError(lineno, "missing p-line");
    if (static_cast<int>(arcs.size()) != m)
        throw CountMismatch("p-line declares " + std::to_string(m) + " arcs but file has " +
                            std::to_string(arcs.size()) + " a-lines");
    if (is_mt) {
        if (s_lines != t)
            throw CountMismatch("p-line declares " + std::to_string(t) + " parts but file has " +
                                std::to_string(s_lines) + " s-lines");
        return MultipartiteTournament::build(std::move(parts), std::move(arcs));
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace mtp
