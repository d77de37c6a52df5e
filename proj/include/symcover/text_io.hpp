#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symcover/graph.hpp"
#include "symcover/monomial.hpp"

namespace symcover {
namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line;

    input_error error(const std::string& what) const {
        return input_error(std::to_string(line) + ":" + std::to_string(pos + 1) + ": " + what);
    }
};

inline int parse_int(Cursor& c) {
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
        ++c.pos;
    if (c.pos == start) throw c.error("expected a number");
    long long v = std::stoll(c.text.substr(start, c.pos - start));
    if (v <= 0 || v > 1'000'000) throw c.error("number out of range");
    return static_cast<int>(v);
}

/// `b` or `b.p`
inline VertexId parse_vertex_id(Cursor& c) {
    VertexId v;
    v.base = parse_int(c);
    v.level = 1;
    if (c.pos < c.text.size() && c.text[c.pos] == '.') {
        ++c.pos;
        v.level = parse_int(c);
    }
    return v;
}

}  // namespace detail

/// Graph text format: '#' comment lines, one `vertices:` line with
/// comma-separated ids, then one `u v` line per edge.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<VertexId> vertices;
    bool have_vertices = false;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        detail::Cursor c{line, 0, lineno};
        if (!have_vertices) {
            const std::string head = "vertices:";
            if (line.rfind(head, 0) != 0) throw c.error("expected a 'vertices:' line");
            c.pos = head.size();
            while (c.pos < line.size() && line[c.pos] == ' ') ++c.pos;
            if (c.pos < line.size()) {
                vertices.push_back(detail::parse_vertex_id(c));
                while (c.pos < line.size() && line[c.pos] == ',') {
                    ++c.pos;
                    vertices.push_back(detail::parse_vertex_id(c));
                }
            }
            if (c.pos != line.size()) throw c.error("trailing characters after vertex list");
            have_vertices = true;
            continue;
        }
        VertexId u = detail::parse_vertex_id(c);
        if (c.pos >= line.size() || line[c.pos] != ' ') throw c.error("expected 'u v'");
        ++c.pos;
        VertexId v = detail::parse_vertex_id(c);
        if (c.pos != line.size()) throw c.error("trailing characters after edge");
        if (u == v) throw c.error("loop edge");
        Graph::Edge e = u < v ? Graph::Edge{u, v} : Graph::Edge{v, u};
        for (const auto& seen : edges)
            if (seen == e) throw c.error("duplicate edge");
        edges.push_back(e);
    }
    if (!have_vertices) throw input_error("1:1: missing 'vertices:' line");
    return Graph(std::move(vertices), std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
    std::string out = "vertices: ";
    bool first = true;
    for (const auto& v : g.vertices()) {
        if (!first) out += ',';
        out += to_string(v);
        first = false;
    }
    out += '\n';
    for (const auto& [u, v] : g.edges()) out += to_string(u) + " " + to_string(v) + "\n";
    return out;
}

/// Ideal text format: one monomial per line, factors `x<b>` or `x<b>.<p>`
/// with optional `^<e>`, joined by '*'. A single `1` line is the unit ideal;
/// an empty file is the zero ideal. The ambient is the set of variables that
/// occur.
inline MonomialIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<Monomial> gens;
    std::vector<VertexId> ambient;
    while (std::getline(in, line)) {
        ++lineno;
        detail::Cursor c{line, 0, lineno};
        if (line.empty()) throw c.error("blank line in ideal file");
        if (line == "1") {
            gens.push_back(Monomial::unit());
            continue;
        }
        std::vector<Monomial::Entry> entries;
        while (true) {
            if (c.pos >= line.size() || line[c.pos] != 'x') throw c.error("expected a factor 'x<b>'");
            ++c.pos;
            VertexId v = detail::parse_vertex_id(c);
            int e = 1;
            if (c.pos < line.size() && line[c.pos] == '^') {
                ++c.pos;
                e = detail::parse_int(c);
            }
            entries.push_back({v, e});
            ambient.push_back(v);
            if (c.pos == line.size()) break;
            if (line[c.pos] != '*') throw c.error("expected '*' between factors");
            ++c.pos;
        }
        gens.push_back(Monomial(std::move(entries)));
    }
    std::sort(ambient.begin(), ambient.end());
    ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
    return MonomialIdeal(std::move(ambient), std::move(gens));
}

inline std::string serialize_ideal(const MonomialIdeal& ideal) {
    std::string out;
    for (const auto& g : ideal.generators()) out += g.str() + "\n";
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph parse_graph_file(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const input_error& e) {
        throw input_error(path + ":" + e.what());
    }
}

inline MonomialIdeal parse_ideal_file(const std::string& path) {
    try {
        return parse_ideal(read_file(path));
    } catch (const input_error& e) {
        throw input_error(path + ":" + e.what());
    }
}

}  // namespace symcover
