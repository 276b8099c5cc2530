#include "dfed/instance_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <vector>

namespace dfed {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

template <class Int>
Int parse_int(const Token& tok, std::size_t line, const char* what) {
    Int value{};
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    }
    return value;
}

FamilySpec parse_family_at(std::string_view token, std::size_t line, std::size_t column) {
    std::optional<int> s;
    std::optional<int> t;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = token.find(',', pos);
        const std::string_view item = token.substr(pos, comma == std::string_view::npos ? token.npos : comma - pos);
        const std::size_t item_column = column + pos;
        auto bad = [&](const std::string& why) {
            return ParseError(line, item_column, "family item '" + std::string(item) + "': " + why);
        };
        int value = 0;
        if (item == "diamond") {
            value = 1;
        } else if (item.size() > 8 && item.ends_with("-diamond")) {
            const Token num{item.substr(0, item.size() - 8), item_column};
            value = parse_int<int>(num, line, "s-diamond size");
            if (value < 1) {
                throw bad("s must be at least 1");
            }
        } else if (item.size() > 1 && item.front() == 'k') {
            const Token num{item.substr(1), item_column + 1};
            value = parse_int<int>(num, line, "clique size");
            if (value < 3) {
                throw bad("t must be at least 3");
            }
            if (t) {
                throw bad("at most one clique item");
            }
            t = value;
            value = 0;
        } else {
            throw bad("expected 'diamond', '<s>-diamond' or 'k<t>'");
        }
        if (value > 0) {
            if (s) {
                throw bad("at most one s-diamond item");
            }
            s = value;
        }
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return FamilySpec(s, t);
}

struct Parsed {
    std::size_t n = 0;
    std::size_t m = 0;
    int k = 0;
    std::optional<FamilySpec> family;
    Graph graph;
};

Parsed parse_lines(std::string_view text, std::string_view kind) {
    Parsed out;
    bool have_header = false;
    std::size_t edges = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto toks = split_line(line);
        if (toks.empty() || toks[0].text == "c") {
            continue;
        }
        if (toks[0].text == "p") {
            if (have_header) {
                throw ParseError(line_no, toks[0].column, "duplicate header");
            }
            const std::size_t want = kind == "dfed" ? 6 : 5;
            if (toks.size() != want) {
                throw ParseError(line_no, toks[0].column,
                                 kind == "dfed" ? "header must be 'p dfed <n> <m> <k> <family>'"
                                                : "header must be 'p vc <n> <m> <k>'");
            }
            if (toks[1].text != kind) {
                throw ParseError(line_no, toks[1].column, "expected problem '" + std::string(kind) + "'");
            }
            out.n = parse_int<std::size_t>(toks[2], line_no, "vertex count");
            out.m = parse_int<std::size_t>(toks[3], line_no, "edge count");
            out.k = parse_int<int>(toks[4], line_no, "budget");
            if (out.k < 0) {
                throw ParseError(line_no, toks[4].column, "budget must be non-negative");
            }
            if (kind == "dfed") {
                out.family = parse_family_at(toks[5].text, line_no, toks[5].column);
            }
            out.graph = Graph(out.n);
            have_header = true;
            continue;
        }
        if (toks[0].text == "e") {
            if (!have_header) {
                throw ParseError(line_no, toks[0].column, "edge before header");
            }
            if (toks.size() != 3) {
                throw ParseError(line_no, toks[0].column, "edge line must be 'e <u> <v>'");
            }
            const auto u = parse_int<std::size_t>(toks[1], line_no, "vertex id");
            const auto v = parse_int<std::size_t>(toks[2], line_no, "vertex id");
            if (u >= out.n) {
                throw ParseError(line_no, toks[1].column, "endpoint " + std::to_string(u) + " out of range");
            }
            if (v >= out.n) {
                throw ParseError(line_no, toks[2].column, "endpoint " + std::to_string(v) + " out of range");
            }
            if (u == v) {
                throw ParseError(line_no, toks[1].column, "self-loop on " + std::to_string(u));
            }
            if (!out.graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
                throw ParseError(line_no, toks[1].column,
                                 "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            }
            ++edges;
            continue;
        }
        throw ParseError(line_no, toks[0].column, "unknown line type '" + std::string(toks[0].text) + "'");
    }
    if (!have_header) {
        throw ParseError(line_no, 1, "missing header");
    }
    if (edges != out.m) {
        throw ParseError(line_no, 1,
                         "header declares " + std::to_string(out.m) + " edges, found " + std::to_string(edges));
    }
    return out;
}

}  // namespace

FamilySpec parse_family(std::string_view token) {
    return parse_family_at(token, 1, 1);
}

Instance parse_instance(std::string_view text) {
    Parsed p = parse_lines(text, "dfed");
    return {std::move(p.graph), p.k, *p.family};
}

Graph compacted(const Graph& g) {
    const VertexSet ids = g.vertices();
    Graph out(ids.size());
    auto index = [&](VertexId v) {
        return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    for (const EdgeKey& e : g.edges()) {
        out.add_edge(index(e.u()), index(e.v()));
    }
    return out;
}

namespace {

std::string edge_lines(const Graph& g) {
    std::string out;
    for (const EdgeKey& e : g.edges()) {
        out += "e " + std::to_string(e.u()) + " " + std::to_string(e.v()) + "\n";
    }
    return out;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    const Graph g = compacted(inst.graph);
    return "p dfed " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + " " +
           std::to_string(inst.k) + " " + inst.family.token() + "\n" + edge_lines(g);
}

VcInstance parse_vc_instance(std::string_view text) {
    Parsed p = parse_lines(text, "vc");
    return {std::move(p.graph), p.k};
}

std::string serialize_vc_instance(const Graph& g, int k) {
    const Graph c = compacted(g);
    return "p vc " + std::to_string(c.num_vertices()) + " " + std::to_string(c.num_edges()) + " " +
           std::to_string(k) + "\n" + edge_lines(c);
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace dfed
