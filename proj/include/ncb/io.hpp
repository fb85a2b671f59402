#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "ncb/error.hpp"
#include "ncb/graph.hpp"

namespace ncb {

struct loaded_graph {
    graph g;
    graph_builder::load_stats stats;
};

struct edge_list_options {
    std::string comment_prefix = "#";
    char delimiter = '\0';  // '\0' = any run of whitespace
};

// One edge per line: two tokens (endpoint labels). Lines starting with the
// comment prefix are ignored. Duplicates, reverse duplicates, and
// self-loops are dropped with counts.
inline loaded_graph load_edge_list(std::istream& in, const edge_list_options& options = {}) {
    graph_builder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (!options.comment_prefix.empty() &&
            line.compare(start, options.comment_prefix.size(), options.comment_prefix) == 0)
            continue;
        std::string a, b, extra;
        if (options.delimiter == '\0') {
            std::istringstream row(line);
            row >> a >> b;
            if (b.empty()) throw parse_error("edge list line " + std::to_string(line_no) + ": expected two tokens");
        } else {
            std::istringstream row(line);
            if (!std::getline(row, a, options.delimiter) || !std::getline(row, b, options.delimiter) || a.empty() || b.empty())
                throw parse_error("edge list line " + std::to_string(line_no) + ": expected two fields");
            while (!b.empty() && (b.back() == '\r' || b.back() == '\n')) b.pop_back();
        }
        builder.add(a, b);
    }
    loaded_graph out;
    out.g = builder.build(&out.stats);
    return out;
}

namespace detail {

// Minimal GML tokenizer: identifiers/keywords, integers, brackets.
struct gml_tokens {
    std::vector<std::string> items;

    explicit gml_tokens(std::istream& in) {
        std::string tok;
        char c;
        auto flush = [&] {
            if (!tok.empty()) {
                items.push_back(tok);
                tok.clear();
            }
        };
        bool in_string = false;
        while (in.get(c)) {
            if (in_string) {
                if (c == '"') {
                    in_string = false;
                    items.push_back(tok);  // keeps key/value pairing intact
                    tok.clear();
                } else {
                    tok.push_back(c);
                }
                continue;
            }
            if (c == '"') {
                flush();
                in_string = true;
                tok = "\"";  // marks the token as a string value, never a keyword
            } else if (c == '[' || c == ']') {
                flush();
                items.push_back(std::string(1, c));
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else {
                tok.push_back(c);
            }
        }
        flush();
    }
};

}  // namespace detail

// GML subset: a graph block containing node blocks with integer `id` and
// edge blocks with integer `source`/`target`. Other attributes are skipped.
inline loaded_graph load_gml(std::istream& in) {
    detail::gml_tokens tokens(in);
    const auto& t = tokens.items;
    std::size_t i = 0;
    auto expect = [&](const std::string& what) {
        if (i >= t.size()) throw parse_error("gml: unexpected end of input, expected " + what);
    };
    while (i < t.size() && t[i] != "graph") ++i;
    if (i == t.size()) throw parse_error("gml: no graph block");
    ++i;
    expect("'[' after graph");
    if (t[i] != "[") throw parse_error("gml: expected '[' after graph");
    ++i;

    graph_builder builder;
    std::vector<std::pair<std::string, std::string>> edges;
    bool saw_node = false;
    int depth = 1;

    auto parse_block = [&](const char* kind) {
        // positioned after the block keyword; returns collected key→value
        // pairs for integer-valued keys at depth 1 of the block
        expect(std::string("'[' after ") + kind);
        if (t[i] != "[") throw parse_error(std::string("gml: expected '[' after ") + kind);
        ++i;
        std::vector<std::pair<std::string, std::string>> kv;
        int d = 1;
        while (d > 0) {
            expect("']'");
            if (t[i] == "[") {
                ++d;
                ++i;
            } else if (t[i] == "]") {
                --d;
                ++i;
            } else {
                std::string key = t[i++];
                if (i < t.size() && t[i] != "[" && t[i] != "]") {
                    if (d == 1) kv.emplace_back(key, t[i]);
                    ++i;
                }
            }
        }
        return kv;
    };
    auto find_key = [](const std::vector<std::pair<std::string, std::string>>& kv, const char* key) {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        return std::string();
    };
    auto require_int = [](const std::string& s, const char* what) {
        if (s.empty()) throw parse_error(std::string("gml: missing ") + what);
        for (std::size_t p = (s[0] == '-' ? 1 : 0); p < s.size(); ++p)
            if (!std::isdigit(static_cast<unsigned char>(s[p])))
                throw parse_error(std::string("gml: non-integer ") + what + " '" + s + "'");
        return s;
    };

    while (depth > 0) {
        expect("']' closing graph block");
        if (t[i] == "node") {
            ++i;
            auto kv = parse_block("node");
            builder.intern(require_int(find_key(kv, "id"), "node id"));
            saw_node = true;
        } else if (t[i] == "edge") {
            ++i;
            auto kv = parse_block("edge");
            edges.emplace_back(require_int(find_key(kv, "source"), "edge source"),
                               require_int(find_key(kv, "target"), "edge target"));
        } else if (t[i] == "[") {
            ++depth;
            ++i;
        } else if (t[i] == "]") {
            --depth;
            ++i;
        } else {
            ++i;  // scalar attribute at graph level (directed 0, labels, ...)
            if (i < t.size() && t[i] != "[" && t[i] != "]") ++i;
        }
    }
    if (!saw_node) throw parse_error("gml: graph block has no node blocks");
    for (const auto& [s, tgt] : edges) {
        if (!builder.knows(s)) throw parse_error("gml: edge source " + s + " has no node block");
        if (!builder.knows(tgt)) throw parse_error("gml: edge target " + tgt + " has no node block");
        builder.add(s, tgt);
    }
    loaded_graph out;
    out.g = builder.build(&out.stats);
    return out;
}

}  // namespace ncb
