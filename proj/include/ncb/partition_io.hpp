#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ncb/community.hpp"
#include "ncb/error.hpp"
#include "ncb/graph.hpp"

namespace ncb {

// CSV partition format: header `node,community`, one row per node using
// external labels, community ids dense from 0. Ground-truth files use the
// same format.
inline void write_partition_csv(std::ostream& out, const graph& g, const partition& p) {
    out << "node,community\n";
    for (node_id v = 0; v < g.n(); ++v) out << g.label(v) << "," << p.community_of(v) << "\n";
}

// JSON: communities as arrays of external labels, in community-id order.
inline void write_partition_json(std::ostream& out, const graph& g, const partition& p) {
    auto escape = [](const std::string& s) {
        std::string o;
        for (char c : s) {
            if (c == '"' || c == '\\') o.push_back('\\');
            o.push_back(c);
        }
        return o;
    };
    out << "{\"communities\":[";
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (c) out << ",";
        out << "[";
        const auto& members = p.at(static_cast<std::uint32_t>(c)).members;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out << ",";
            out << "\"" << escape(g.label(members[i])) << "\"";
        }
        out << "]";
    }
    out << "]}\n";
}

// Reads the CSV partition format back. Ids are preserved exactly (so a
// write → read round trip reproduces the partition); they must be dense
// from 0 and every node must appear exactly once.
inline partition read_partition_csv(std::istream& in, const graph& g) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("partition csv: empty file");
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line != "node,community") throw parse_error("partition csv: expected header 'node,community'");
    std::vector<std::int64_t> labels(g.n(), -1);
    std::size_t line_no = 1, rows = 0;
    std::int64_t max_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.size() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t comma = line.rfind(',');
        if (comma == std::string::npos)
            throw parse_error("partition csv line " + std::to_string(line_no) + ": expected 'node,community'");
        std::string node_label = line.substr(0, comma);
        std::string comm_text = line.substr(comma + 1);
        node_id v = g.find_label(node_label);
        if (v >= g.n())
            throw parse_error("partition csv line " + std::to_string(line_no) + ": unknown node '" + node_label + "'");
        if (labels[v] != -1)
            throw parse_error("partition csv line " + std::to_string(line_no) + ": node '" + node_label + "' listed twice");
        try {
            std::size_t used = 0;
            std::int64_t c = std::stoll(comm_text, &used);
            if (used != comm_text.size() || c < 0) throw std::invalid_argument("");
            labels[v] = c;
            max_id = std::max(max_id, c);
        } catch (const std::exception&) {
            throw parse_error("partition csv line " + std::to_string(line_no) + ": bad community id '" + comm_text + "'");
        }
        ++rows;
    }
    if (rows != g.n()) throw domain_error("partition csv: covers " + std::to_string(rows) + " of " +
                                          std::to_string(g.n()) + " nodes");
    std::vector<char> seen(static_cast<std::size_t>(max_id) + 1, 0);
    for (std::int64_t l : labels) seen[static_cast<std::size_t>(l)] = 1;
    for (std::size_t c = 0; c < seen.size(); ++c)
        if (!seen[c]) throw parse_error("partition csv: community ids not dense (missing " + std::to_string(c) + ")");

    partition p(g.n());
    std::vector<std::int64_t> first_member(static_cast<std::size_t>(max_id) + 1, -1);
    for (node_id v = 0; v < g.n(); ++v)
        if (first_member[static_cast<std::size_t>(labels[v])] == -1)
            first_member[static_cast<std::size_t>(labels[v])] = v;
    // create communities in id order so ids survive the round trip
    for (std::size_t c = 0; c < first_member.size(); ++c)
        p.add_community(g, static_cast<node_id>(first_member[c]));
    for (node_id v = 0; v < g.n(); ++v)
        if (!p.assigned(v)) p.assign(g, v, static_cast<std::uint32_t>(labels[v]));
    return p;
}

}  // namespace ncb
