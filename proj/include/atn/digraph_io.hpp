#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "atn/digraph.hpp"
#include "atn/errors.hpp"

namespace atn {

// Text format, shared by every CLI command:
//   line 1: "n m", then m lines "u v" (0-indexed). Lines starting with '#'
//   and blank lines are ignored. Several digraphs in one stream are
//   separated by a line that is exactly "---".

namespace io_detail {

inline bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

inline bool is_comment(const std::string& s) {
    auto pos = s.find_first_not_of(" \t\r");
    return pos != std::string::npos && s[pos] == '#';
}

inline bool is_separator(const std::string& s) {
    std::string t = s;
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ' || t.back() == '\t')) t.pop_back();
    return t == "---";
}

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next content line, skipping blanks and comments. Returns false at EOF.
    bool next(std::string& out) {
        std::string s;
        while (std::getline(in, s)) {
            ++line_no;
            if (is_blank(s) || is_comment(s)) continue;
            out = s;
            return true;
        }
        return false;
    }
};

inline void parse_ints(const std::string& s, int line, int count, int* out) {
    std::istringstream iss(s);
    for (int i = 0; i < count; ++i) {
        if (!(iss >> out[i])) throw ParseError(line, "expected " + std::to_string(count) + " integers, got '" + s + "'");
    }
    std::string extra;
    if (iss >> extra) throw ParseError(line, "trailing token '" + extra + "'");
}

// Reads one "n m" + m pair document. Returns raw (n, pairs); pair-level
// validation (loops, duplicates, range) is done here so errors carry line
// numbers; directedness of the pairs is up to the caller.
struct RawDocument {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_lines;  // source line of each pair
};

inline bool parse_raw(LineReader& r, RawDocument& doc, bool allow_separator_start) {
    std::string s;
    if (!r.next(s)) return false;
    if (allow_separator_start && is_separator(s)) {
        if (!r.next(s)) return false;
    }
    int header[2];
    parse_ints(s, r.line_no, 2, header);
    if (header[0] < 0) throw ParseError(r.line_no, "vertex count must be nonnegative");
    if (header[1] < 0) throw ParseError(r.line_no, "arc count must be nonnegative");
    doc.n = header[0];
    doc.pairs.clear();
    doc.pair_lines.clear();
    for (int i = 0; i < header[1]; ++i) {
        if (!r.next(s)) throw ParseError(r.line_no + 1, "expected " + std::to_string(header[1]) + " arcs, got " + std::to_string(i));
        if (is_separator(s)) throw ParseError(r.line_no, "separator before all arcs were read");
        int uv[2];
        parse_ints(s, r.line_no, 2, uv);
        if (uv[0] < 0 || uv[0] >= doc.n || uv[1] < 0 || uv[1] >= doc.n)
            throw ParseError(r.line_no, "endpoint out of range [0," + std::to_string(doc.n) + ")");
        if (uv[0] == uv[1]) throw ParseError(r.line_no, "loop not allowed");
        doc.pairs.push_back({uv[0], uv[1]});
        doc.pair_lines.push_back(r.line_no);
    }
    return true;
}

}  // namespace io_detail

/// Parse a single digraph; trailing non-comment content is an error.
inline Digraph parse_digraph(std::istream& in) {
    io_detail::LineReader r{in};
    io_detail::RawDocument doc;
    if (!io_detail::parse_raw(r, doc, false)) throw ParseError(1, "empty input");
    for (size_t i = 0; i < doc.pairs.size(); ++i)
        for (size_t j = i + 1; j < doc.pairs.size(); ++j)
            if (doc.pairs[i] == doc.pairs[j]) throw ParseError(doc.pair_lines[j], "duplicate arc");
    std::string s;
    if (r.next(s)) throw ParseError(r.line_no, "trailing content '" + s + "'");
    return Digraph(doc.n, std::move(doc.pairs));
}

inline Digraph parse_digraph(const std::string& text) {
    std::istringstream iss(text);
    return parse_digraph(iss);
}

inline Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return parse_digraph(in);
}

/// Parse a stream of digraphs separated by "---" lines.
inline std::vector<Digraph> parse_digraph_stream(std::istream& in) {
    io_detail::LineReader r{in};
    std::vector<Digraph> result;
    io_detail::RawDocument doc;
    bool first = true;
    while (io_detail::parse_raw(r, doc, !first)) {
        for (size_t i = 0; i < doc.pairs.size(); ++i)
            for (size_t j = i + 1; j < doc.pairs.size(); ++j)
                if (doc.pairs[i] == doc.pairs[j]) throw ParseError(doc.pair_lines[j], "duplicate arc");
        result.push_back(Digraph(doc.n, std::move(doc.pairs)));
        first = false;
    }
    return result;
}

inline std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.first << ' ' << a.second << '\n';
    return out.str();
}

inline void write_digraph_stream(std::ostream& out, const std::vector<Digraph>& ds) {
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) out << "---\n";
        out << format_digraph(ds[i]);
    }
}

/// Parse the same "n m" + pair format as a simple undirected graph
/// (each line one edge {u,v}); rejects loops and duplicate edges in either
/// written order. Used by the `symmetric` family.
inline std::pair<int, std::vector<std::pair<int, int>>> parse_undirected_graph(std::istream& in) {
    io_detail::LineReader r{in};
    io_detail::RawDocument doc;
    if (!io_detail::parse_raw(r, doc, false)) throw ParseError(1, "empty input");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < doc.pairs.size(); ++i) {
        auto e = doc.pairs[i];
        if (e.first > e.second) std::swap(e.first, e.second);
        for (const auto& seen : edges)
            if (seen == e) throw ParseError(doc.pair_lines[i], "duplicate edge");
        edges.push_back(e);
    }
    std::string s;
    if (r.next(s)) throw ParseError(r.line_no, "trailing content '" + s + "'");
    return {doc.n, std::move(edges)};
}

}  // namespace atn
