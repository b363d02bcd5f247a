#pragma once

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atn/digraph_io.hpp"
#include "atn/variation.hpp"
#include "atn/verify.hpp"

namespace atn {

/// Shortest representation that round-trips the double exactly.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// 12 significant digits, trailing zeros trimmed ("%.12g").
inline std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

/// 12 significant digits with the point and zeros kept (scalar output).
inline std::string format_scalar12(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << std::showpoint << x;
    return out.str();
}

inline std::string arcs_field(const std::vector<Digraph>& classes) {
    std::string out;
    for (size_t c = 0; c < classes.size(); ++c) {
        if (c) out += '|';
        const auto& arcs = classes[c].arcs();
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (i) out += ';';
            out += std::to_string(arcs[i].first) + ' ' + std::to_string(arcs[i].second);
        }
    }
    return out;
}

inline std::string extremal_csv(const std::vector<ExtremalReport>& reports) {
    std::string out =
        "family,n,alpha,max_trace_norm,paper_bound,bound_attained,unique_maximizer,maximizer_arcs\n";
    for (const ExtremalReport& r : reports) {
        out += family_name(r.family.family);
        out += ',' + std::to_string(r.family.n);
        out += ',' + format_double(r.alpha);
        out += ',' + format_double(r.max_trace_norm);
        out += ',' + format_double(r.paper_bound);
        out += r.bound_attained ? ",true" : ",false";
        out += r.unique_maximizer ? ",true" : ",false";
        out += ",\"" + arcs_field(r.maximizers) + "\"\n";
    }
    return out;
}

inline nlohmann::ordered_json extremal_json(const std::vector<ExtremalReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ExtremalReport& r : reports) {
        nlohmann::ordered_json row;
        row["family"] = family_name(r.family.family);
        row["n"] = r.family.n;
        row["alpha"] = r.alpha;
        row["max_trace_norm"] = r.max_trace_norm;
        row["paper_bound"] = r.paper_bound;
        row["bound_attained"] = r.bound_attained;
        row["unique_maximizer"] = r.unique_maximizer;
        nlohmann::ordered_json certs = nlohmann::ordered_json::array();
        for (const Digraph& d : r.maximizers) certs.push_back(format_digraph(d));
        row["maximizers"] = certs;
        arr.push_back(std::move(row));
    }
    return arr;
}

inline nlohmann::ordered_json violation_json(const ArcViolation& v) {
    nlohmann::ordered_json row;
    row["digraph"] = format_digraph(v.digraph);
    row["arc"] = {v.arc.first, v.arc.second};
    row["alpha"] = v.alpha;
    row["slack"] = v.slack;
    row["equality_predicted"] = v.equality_predicted;
    row["equality_observed"] = v.equality_observed;
    row["reason"] = v.reason;
    return row;
}

inline nlohmann::ordered_json claim_violation_json(const ClaimViolation& v) {
    nlohmann::ordered_json row;
    row["family"] = family_name(v.family.family);
    row["n"] = v.family.n;
    row["alpha"] = v.alpha;
    row["what"] = v.what;
    return row;
}

inline const char* deletion_kind_name(DeletionKind k) {
    switch (k) {
        case DeletionKind::arc: return "arc";
        case DeletionKind::leaf_vertex: return "leaf_vertex";
        case DeletionKind::nonleaf_vertex: return "nonleaf_vertex";
    }
    return "?";
}

inline nlohmann::ordered_json deletion_report_json(const DeletionReport& r) {
    nlohmann::ordered_json row;
    row["kind"] = deletion_kind_name(r.kind);
    if (r.kind == DeletionKind::arc)
        row["arc"] = {r.arc.first, r.arc.second};
    else
        row["vertex"] = r.vertex;
    row["alpha"] = r.alpha;
    row["norm_before"] = r.norm_before;
    row["norm_after"] = r.norm_after;
    row["bound"] = r.bound;
    row["slack"] = r.slack;
    row["equality_predicted"] = r.equality_predicted;
    row["equality_observed"] = r.equality_observed;
    return row;
}

}  // namespace atn
