#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "atn/digraph.hpp"
#include "atn/spectra.hpp"

namespace atn {

/// f(alpha) = sqrt(2 alpha^2 - 2 alpha + 1): the largest possible drop in
/// trace norm from deleting one arc. Decreasing on [0, 1/2], increasing on
/// [1/2, 1); f(0) = 1, f(1/2) = sqrt(2)/2.
inline double arc_bound(double alpha) {
    validate_alpha(alpha);
    return std::sqrt(2.0 * alpha * alpha - 2.0 * alpha + 1.0);
}

enum class DeletionKind { arc, leaf_vertex, nonleaf_vertex };

// For leaf reports: which side of the equality characterization fired.
enum class LeafCase { none, out_arc, in_arc };

struct DeletionReport {
    DeletionKind kind;
    Arc arc{-1, -1};  // deleted arc (arc kind) or the leaf's incident arc
    int vertex = -1;  // deleted vertex (vertex kinds)
    double alpha = 0.0;
    double norm_before = 0.0;
    double norm_after = 0.0;
    double bound = 0.0;  // f(alpha), or d(u) * f(alpha) for nonleaf deletion
    double slack = 0.0;  // norm_after + bound - norm_before; >= 0 if the bound holds
    bool equality_predicted = false;  // the characterization's verdict
    bool equality_observed = false;   // |slack| <= tol
    LeafCase leaf_case = LeafCase::none;
};

/// Arc deletion: ||D_a||_* <= ||(D-uv)_a||_* + f(a), with equality predicted
/// iff a = 0 and d+(u) = d-(v) = 1.
inline DeletionReport arc_deletion_report(const Digraph& d, int u, int v, double alpha,
                                          double tol = kDefaultCompareTol) {
    validate_alpha(alpha);
    DeletionReport r;
    r.kind = DeletionKind::arc;
    r.arc = {u, v};
    r.alpha = alpha;
    r.norm_before = trace_norm(d, alpha);
    r.norm_after = trace_norm(d.delete_arc(u, v), alpha);  // throws if arc absent
    r.bound = arc_bound(alpha);
    r.slack = r.norm_after + r.bound - r.norm_before;
    r.equality_predicted = alpha == 0.0 && d.out_degree(u) == 1 && d.in_degree(v) == 1;
    r.equality_observed = std::abs(r.slack) <= tol;
    return r;
}

/// Leaf deletion: ||D_a||_* <= ||(D-u)_a||_* + f(a); equality predicted iff
/// a = 0 and either d+(u) = d-(v) = 1 or d-(u) = d+(v) = 1, v the unique
/// neighbour.
inline DeletionReport leaf_deletion_report(const Digraph& d, int u, double alpha,
                                           double tol = kDefaultCompareTol) {
    validate_alpha(alpha);
    if (!d.is_leaf(u))
        throw std::invalid_argument("vertex " + std::to_string(u) + " is not a leaf");
    DeletionReport r;
    r.kind = DeletionKind::leaf_vertex;
    r.vertex = u;
    r.alpha = alpha;
    if (d.out_degree(u) == 1) {
        const int v = d.out_neighbors(u).front();
        r.arc = {u, v};
        if (alpha == 0.0 && d.in_degree(v) == 1) r.leaf_case = LeafCase::out_arc;
    } else {
        const int v = d.in_neighbors(u).front();
        r.arc = {v, u};
        if (alpha == 0.0 && d.out_degree(v) == 1) r.leaf_case = LeafCase::in_arc;
    }
    r.norm_before = trace_norm(d, alpha);
    r.norm_after = trace_norm(d.delete_vertex(u), alpha);
    r.bound = arc_bound(alpha);
    r.slack = r.norm_after + r.bound - r.norm_before;
    r.equality_predicted = r.leaf_case != LeafCase::none;
    r.equality_observed = std::abs(r.slack) <= tol;
    return r;
}

/// Nonleaf deletion: ||D_a||_* <= ||(D-u)_a||_* + d(u) f(a); equality
/// predicted iff a = 0, d+(u) = d-(u) = 1, and the unique in-neighbour w1 has
/// d+(w1) = 1 while the unique out-neighbour w2 has d-(w2) = 1.
inline DeletionReport nonleaf_deletion_report(const Digraph& d, int u, double alpha,
                                              double tol = kDefaultCompareTol) {
    validate_alpha(alpha);
    if (!d.is_nonleaf(u))
        throw std::invalid_argument("vertex " + std::to_string(u) + " is not a nonleaf");
    DeletionReport r;
    r.kind = DeletionKind::nonleaf_vertex;
    r.vertex = u;
    r.alpha = alpha;
    r.norm_before = trace_norm(d, alpha);
    r.norm_after = trace_norm(d.delete_vertex(u), alpha);
    r.bound = d.total_degree(u) * arc_bound(alpha);
    r.slack = r.norm_after + r.bound - r.norm_before;
    r.equality_predicted = false;
    if (alpha == 0.0 && d.out_degree(u) == 1 && d.in_degree(u) == 1) {
        const int w1 = d.in_neighbors(u).front();
        const int w2 = d.out_neighbors(u).front();
        r.equality_predicted = d.out_degree(w1) == 1 && d.in_degree(w2) == 1;
    }
    r.equality_observed = std::abs(r.slack) <= tol;
    return r;
}

/// One arc report per arc, in lexicographic arc order.
inline std::vector<DeletionReport> all_arc_reports(const Digraph& d, double alpha,
                                                   double tol = kDefaultCompareTol) {
    std::vector<DeletionReport> reports;
    reports.reserve(d.arcs().size());
    for (const Arc& a : d.arcs())
        reports.push_back(arc_deletion_report(d, a.first, a.second, alpha, tol));
    return reports;
}

}  // namespace atn
