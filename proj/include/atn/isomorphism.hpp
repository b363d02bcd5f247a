#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "atn/digraph.hpp"

namespace atn {

namespace iso_detail {

// Iterated degree refinement. The resulting colors are isomorphism
// invariants, and their order is determined by invariant data only, so the
// ordered partition is comparable across digraphs.
inline std::vector<int> refine_colors(const Digraph& d) {
    const int n = d.order();
    std::vector<int> color(n, 0);
    {
        std::map<std::pair<int, int>, int> rank;
        for (int u = 0; u < n; ++u) rank[{d.out_degree(u), d.in_degree(u)}] = 0;
        int next = 0;
        for (auto& [key, id] : rank) id = next++;
        for (int u = 0; u < n; ++u) color[u] = rank.at({d.out_degree(u), d.in_degree(u)});
    }
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    for (int round = 0; round < n; ++round) {
        std::vector<Signature> sig(n);
        for (int u = 0; u < n; ++u) std::get<0>(sig[u]) = color[u];
        for (const Arc& a : d.arcs()) {
            std::get<1>(sig[a.first]).push_back(color[a.second]);   // out view
            std::get<2>(sig[a.second]).push_back(color[a.first]);   // in view
        }
        for (auto& s : sig) {
            std::sort(std::get<1>(s).begin(), std::get<1>(s).end());
            std::sort(std::get<2>(s).begin(), std::get<2>(s).end());
        }
        std::map<Signature, int> rank;
        for (const auto& s : sig) rank[s] = 0;
        int next = 0;
        for (auto& [key, id] : rank) id = next++;
        bool changed = false;
        for (int u = 0; u < n; ++u) {
            int c = rank.at(sig[u]);
            if (c != color[u]) changed = true;
            color[u] = c;
        }
        if (!changed) break;
    }
    return color;
}

}  // namespace iso_detail

/// Canonical arc list: the lexicographically smallest relabelled arc vector
/// over all vertex bijections compatible with the refined color classes.
/// Exhaustive within classes; intended for small n (<= 10 or so).
inline std::vector<Arc> canonical_arcs(const Digraph& d) {
    const int n = d.order();
    const std::vector<int> color = iso_detail::refine_colors(d);

    // Vertices grouped by color; labels are assigned blockwise in color order,
    // which any isomorphism must respect.
    int classes = n ? 1 + *std::max_element(color.begin(), color.end()) : 0;
    std::vector<std::vector<int>> members(classes);
    for (int u = 0; u < n; ++u) members[color[u]].push_back(u);

    std::vector<int> label(n, 0);
    std::vector<Arc> best, current;
    bool have_best = false;

    // Odometer over per-class permutations.
    auto assign_labels = [&]() {
        int next = 0;
        for (const auto& group : members)
            for (int u : group) label[u] = next++;
    };
    while (true) {
        assign_labels();
        current.clear();
        for (const Arc& a : d.arcs()) current.push_back({label[a.first], label[a.second]});
        std::sort(current.begin(), current.end());
        if (!have_best || current < best) {
            best = current;
            have_best = true;
        }
        int k = classes - 1;
        while (k >= 0 && !std::next_permutation(members[k].begin(), members[k].end())) --k;
        if (k < 0) break;
    }
    return best;
}

inline Digraph canonical_form(const Digraph& d) {
    return Digraph(d.order(), canonical_arcs(d));
}

/// True iff some vertex bijection maps the arcs of `a` onto the arcs of `b`.
inline bool is_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    auto degree_multiset = [](const Digraph& d) {
        std::vector<std::pair<int, int>> ds;
        for (int u = 0; u < d.order(); ++u) ds.push_back({d.out_degree(u), d.in_degree(u)});
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    if (degree_multiset(a) != degree_multiset(b)) return false;
    return canonical_arcs(a) == canonical_arcs(b);
}

}  // namespace atn
