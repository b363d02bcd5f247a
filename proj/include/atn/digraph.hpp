#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atn {

using Arc = std::pair<int, int>;

/// Simple digraph on vertices {0, ..., n-1}: no loops, no parallel arcs.
/// A symmetric pair (u,v), (v,u) is allowed; `is_oriented` reports its absence.
/// Immutable after construction; mutating operations return new values.
class Digraph {
public:
    Digraph() = default;

    Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
        std::sort(arcs_.begin(), arcs_.end());
        out_deg_.assign(n_, 0);
        in_deg_.assign(n_, 0);
        const Arc* prev = nullptr;
        for (const Arc& a : arcs_) {
            if (a.first < 0 || a.first >= n_ || a.second < 0 || a.second >= n_)
                throw std::invalid_argument("arc endpoint out of range: " + arc_name(a));
            if (a.first == a.second)
                throw std::invalid_argument("loop not allowed: " + arc_name(a));
            if (prev && *prev == a)
                throw std::invalid_argument("duplicate arc: " + arc_name(a));
            prev = &a;
            ++out_deg_[a.first];
            ++in_deg_[a.second];
        }
    }

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
    }

    int out_degree(int u) const {
        check_vertex(u);
        return out_deg_[u];
    }

    int in_degree(int u) const {
        check_vertex(u);
        return in_deg_[u];
    }

    int total_degree(int u) const {
        check_vertex(u);
        return out_deg_[u] + in_deg_[u];
    }

    bool is_leaf(int u) const { return total_degree(u) == 1; }
    bool is_nonleaf(int u) const { return total_degree(u) >= 2; }

    bool is_oriented() const {
        for (const Arc& a : arcs_)
            if (a.first < a.second && has_arc(a.second, a.first)) return false;
        return true;
    }

    std::vector<int> out_neighbors(int u) const {
        check_vertex(u);
        std::vector<int> result;
        for (const Arc& a : arcs_)
            if (a.first == u) result.push_back(a.second);
        return result;
    }

    std::vector<int> in_neighbors(int u) const {
        check_vertex(u);
        std::vector<int> result;
        for (const Arc& a : arcs_)
            if (a.second == u) result.push_back(a.first);
        return result;
    }

    Digraph delete_arc(int u, int v) const {
        if (!has_arc(u, v))
            throw std::invalid_argument("no such arc: " + arc_name({u, v}));
        std::vector<Arc> rest;
        rest.reserve(arcs_.size() - 1);
        for (const Arc& a : arcs_)
            if (a != Arc{u, v}) rest.push_back(a);
        return Digraph(n_, std::move(rest));
    }

    Digraph add_arc(int u, int v) const {
        std::vector<Arc> all = arcs_;
        all.push_back({u, v});
        return Digraph(n_, std::move(all));  // constructor rejects duplicates/loops
    }

    /// Remove vertex u and its incident arcs; remaining vertices are relabelled
    /// to {0, ..., n-2} preserving relative order.
    Digraph delete_vertex(int u) const {
        check_vertex(u);
        std::vector<Arc> rest;
        rest.reserve(arcs_.size());
        for (const Arc& a : arcs_) {
            if (a.first == u || a.second == u) continue;
            rest.push_back({a.first - (a.first > u), a.second - (a.second > u)});
        }
        return Digraph(n_ - 1, std::move(rest));
    }

    /// Relabel with `perm` (a bijection; perm[old] = new).
    Digraph relabel(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw std::invalid_argument("permutation size mismatch");
        std::vector<Arc> mapped;
        mapped.reserve(arcs_.size());
        for (const Arc& a : arcs_) mapped.push_back({perm[a.first], perm[a.second]});
        return Digraph(n_, std::move(mapped));
    }

    bool operator==(const Digraph& other) const = default;

private:
    static std::string arc_name(const Arc& a) {
        return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
    }

    void check_vertex(int u) const {
        if (u < 0 || u >= n_)
            throw std::invalid_argument("vertex " + std::to_string(u) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_deg_;
    std::vector<int> in_deg_;
};

struct VertexDegrees {
    std::vector<int> out;
    std::vector<int> in;
};

inline VertexDegrees degree_table(const Digraph& d) {
    VertexDegrees t;
    t.out.reserve(d.order());
    t.in.reserve(d.order());
    for (int u = 0; u < d.order(); ++u) {
        t.out.push_back(d.out_degree(u));
        t.in.push_back(d.in_degree(u));
    }
    return t;
}

/// Connected components of the underlying undirected graph (arc directions
/// forgotten, symmetric pairs collapsed). Returns a component id per vertex,
/// ids numbered 0.. in order of first appearance.
inline std::vector<int> weak_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arc& a : d.arcs()) {
        int ru = find(a.first), rv = find(a.second);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
    std::vector<int> id(n, -1);
    int next = 0;
    for (int u = 0; u < n; ++u) {
        int r = find(u);
        if (id[r] < 0) id[r] = next++;
        id[u] = id[r];
    }
    return id;
}

inline int weak_component_count(const Digraph& d) {
    const auto id = weak_components(d);
    return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

inline bool is_weakly_connected(const Digraph& d) {
    return weak_component_count(d) <= 1;
}

inline Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    std::vector<Arc> arcs = a.arcs();
    for (const Arc& e : b.arcs()) arcs.push_back({e.first + a.order(), e.second + a.order()});
    return Digraph(a.order() + b.order(), std::move(arcs));
}

}  // namespace atn
