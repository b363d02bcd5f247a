#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atn/digraph.hpp"
#include "atn/isomorphism.hpp"

namespace atn {

using EdgeList = std::vector<std::pair<int, int>>;

enum class Family { directed_path, directed_cycle, oriented_trees, unicyclic, symmetric_of_graph };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::directed_path: return "path";
        case Family::directed_cycle: return "cycle";
        case Family::oriented_trees: return "trees";
        case Family::unicyclic: return "unicyclic";
        case Family::symmetric_of_graph: return "symmetric";
    }
    return "?";
}

struct FamilySpec {
    Family family = Family::oriented_trees;
    int n = 0;
    bool dedupe = false;
};

/// P_n: arcs (0,1), (1,2), ..., (n-2, n-1).
inline Digraph directed_path(int n) {
    if (n < 1) throw std::invalid_argument("directed path needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
    return Digraph(n, std::move(arcs));
}

/// C_n: arcs (i, (i+1) mod n). n = 2 creates a symmetric pair and is only
/// allowed with `allow_digon`.
inline Digraph directed_cycle(int n, bool allow_digon = false) {
    if (n < 2 || (n == 2 && !allow_digon))
        throw std::invalid_argument("directed cycle needs n >= 3 (n = 2 only with the digon flag)");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph(n, std::move(arcs));
}

/// Symmetric digraph of a simple graph: each edge {u,v} becomes both arcs.
inline Digraph symmetric_digraph(int n, const EdgeList& edges) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});  // Digraph ctor rejects loops and duplicates
    }
    return Digraph(n, std::move(arcs));
}

/// Decode a Pruefer sequence (length n-2, entries in [0,n)) into the edge
/// list of the unique labeled tree, edges normalized (u < v) and sorted.
inline EdgeList tree_from_pruefer(const std::vector<int>& seq, int n) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    if (static_cast<int>(seq.size()) != std::max(n - 2, 0))
        throw std::invalid_argument("Pruefer sequence must have length n-2");
    for (int s : seq)
        if (s < 0 || s >= n) throw std::invalid_argument("Pruefer entry out of range");
    if (n == 1) return {};

    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    EdgeList edges;
    edges.reserve(n - 1);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) {
                leaf = v;
                break;
            }
        edges.push_back({std::min(leaf, s), std::max(leaf, s)});
        degree[leaf] = 0;
        --degree[s];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) (a < 0 ? a : b) = v;
    edges.push_back({std::min(a, b), std::max(a, b)});
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Inverse of tree_from_pruefer.
inline std::vector<int> pruefer_from_tree(int n, EdgeList edges) {
    if (n < 2) return {};
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("tree must have n-1 edges");
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (adj[v].size() == 1) {
                leaf = v;
                break;
            }
        int parent = *adj[leaf].begin();
        seq.push_back(parent);
        adj[leaf].clear();
        adj[parent].erase(leaf);
    }
    return seq;
}

namespace families_detail {

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::invalid_argument("family too large");
        r *= base;
    }
    return r;
}

}  // namespace families_detail

/// Indexed enumeration of T(n): all labeled oriented trees, as
/// (Pruefer index) x (orientation bits over the sorted edge list).
/// n^(n-2) * 2^(n-1) digraphs; random access keeps sweeps partitionable.
struct OrientedTrees {
    int n = 0;
    std::uint64_t labeled_trees = 0;
    std::uint64_t orientations = 0;

    std::uint64_t size() const { return labeled_trees * orientations; }

    Digraph at(std::uint64_t index) const {
        std::uint64_t tree_index = index / orientations;
        std::uint64_t bits = index % orientations;
        std::vector<int> seq(std::max(n - 2, 0));
        for (int i = 0; i < n - 2; ++i) {
            seq[i] = static_cast<int>(tree_index % n);
            tree_index /= n;
        }
        const EdgeList edges = tree_from_pruefer(seq, n);
        std::vector<Arc> arcs;
        arcs.reserve(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (bits >> e & 1)
                arcs.push_back({v, u});
            else
                arcs.push_back({u, v});
        }
        return Digraph(n, std::move(arcs));
    }
};

inline OrientedTrees oriented_trees(int n, bool force = false) {
    if (n < 1) throw std::invalid_argument("oriented trees need n >= 1");
    if (n > 8 && !force)
        throw std::invalid_argument("oriented tree enumeration guarded at n <= 8 (use force)");
    if (n > 16) throw std::invalid_argument("oriented tree enumeration capped at n <= 16");
    OrientedTrees t;
    t.n = n;
    t.labeled_trees = n >= 2 ? families_detail::checked_pow(n, n - 2) : 1;
    t.orientations = families_detail::checked_pow(2, n - 1);
    return t;
}

/// All labeled connected unicyclic simple graphs on n vertices (exactly n
/// edges, one cycle, cycle length >= 3), as sorted normalized edge lists.
/// Built as spanning tree + one extra edge, deduplicated.
inline std::vector<EdgeList> unicyclic_graph_list(int n) {
    std::set<EdgeList> out;
    const std::uint64_t trees = n >= 2 ? families_detail::checked_pow(n, n - 2) : 1;
    std::vector<int> seq(std::max(n - 2, 0));
    for (std::uint64_t t = 0; t < trees; ++t) {
        std::uint64_t x = t;
        for (int i = 0; i < n - 2; ++i) {
            seq[i] = static_cast<int>(x % n);
            x /= n;
        }
        EdgeList tree = tree_from_pruefer(seq, n);
        std::set<std::pair<int, int>> present(tree.begin(), tree.end());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (present.count({u, v})) continue;
                EdgeList g = tree;
                g.push_back({u, v});
                std::sort(g.begin(), g.end());
                out.insert(std::move(g));
            }
    }
    return {out.begin(), out.end()};
}

/// Indexed enumeration of U(n): every orientation of every labeled connected
/// unicyclic graph. Orientations never create symmetric pairs, so each one
/// is an oriented digraph with n arcs and exactly one underlying cycle.
struct UnicyclicDigraphs {
    int n = 0;
    std::vector<EdgeList> graphs;
    std::uint64_t orientations = 0;

    std::uint64_t size() const { return graphs.size() * orientations; }

    Digraph at(std::uint64_t index) const {
        const EdgeList& edges = graphs[index / orientations];
        std::uint64_t bits = index % orientations;
        std::vector<Arc> arcs;
        arcs.reserve(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (bits >> e & 1)
                arcs.push_back({v, u});
            else
                arcs.push_back({u, v});
        }
        return Digraph(n, std::move(arcs));
    }
};

inline UnicyclicDigraphs unicyclic_digraphs(int n, bool force = false) {
    if (n < 3) throw std::invalid_argument("unicyclic digraphs need n >= 3");
    if (n > 7 && !force)
        throw std::invalid_argument("unicyclic enumeration guarded at n <= 7 (use force)");
    if (n > 10) throw std::invalid_argument("unicyclic enumeration capped at n <= 10");
    UnicyclicDigraphs u;
    u.n = n;
    u.graphs = unicyclic_graph_list(n);
    u.orientations = families_detail::checked_pow(2, n);
    return u;
}

/// Fold any indexed enumeration sequentially.
template <class Enumeration, class Fn>
void for_each(const Enumeration& e, Fn&& fn) {
    for (std::uint64_t i = 0; i < e.size(); ++i) fn(e.at(i));
}

/// One canonical representative per isomorphism class, in first-seen order.
template <class Enumeration>
std::vector<Digraph> isomorphism_classes(const Enumeration& e) {
    std::set<std::vector<Arc>> seen;
    std::vector<Digraph> reps;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        std::vector<Arc> canon = canonical_arcs(e.at(i));
        if (seen.insert(canon).second) reps.push_back(Digraph(e.n, std::move(canon)));
    }
    return reps;
}

/// For a digraph whose underlying graph has exactly one cycle: true iff the
/// cycle's arcs run consistently one way around. Used as a sensitivity check
/// on the unicyclic extremal sweep.
inline bool has_consistently_directed_cycle(const Digraph& d) {
    const int n = d.order();
    std::vector<std::set<int>> adj(n);
    for (const Arc& a : d.arcs()) {
        adj[a.first].insert(a.second);
        adj[a.second].insert(a.first);
    }
    // Strip leaves until only the cycle remains.
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() == 1) stack.push_back(v);
    std::vector<bool> gone(n, false);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (gone[v] || adj[v].size() != 1) continue;
        gone[v] = true;
        int w = *adj[v].begin();
        adj[v].clear();
        adj[w].erase(v);
        if (!gone[w] && adj[w].size() == 1) stack.push_back(w);
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!gone[v] && adj[v].size() == 2) {
            start = v;
            break;
        }
    if (start < 0) return false;
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev && !gone[w]) {
                next = w;
                break;
            }
        if (next == start || next < 0) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
    }
    if (cycle.size() < 3) return false;
    bool forward = true, backward = true;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        forward = forward && d.has_arc(u, v);
        backward = backward && d.has_arc(v, u);
    }
    return forward || backward;
}

}  // namespace atn
