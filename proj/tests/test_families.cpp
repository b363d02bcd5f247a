#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "atn/families.hpp"
#include "atn/isomorphism.hpp"
#include "oracles.hpp"

using namespace atn;

namespace {

std::set<std::vector<Arc>> arc_sets(const std::vector<Digraph>& ds) {
    std::set<std::vector<Arc>> out;
    for (const Digraph& d : ds) out.insert(d.arcs());
    return out;
}

template <class Enumeration>
std::vector<Digraph> materialize(const Enumeration& e) {
    std::vector<Digraph> out;
    out.reserve(e.size());
    for (std::uint64_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
    return out;
}

}  // namespace

TEST_CASE("path and cycle generators") {
    CHECK(directed_path(1) == Digraph(1, {}));
    CHECK(directed_path(2) == Digraph(2, {{0, 1}}));
    CHECK(directed_path(3) == Digraph(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(directed_path(0), std::invalid_argument);

    CHECK(directed_cycle(3) == Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    const Digraph c4 = directed_cycle(4);
    CHECK(c4.arc_count() == 4);
    for (int u = 0; u < 4; ++u) {
        CHECK(c4.out_degree(u) == 1);
        CHECK(c4.in_degree(u) == 1);
    }
    CHECK(directed_cycle(2, true) == Digraph(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(directed_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(directed_cycle(1, true), std::invalid_argument);
}

TEST_CASE("symmetric digraph of a graph") {
    CHECK(symmetric_digraph(2, {{0, 1}}).arc_count() == 2);
    CHECK(symmetric_digraph(3, {{0, 1}, {1, 2}, {0, 2}}).arc_count() == 6);
    CHECK(symmetric_digraph(3, {}) == Digraph(3, {}));
    CHECK_THROWS_AS(symmetric_digraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_digraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("pruefer decoding") {
    CHECK(tree_from_pruefer({0}, 3) == EdgeList{{0, 1}, {0, 2}});
    CHECK(tree_from_pruefer({}, 2) == EdgeList{{0, 1}});
    CHECK(tree_from_pruefer({1, 1}, 4) == EdgeList{{0, 1}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(tree_from_pruefer({0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_pruefer({3}, 3), std::invalid_argument);
}

TEST_CASE("pruefer decode then encode is the identity") {
    std::mt19937 rng(555);
    for (int n = 3; n <= 8; ++n) {
        std::uniform_int_distribution<int> entry(0, n - 1);
        for (int round = 0; round < 50; ++round) {
            std::vector<int> seq(n - 2);
            for (int& s : seq) s = entry(rng);
            CHECK(pruefer_from_tree(n, tree_from_pruefer(seq, n)) == seq);
        }
    }
}

TEST_CASE("oriented tree counts follow Cayley's formula") {
    CHECK(oriented_trees(1).size() == 1);
    CHECK(oriented_trees(2).size() == 2);
    CHECK(oriented_trees(3).size() == 12);
    CHECK(oriented_trees(4).size() == 128);
    for (int n = 2; n <= 6; ++n) {
        const auto e = oriented_trees(n);
        std::uint64_t cayley = 1;
        for (int i = 0; i < n - 2; ++i) cayley *= n;
        CHECK(e.labeled_trees == cayley);
        CHECK(e.size() == cayley * (std::uint64_t{1} << (n - 1)));
    }
    CHECK_THROWS_AS(oriented_trees(0), std::invalid_argument);
    CHECK_THROWS_AS(oriented_trees(9), std::invalid_argument);
    CHECK(oriented_trees(9, true).size() > 0);
}

TEST_CASE("every enumerated oriented tree is an oriented tree") {
    for (int n = 1; n <= 5; ++n) {
        const auto e = oriented_trees(n);
        std::set<std::vector<Arc>> distinct;
        for (std::uint64_t i = 0; i < e.size(); ++i) {
            const Digraph d = e.at(i);
            CHECK(d.order() == n);
            CHECK(d.arc_count() == n - 1);
            CHECK(d.is_oriented());
            CHECK(is_weakly_connected(d));
            distinct.insert(d.arcs());
        }
        CHECK(distinct.size() == e.size());  // no member repeats
    }
}

TEST_CASE("oriented tree enumeration matches brute force at n = 4") {
    const auto enumerated = arc_sets(materialize(oriented_trees(4)));
    const auto brute = arc_sets(oracle::digraphs_with_arc_count(4, 3, [](const Digraph& d) {
        return d.is_oriented() && is_weakly_connected(d);
    }));
    // 3 distinct undirected edges + connected on 4 vertices = a tree
    CHECK(enumerated == brute);
    CHECK(brute.size() == 128);
}

TEST_CASE("labeled unicyclic graph counts") {
    CHECK(unicyclic_graph_list(3).size() == 1);
    CHECK(unicyclic_graph_list(4).size() == 15);
    CHECK(unicyclic_graph_list(5).size() == 222);
    CHECK(unicyclic_graph_list(6).size() == 3660);
}

TEST_CASE("unicyclic enumeration matches the definition's brute-force filter at n = 4") {
    const auto enumerated = arc_sets(materialize(unicyclic_digraphs(4)));
    const auto brute = arc_sets(oracle::digraphs_with_arc_count(4, 4, [](const Digraph& d) {
        if (!d.is_oriented() || !is_weakly_connected(d)) return false;
        // 4 distinct underlying edges, connected, 4 vertices: exactly one cycle
        std::set<std::pair<int, int>> edges;
        for (const Arc& a : d.arcs())
            edges.insert({std::min(a.first, a.second), std::max(a.first, a.second)});
        return edges.size() == 4;
    }));
    CHECK(enumerated == brute);
    CHECK(brute.size() == 240);
}

TEST_CASE("U(3) members and the two directed triangles") {
    const auto members = materialize(unicyclic_digraphs(3));
    CHECK(members.size() == 8);
    int directed_triangles = 0;
    for (const Digraph& d : members) {
        CHECK(d.arc_count() == 3);
        CHECK(d.is_oriented());
        if (is_isomorphic(d, directed_cycle(3))) ++directed_triangles;
    }
    CHECK(directed_triangles == 2);
    CHECK_THROWS_AS(unicyclic_digraphs(2), std::invalid_argument);
    CHECK_THROWS_AS(unicyclic_digraphs(8), std::invalid_argument);
}

TEST_CASE("path and cycle appear in their enumerations") {
    bool path_found = false;
    const auto t4 = oriented_trees(4);
    for (std::uint64_t i = 0; i < t4.size(); ++i)
        if (is_isomorphic(t4.at(i), directed_path(4))) {
            path_found = true;
            break;
        }
    CHECK(path_found);

    bool cycle_found = false;
    const auto u4 = unicyclic_digraphs(4);
    for (std::uint64_t i = 0; i < u4.size(); ++i)
        if (is_isomorphic(u4.at(i), directed_cycle(4))) {
            cycle_found = true;
            break;
        }
    CHECK(cycle_found);
}

TEST_CASE("isomorphism class dedupe") {
    CHECK(isomorphism_classes(oriented_trees(2)).size() == 1);
    // 3 classes on 3 vertices: directed path, out-star, in-star
    CHECK(isomorphism_classes(oriented_trees(3)).size() == 3);
    // on 4 vertices: 4 path orientations (arrow strings up to reversal with
    // flip) + 4 star orientations (0..3 arcs leaving the centre)
    CHECK(isomorphism_classes(oriented_trees(4)).size() == 8);
    // triangle orientations: the directed triangle and the transitive one
    CHECK(isomorphism_classes(unicyclic_digraphs(3)).size() == 2);
}

TEST_CASE("consistently directed cycle detection") {
    CHECK(has_consistently_directed_cycle(directed_cycle(3)));
    CHECK(has_consistently_directed_cycle(directed_cycle(5)));
    CHECK(has_consistently_directed_cycle(Digraph(3, {{1, 0}, {2, 1}, {0, 2}})));  // reversed C3
    CHECK_FALSE(has_consistently_directed_cycle(Digraph(3, {{0, 1}, {2, 1}, {2, 0}})));
    CHECK_FALSE(has_consistently_directed_cycle(directed_path(4)));  // no cycle at all

    // cycle with a pendant vertex, still consistently directed
    CHECK(has_consistently_directed_cycle(Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}})));

    int consistent = 0;
    const auto u3 = unicyclic_digraphs(3);
    for (std::uint64_t i = 0; i < u3.size(); ++i)
        consistent += has_consistently_directed_cycle(u3.at(i));
    CHECK(consistent == 2);
}
