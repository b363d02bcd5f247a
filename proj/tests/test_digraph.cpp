#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "atn/digraph.hpp"
#include "atn/digraph_io.hpp"
#include "atn/families.hpp"
#include "atn/isomorphism.hpp"

using namespace atn;

namespace {

Digraph random_digraph(std::mt19937& rng, int max_n = 8) {
    std::uniform_int_distribution<int> nd(0, max_n);
    const int n = nd(rng);
    std::vector<Arc> arcs;
    std::uniform_int_distribution<int> coin(0, 3);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng) == 0) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("degree queries") {
    const Digraph p3 = directed_path(3);
    const Digraph c3 = directed_cycle(3);

    CHECK(p3.out_degree(0) == 1);
    CHECK(c3.out_degree(2) == 1);
    const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.out_degree(0) == 3);

    CHECK(p3.in_degree(0) == 0);
    CHECK(p3.in_degree(2) == 1);
    const Digraph sym_edge = symmetric_digraph(2, {{0, 1}});
    CHECK(sym_edge.in_degree(0) == 1);

    CHECK_THROWS_AS(p3.out_degree(3), std::invalid_argument);
    CHECK_THROWS_AS(p3.in_degree(-1), std::invalid_argument);
}

TEST_CASE("leaf and nonleaf predicates") {
    const Digraph p3 = directed_path(3);
    const Digraph c3 = directed_cycle(3);

    CHECK(p3.is_leaf(0));
    CHECK_FALSE(p3.is_leaf(1));
    CHECK(p3.is_nonleaf(1));
    for (int u = 0; u < 3; ++u) {
        CHECK_FALSE(c3.is_leaf(u));
        CHECK(c3.is_nonleaf(u));
    }
    const Digraph isolated(1, {});
    CHECK_FALSE(isolated.is_leaf(0));
    CHECK_FALSE(isolated.is_nonleaf(0));
    CHECK_THROWS_AS(p3.is_leaf(9), std::invalid_argument);
}

TEST_CASE("arc deletion") {
    const Digraph p2 = directed_path(2);
    CHECK(p2.delete_arc(0, 1) == Digraph(2, {}));

    const Digraph c3 = directed_cycle(3);
    CHECK(c3.delete_arc(2, 0) == directed_path(3));

    const Digraph pair(2, {{0, 1}, {1, 0}});
    CHECK(pair.delete_arc(0, 1) == Digraph(2, {{1, 0}}));

    CHECK_THROWS_AS(p2.delete_arc(1, 0), std::invalid_argument);
}

TEST_CASE("vertex deletion relabels compactly") {
    CHECK(directed_path(3).delete_vertex(2) == directed_path(2));
    CHECK(directed_cycle(3).delete_vertex(0) == Digraph(2, {{0, 1}}));
    CHECK(directed_path(2).delete_vertex(0) == Digraph(1, {}));
    CHECK_THROWS_AS(directed_path(2).delete_vertex(2), std::invalid_argument);
}

TEST_CASE("orientedness") {
    CHECK(directed_cycle(3).is_oriented());
    CHECK_FALSE(symmetric_digraph(3, {{0, 1}}).is_oriented());
    CHECK(Digraph(0, {}).is_oriented());
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(-1, {}), std::invalid_argument);
}

TEST_CASE("weak components") {
    CHECK(weak_component_count(directed_path(5)) == 1);
    CHECK(weak_component_count(Digraph(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(weak_component_count(Digraph(3, {})) == 3);
    CHECK(is_weakly_connected(directed_cycle(4)));
}

TEST_CASE("isomorphism on small digraphs") {
    const Digraph p3 = directed_path(3);
    CHECK(is_isomorphic(p3, Digraph(3, {{2, 0}, {0, 1}})));      // relabelled path
    CHECK(is_isomorphic(p3, Digraph(3, {{1, 0}, {2, 1}})));      // reversed labels
    CHECK_FALSE(is_isomorphic(p3, Digraph(3, {{1, 0}, {2, 0}})));  // in-star
    CHECK_FALSE(is_isomorphic(p3, directed_path(4)));
    CHECK(is_isomorphic(Digraph(0, {}), Digraph(0, {})));
}

TEST_CASE("degree sums and deletion properties hold on random digraphs") {
    std::mt19937 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        const Digraph d = random_digraph(rng);
        int out_sum = 0, in_sum = 0, with_degree = 0;
        for (int u = 0; u < d.order(); ++u) {
            out_sum += d.out_degree(u);
            in_sum += d.in_degree(u);
            // is_leaf XOR is_nonleaf exactly when the vertex is not isolated
            CHECK((d.is_leaf(u) != d.is_nonleaf(u)) == (d.total_degree(u) >= 1));
            with_degree += d.total_degree(u) >= 1;
        }
        CHECK(out_sum == d.arc_count());
        CHECK(in_sum == d.arc_count());

        if (d.arc_count() > 0) {
            std::uniform_int_distribution<size_t> pick(0, d.arcs().size() - 1);
            const Arc a = d.arcs()[pick(rng)];
            CHECK(d.delete_arc(a.first, a.second).add_arc(a.first, a.second) == d);
        }
        if (d.order() > 0) {
            std::uniform_int_distribution<int> pick(0, d.order() - 1);
            const int u = pick(rng);
            CHECK(d.delete_vertex(u).arc_count() == d.arc_count() - d.total_degree(u));
        }
    }
}

TEST_CASE("isomorphism is invariant under relabelling and symmetric") {
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) {
        const Digraph d = random_digraph(rng, 6);
        CHECK(is_isomorphic(d, d));
        const Digraph r = d.relabel(random_permutation(rng, d.order()));
        CHECK(canonical_arcs(d) == canonical_arcs(r));
        CHECK(is_isomorphic(d, r));
        CHECK(is_isomorphic(r, d));
    }
}

TEST_CASE("digraph text format round-trips") {
    std::mt19937 rng(99);
    for (int round = 0; round < 50; ++round) {
        const Digraph d = random_digraph(rng);
        CHECK(parse_digraph(format_digraph(d)) == d);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto parse = [](const std::string& text) { return parse_digraph(text); };

    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("x y\n"), ParseError);

    try {
        parse("# comment\n3 2\n0 1\n1 1\n");
        FAIL("expected a loop error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
    try {
        parse("2 2\n0 1\n0 1\n");
        FAIL("expected a duplicate-arc error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse("2 1\n0 5\n");
        FAIL("expected a range error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), ParseError);           // missing arc line
    CHECK_THROWS_AS(parse("2 1\n0 1\nextra\n"), ParseError);    // trailing content
}

TEST_CASE("multi-digraph streams") {
    const std::vector<Digraph> ds{directed_path(3), directed_cycle(4), Digraph(1, {})};
    std::ostringstream out;
    write_digraph_stream(out, ds);
    std::istringstream in(out.str());
    CHECK(parse_digraph_stream(in) == ds);
}

TEST_CASE("disjoint union") {
    const Digraph u = disjoint_union(directed_path(2), directed_cycle(3));
    CHECK(u.order() == 5);
    CHECK(u.arc_count() == 4);
    CHECK(weak_component_count(u) == 2);
}
