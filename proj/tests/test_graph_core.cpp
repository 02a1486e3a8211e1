#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphcohom/canonical.hpp"
#include "graphcohom/combination.hpp"
#include "graphcohom/generators.hpp"
#include "graphcohom/signs.hpp"
#include "graphcohom/text_format.hpp"
#include "graphcohom/vector_graph.hpp"

using namespace graphcohom;

namespace {

// Inversion count, independent of the library's cycle-based signature.
int inversion_sign(const std::vector<int>& im) {
    int inv = 0;
    for (std::size_t a = 0; a < im.size(); ++a)
        for (std::size_t b = a + 1; b < im.size(); ++b)
            if (im[a] > im[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Every out-map {0..n-1} -> {none, 0..n-1}.
template <class F>
void each_graph(int n, F&& f) {
    std::vector<int> code(n, -1);
    while (true) {
        VectorGraph g(n);
        for (int v = 0; v < n; ++v)
            if (code[v] >= 0) g.set_arrow(v, code[v]);
        f(g);
        int i = 0;
        while (i < n && ++code[i] == n) code[i++] = -1;
        if (i == n) return;
    }
}

}  // namespace

TEST_CASE("vector graph basics") {
    VectorGraph g(3, {{0, 1}, {2, 1}});
    CHECK(g.size() == 3);
    CHECK(g.arrow_count() == 2);
    CHECK(g.in_degree(1) == 2);
    CHECK(g.sources_into(1) == std::vector<int>{0, 2});
    CHECK(!g.is_isolated(1));
    CHECK_THROWS_AS(g.set_arrow(0, 2), std::invalid_argument);
    g.clear_arrow(0);
    CHECK(!g.has_out(0));
    CHECK_THROWS_AS(g.target(3), std::out_of_range);
    CHECK_THROWS_AS(VectorGraph(kMaxVertices + 1), std::invalid_argument);

    const VectorGraph loop(1, {{0, 0}});
    CHECK(loop.in_degree(0) == 1);
    CHECK(loop.out_parities() == std::vector<std::uint8_t>{1});
}

TEST_CASE("insert and remove isolated vertices") {
    const VectorGraph g(2, {{0, 1}});
    const VectorGraph h = insert_vertex(g, 1);
    CHECK(h == VectorGraph(3, {{0, 2}}));
    CHECK(h.is_isolated(1));
    CHECK(remove_isolated_vertex(h, 1) == g);
    CHECK_THROWS_AS(remove_isolated_vertex(h, 0), std::invalid_argument);
}

TEST_CASE("components and shapes") {
    const VectorGraph g = wedge_union(wheel(3), line(2));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(classify_component(g, comps[0]) == ComponentShape{ComponentShape::Kind::wheel, 3});
    CHECK(classify_component(g, comps[1]) == ComponentShape{ComponentShape::Kind::line, 2});
    const VectorGraph star(3, {{1, 0}, {2, 0}});
    CHECK(classify_component(star, {0, 1, 2}).kind == ComponentShape::Kind::other);
}

TEST_CASE("permutation signs against inversion counting") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        do {
            const Permutation s(im);
            CHECK(sign_eps(s) == inversion_sign(im));
            CHECK(s * s.inverse() == Permutation::identity(n));
            CHECK(sign_eps_graded(s, DegreeVector(std::vector<std::uint8_t>(n, 1))) == sign_eps(s));
            CHECK(sign_eps_graded(s, DegreeVector(std::vector<std::uint8_t>(n, 0))) == 1);
        } while (std::next_permutation(im.begin(), im.end()));
    }
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
}

TEST_CASE("graded signs") {
    // Only the relative order of odd entries matters.
    const DegreeVector d{1, 0, 1};
    CHECK(sign_eps_graded(Permutation{2, 1, 0}, d) == -1);
    CHECK(sign_eps_graded(Permutation{1, 0, 2}, d) == 1);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        std::shuffle(im.begin(), im.end(), rng);
        std::vector<std::uint8_t> par(n);
        for (auto& p : par) p = rng() % 2;
        const Permutation s(im);
        const DegreeVector dv(par);
        CHECK(relabel_sign(s, dv) == sign_eps_graded(s.inverse(), dv));
        const int j = static_cast<int>(rng() % n);
        CHECK(front_insertion_sign(j, dv) == sign_eps_graded(Permutation::front_insertion(j, n), dv));
    }
}

TEST_CASE("tau sign") {
    CHECK(tau_sign({}) == 1);
    CHECK(tau_sign({1, 1}) == -1);
    CHECK(tau_sign({0, 1}) == 1);
    CHECK(tau_sign({1, 0, 0}) == 1);
    CHECK(tau_sign({0, 1, 0}) == -1);
    CHECK(tau_sign({-1, -1}) == -1);
}

TEST_CASE("canonical form equals brute force on all small graphs") {
    for (int n = 0; n <= 4; ++n)
        each_graph(n, [](const VectorGraph& g) {
            const CanonicalForm fast = canonicalize(g);
            const CanonicalForm slow = canonicalize_bruteforce(g);
            REQUIRE(fast.graph == slow.graph);
            CHECK(fast.sign_zero == slow.sign_zero);
            CHECK(fast.automorphisms == slow.automorphisms);
            if (!slow.sign_zero) CHECK(fast.sign == slow.sign);
            CHECK(permute(g, canonical_labeling(g)) == fast.graph);
        });
}

TEST_CASE("automorphisms and sign-zero orbits") {
    CHECK(canonicalize(wheel(3)).automorphisms == 3);
    CHECK(!canonicalize(wheel(3)).sign_zero);
    // Swapping the two sources of a cherry is an odd relabeling fixing the graph.
    CHECK(canonicalize(VectorGraph(3, {{0, 1}, {2, 1}})).sign_zero);
    CHECK(canonicalize(wheel(2)).sign_zero);
    CHECK(orbit_size(canonicalize(line(1))) == 2);
    CHECK(canonicalize(VectorGraph(3)).automorphisms == 6);
}

TEST_CASE("symmetrization") {
    CHECK(symmetrize(wheel(2)).is_zero());
    CHECK(symmetrize(wheel(4)).is_zero());
    const GraphCombination s = symmetrize(wheel(3));
    const GraphCombination o = orbit_symmetrization(wheel(3));
    CHECK(s == Rational(3) * o);  // |Aut| = 3
    CHECK(is_symmetric(s));
    CHECK(!is_symmetric(GraphCombination::single(line(1))));
    CHECK(o.coefficient(wheel(3)) == 1);
    CHECK(expand(collapse(o)) == o);
    CHECK(collapse(s).size() == 1);
}

TEST_CASE("combination arithmetic") {
    GraphCombination a = GraphCombination::single(line(1), Rational(1, 2));
    a.add_term(line(1), Rational(-1, 2));
    CHECK(a.is_zero());
    GraphCombination b = GraphCombination::single(line(1), 2);
    CHECK_THROWS(b.add_term(line(2), 1));
    CHECK((b - b).is_zero());
    CHECK((Rational(0) * b).is_zero());
}

TEST_CASE("text format round trip") {
    const VectorGraph g = parse_graph("graph n=4; edges = 1->2, 2->2, 4->1");
    CHECK(g == VectorGraph(4, {{0, 1}, {1, 1}, {3, 0}}));
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(parse_graph("graph n=0") == VectorGraph(0));

    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(format_rational(Rational(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(4)) == "4");

    const GraphCombination c = orbit_symmetrization(wedge_union(wheel(3), line(1)));
    CHECK(parse_combination(format_combination(c)) == c);
    CHECK(parse_combination("").is_zero());

    CHECK_THROWS_AS(parse_graph("graph n=2; edges = 1->3"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph n=2; edges = 1->2, 1->1"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_combination("2 graph n=1"), ParseError);
}
