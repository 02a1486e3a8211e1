#include <doctest.h>

#include "graphcohom/generators.hpp"
#include "graphcohom/multipoly.hpp"
#include "graphcohom/oracle.hpp"
#include "graphcohom/polyvector.hpp"
#include "graphcohom/verify.hpp"

using namespace graphcohom;

namespace {

const MultiPoly X = MultiPoly::variable(2, 0);
const MultiPoly Y = MultiPoly::variable(2, 1);

PolyVector field(const MultiPoly& a, const MultiPoly& b) {
    PolyVector v(2);
    v.add({0}, a);
    v.add({1}, b);
    return v;
}

}  // namespace

TEST_CASE("polynomials") {
    const MultiPoly p = X * X * Y + mpq_class(3) * Y;
    CHECK(p.total_degree() == 3);
    CHECK(p.derivative(0) == mpq_class(2) * X * Y);
    CHECK(p.derivative(1) == X * X + MultiPoly::constant(2, 3));
    CHECK(p.evaluate({2, 5}) == 35);
    CHECK((p - p).is_zero());
    CHECK(MultiPoly(2).total_degree() == -1);
}

TEST_CASE("polyvector index sorting") {
    PolyVector::Index t{2, 0, 1};
    CHECK(sort_with_sign(t) == 1);
    CHECK(t == PolyVector::Index{0, 1, 2});
    PolyVector::Index u{1, 0};
    CHECK(sort_with_sign(u) == -1);
    PolyVector::Index r{1, 1};
    CHECK(sort_with_sign(r) == 0);

    const PolyVector a = PolyVector::term(X, {1, 0});
    CHECK(a.coefficient({0, 1}) == -X);
    CHECK(a.coefficient({1, 0}) == X);
    CHECK(a.degree() == 2);
}

TEST_CASE("wedge is graded commutative") {
    const PolyVector a = field(Y, X), b = field(X * X, MultiPoly::constant(2, 1));
    CHECK(wedge(a, b) == -wedge(b, a));
    CHECK(wedge(a, a).is_zero());
    const PolyVector f = PolyVector::function(X * Y);
    CHECK(wedge(f, a) == wedge(a, f));
}

TEST_CASE("brackets of vector fields") {
    const PolyVector xi = field(Y, X * X), eta = field(X, MultiPoly(2));
    // [y∂x + x²∂y, x∂x] = y∂x - 2x²∂y
    const PolyVector expect = field(Y, mpq_class(-2) * X * X);
    CHECK(lie_bracket(xi, eta) == expect);
    CHECK(schouten(xi, eta) == expect);
    CHECK(nabla(xi, PolyVector::function(X * Y)) == PolyVector::function(Y * Y + X * X * X));
}

TEST_CASE("graph operators on small graphs") {
    const PolyVector xi = field(Y, X * X);
    const PolyVector f = PolyVector::function(X * Y);
    CHECK(eval_C(VectorGraph(1), {xi}) == xi);
    CHECK(eval_C(VectorGraph(2), {f, xi}) == wedge(f, xi));
    // The arrow leaves the vector field and differentiates its target.
    CHECK(eval_C(VectorGraph(2, {{1, 0}}), {f, xi}) == PolyVector::function(Y * Y + X * X * X));
    CHECK(eval_C(VectorGraph(2, {{0, 1}}), {f, xi}).is_zero());
    // The loop contracts a vector field with its own derivative: the divergence.
    CHECK(eval_C(wheel(1), {xi}).is_zero());
    const PolyVector radial = field(X, Y);
    CHECK(eval_C(wheel(1), {radial}).scalar_part() == MultiPoly::constant(2, 2));
}

TEST_CASE("chevalley coboundary matches the graph coboundary") {
    for (const MonomialSpec& s : {MonomialSpec{{0}, {}, {}}, MonomialSpec{{}, {1}, {}}, MonomialSpec{{}, {}, {3}},
                                  MonomialSpec{{2}, {}, {}}}) {
        const OracleReport r = oracle_crosscheck(sym_generator(s), 2, 2, 8, 3);
        CHECK_MESSAGE(r.agree_scalar, format_monomial_spec(s), " ", r.first_scalar_mismatch);
        CHECK_MESSAGE(r.agree_full, format_monomial_spec(s), " ", r.first_full_mismatch);
        CHECK(r.trials == 8);
        CHECK(r.seed == 3);
    }
}

TEST_CASE("random generator is reproducible") {
    RandomPolyGen a(99), b(99);
    for (int i = 0; i < 5; ++i) CHECK(a.polyvector(3, 2, 2) == b.polyvector(3, 2, 2));
    RandomPolyGen c(7);
    const PolyVector v = c.polyvector(3, 2, 1);
    CHECK((v.is_zero() || v.degree() == 2));
}

TEST_CASE("verification suites") {
    CHECK(verify_suite("signs", 1).pass());
    CHECK(verify_suite("generators", 1).pass());
    CHECK_THROWS_AS(verify_suite("nope", 1), std::invalid_argument);
    const VerificationReport r = verify_suite("signs", 5);
    CHECK(r.seed == 5);
    CHECK(!r.checks.empty());
    CHECK(r.to_json().find("\"suite\"") != std::string::npos);
}
