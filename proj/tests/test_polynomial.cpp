#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

#include "mldeg/errors.hpp"
#include "mldeg/parse.hpp"
#include "mldeg/polynomial.hpp"

using namespace mldeg;
using testutil::P;
using testutil::random_poly;

TEST_CASE("addition") {
    auto xy = make_varset({"x", "y"});
    CHECK(P(xy, "x + y") + P(xy, "x - y") == P(xy, "2*x"));
    auto f = P(xy, "3*x^2*y - 7");
    CHECK(f + Polynomial::zero(xy) == f);

    auto p = make_varset({"p0", "p1", "p2"});
    CHECK(P(p, "p0^2") + P(p, "2*p0^2") == P(p, "3*p0^2"));
}

TEST_CASE("multiplication") {
    auto q = make_varset({"q0", "q1"});
    CHECK(P(q, "q0 - q1") * P(q, "q0 + q1") == P(q, "q0^2 - q1^2"));
    auto f = P(q, "5*q0*q1 - q1^3 + 2");
    CHECK(f * Polynomial::constant(q, 1) == f);

    // Hand expansion of the shifted conic generator.
    auto b = make_varset({"b0", "b1", "b2", "bs"});
    auto expanded = P(b, "b0 + bs") * P(b, "b2 + bs") - P(b, "b1 + bs") * P(b, "b1 + bs");
    CHECK(expanded == P(b, "b0*b2 - b1^2 + b0*bs + b2*bs - 2*b1*bs"));
}

TEST_CASE("variable set mismatch is rejected") {
    auto a = make_varset({"x"});
    auto b = make_varset({"y"});
    CHECK_THROWS_AS(P(a, "x") + P(b, "y"), VariableMismatchError);
    CHECK_THROWS_AS(P(a, "x") * P(b, "y"), VariableMismatchError);
}

TEST_CASE("substitution") {
    auto q = make_varset({"q0", "q1", "q2"});
    auto b = make_varset({"b0", "b1", "b2", "bs"});
    auto g = P(q, "q0*q2 - q1^2");
    std::vector<Polynomial> images{P(b, "b0 + bs"), P(b, "b1 + bs"), P(b, "b2 + bs")};
    auto shifted = g.substitute(b, images);
    CHECK(shifted == P(b, "b0 + bs") * P(b, "b2 + bs") - P(b, "b1 + bs").pow(2));

    // Identity map.
    std::vector<Polynomial> id;
    for (std::size_t i = 0; i < q->size(); ++i) id.push_back(Polynomial::variable(q, i));
    CHECK(g.substitute(q, id) == g);

    // Quartic hypersurface: substitution equals factor-by-factor arithmetic.
    auto q4 = make_varset({"q0", "q1", "q2", "q12"});
    auto b4 = make_varset({"b0", "b1", "b2", "b12", "bs"});
    auto g4 = P(q4, "q0^4 - 8*q0^2*q1*q2 + 16*q1^2*q2^2 - 8*q0^3*q12 + 16*q0^2*q1*q12 "
                    "+ 16*q0^2*q2*q12 - 32*q0*q1*q2*q12");
    std::vector<Polynomial> shift{P(b4, "b0 + bs"), P(b4, "b1 + bs"), P(b4, "b2 + bs"),
                                  P(b4, "b12 + bs")};
    auto s0 = shift[0], s1 = shift[1], s2 = shift[2], s3 = shift[3];
    auto direct = s0.pow(4) - s0.pow(2) * s1 * s2 * Polynomial::constant(b4, 8) +
                  s1.pow(2) * s2.pow(2) * Polynomial::constant(b4, 16) -
                  s0.pow(3) * s3 * Polynomial::constant(b4, 8) +
                  s0.pow(2) * s1 * s3 * Polynomial::constant(b4, 16) +
                  s0.pow(2) * s2 * s3 * Polynomial::constant(b4, 16) -
                  s0 * s1 * s2 * s3 * Polynomial::constant(b4, 32);
    CHECK(g4.substitute(b4, shift) == direct);
}

TEST_CASE("partial derivatives") {
    auto p = make_varset({"p0", "p1", "p2"});
    CHECK(P(p, "4*p0*p2 - p1^2").derivative(1) == P(p, "-2*p1"));
    CHECK(Polynomial::constant(p, 7).derivative(0).is_zero());

    auto p4 = make_varset({"p0", "p1", "p2", "p12"});
    auto f = P(p4, "2*p0*p1*p2 + p1^2*p2 + p1*p2^2 - p0^2*p12 + p1*p2*p12");
    CHECK(f.derivative(3) == P(p4, "-p0^2 + p1*p2"));
    CHECK(f.derivative(0) == P(p4, "2*p1*p2 - 2*p0*p12"));
    CHECK(f.derivative(1) == P(p4, "2*p0*p2 + 2*p1*p2 + p2^2 + p2*p12"));
    CHECK(f.derivative(2) == P(p4, "2*p0*p1 + p1^2 + 2*p1*p2 + p1*p12"));
}

TEST_CASE("evaluation") {
    auto p = make_varset({"p0", "p1", "p2"});
    auto conic = P(p, "4*p0*p2 - p1^2");
    // Closed-form critical point for data (1,2,3) lies on the curve.
    std::vector<Rational> pt{Rational(1, 9), Rational(4, 9), Rational(4, 9)};
    CHECK(conic.evaluate(pt) == 0);

    auto f = P(p, "3*p0*p1 - p2 + 5/2");
    CHECK(f.evaluate({Rational(0), Rational(0), Rational(0)}) == Rational(5, 2));

    auto pn = make_varset({"p0", "p1", "p2", "ps"});
    auto h = P(pn, "ps - p0 - p1 - p2");
    CHECK(h.evaluate({Rational(1), Rational(1), Rational(1), Rational(3)}) == 0);

    CHECK_THROWS_AS(conic.evaluate(std::vector<Rational>{Rational(1)}),
                    VariableMismatchError);
}

TEST_CASE("homogeneity") {
    auto q = make_varset({"q0", "q1", "q2"});
    auto h = P(q, "q0*q2 - q1^2").homogeneous_degree();
    REQUIRE(h.has_value());
    CHECK(*h == 2);
    CHECK(!P(q, "q0 + q1^2").homogeneous_degree().has_value());

    auto q4 = make_varset({"q0", "q1", "q2", "q12"});
    auto g4 = P(q4, "q0^4 - 8*q0^2*q1*q2 + 16*q1^2*q2^2 - 8*q0^3*q12 + 16*q0^2*q1*q12 "
                    "+ 16*q0^2*q2*q12 - 32*q0*q1*q2*q12");
    auto d = g4.homogeneous_degree();
    REQUIRE(d.has_value());
    CHECK(*d == 4);
}

TEST_CASE("ring axioms on random instances") {
    auto vars = make_varset({"x1", "x2", "x3", "x4", "x5", "x6"});
    std::mt19937_64 rng(20240517);
    for (int it = 0; it < 100; ++it) {
        auto f = random_poly(vars, rng);
        auto g = random_poly(vars, rng);
        auto h = random_poly(vars, rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    auto src = make_varset({"x", "y", "z"});
    auto dst = make_varset({"u", "v"});
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        std::vector<Polynomial> images{random_poly(dst, rng, 3, 2),
                                       random_poly(dst, rng, 3, 2),
                                       random_poly(dst, rng, 3, 2)};
        auto f = random_poly(src, rng, 4, 2);
        auto g = random_poly(src, rng, 4, 2);
        CHECK((f * g).substitute(dst, images) ==
              f.substitute(dst, images) * g.substitute(dst, images));
        CHECK((f + g).substitute(dst, images) ==
              f.substitute(dst, images) + g.substitute(dst, images));
    }
}

TEST_CASE("Euler relation for homogeneous polynomials") {
    auto vars = make_varset({"x", "y", "z", "w"});
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        // Build a random homogeneous polynomial of degree d.
        std::uniform_int_distribution<int> degree_dist(1, 4);
        std::uniform_int_distribution<int> coef(-9, 9);
        int d = degree_dist(rng);
        Polynomial f(vars);
        for (int t = 0; t < 5; ++t) {
            Monomial m(vars->size());
            int left = d;
            for (std::size_t v = 0; v + 1 < vars->size(); ++v) {
                std::uniform_int_distribution<int> e(0, left);
                int ev = e(rng);
                m.set_exponent(v, ev);
                left -= ev;
            }
            m.set_exponent(vars->size() - 1, left);
            f.add_term(m, Rational(coef(rng)));
        }
        if (f.is_zero()) continue;
        Polynomial sum(vars);
        for (std::size_t v = 0; v < vars->size(); ++v)
            sum += Polynomial::variable(vars, v) * f.derivative(v);
        CHECK(sum == f.scaled(Rational(d)));
    }
}

TEST_CASE("chain rule through substitution") {
    auto q = make_varset({"q0", "q1"});
    auto b = make_varset({"b0", "b1", "bs"});
    std::mt19937_64 rng(42);
    std::vector<Polynomial> images{P(b, "b0 + bs"), P(b, "b1 + bs")};
    for (int it = 0; it < 30; ++it) {
        auto f = random_poly(q, rng, 5, 3);
        for (std::size_t x = 0; x < b->size(); ++x) {
            Polynomial lhs = f.substitute(b, images).derivative(x);
            Polynomial rhs(b);
            for (std::size_t v = 0; v < q->size(); ++v)
                rhs += f.derivative(v).substitute(b, images) * images[v].derivative(x);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("parser and formatter") {
    auto p = make_varset({"p0", "p1", "p2", "p12"});
    auto f = P(p, "2*p0*p1*p2 + p1^2*p2 + p1*p2^2 - p0^2*p12 + p1*p2*p12");
    CHECK(f.term_count() == 5);
    CHECK(parse_polynomial(format_polynomial(f), p) == f);

    // '*' between coefficient and variable may be omitted.
    CHECK(P(p, "2p0") == P(p, "2*p0"));
    CHECK(P(p, "1/2 p0 - 3/4") == P(p, "1/2*p0 - 3/4"));
    CHECK(P(p, "-p0^2") == -P(p, "p0^2"));
    CHECK(P(p, "0").is_zero());

    CHECK_THROWS_AS(P(p, "2*z0"), ParseError);
    CHECK_THROWS_AS(P(p, "p0 + + p1 +"), ParseError);
    CHECK_THROWS_AS(P(p, "p0 p1"), ParseError); // implicit product of variables

    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        auto g = random_poly(p, rng);
        CHECK(parse_polynomial(format_polynomial(g), p) == g);
    }
}
