#include <doctest.h>

#include "causalcoh/poly.hpp"
#include "causalcoh/rng.hpp"

using namespace causalcoh;
using namespace causalcoh::poly;

namespace {

Polynomial random_poly(int nvars, unsigned max_degree, int terms, Rng& rng) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        for (int i = 0; i < nvars; ++i) {
            const auto remaining = static_cast<long>(max_degree - m.degree);
            const auto p = static_cast<unsigned>(rng.uniform(0, remaining));
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(p);
            m.degree += p;
        }
        t.push_back({m, Rational(rng.uniform(-4, 4))});
    }
    return Polynomial::from_terms(nvars, std::move(t));
}

std::vector<Rational> random_point(int nvars, Rng& rng) {
    std::vector<Rational> p;
    for (int i = 0; i < nvars; ++i) {
        p.emplace_back(rng.uniform(-9, 9), rng.uniform(1, 5));
        p.back().canonicalize();
    }
    return p;
}

Polynomial x(int i) { return Polynomial::variable(3, i); }

}  // namespace

TEST_CASE("canonical term order and printing") {
    const Polynomial p = x(1) + x(0) * x(0) + Polynomial(3, Rational(-1, 2)) + x(0) * x(2);
    CHECK(p.to_string() == "x0^2 + x0*x2 + x1 - 1/2");
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(Polynomial::from_terms(3, {{Monomial::var(0), 2}, {Monomial::var(0), -2}}).is_zero());
    CHECK((x(0) * x(1)).to_string({"t", "y", "z"}) == "t*y");
}

TEST_CASE("ring laws and evaluation homomorphism on random polynomials") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(3, 3, 4, rng);
        const auto b = random_poly(3, 3, 4, rng);
        const auto c = random_poly(3, 2, 3, rng);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        const auto pt = random_point(3, rng);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
        // Leibniz rule.
        CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
        if (!b.is_zero()) {
            const auto q = (a * b).exact_divide(b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}

TEST_CASE("exact division reports non-divisibility") {
    CHECK(!(x(0) + x(1)).exact_divide(x(0) - x(1)).has_value());
    CHECK(!x(0).exact_divide(x(1)).has_value());
    CHECK(*(x(0) * x(0) - x(1) * x(1)).exact_divide(x(0) - x(1)) == x(0) + x(1));
    CHECK_THROWS_AS((void)x(0).exact_divide(Polynomial(3)), std::domain_error);
}

TEST_CASE("multivariate gcd") {
    CHECK(gcd(x(0) * x(0) - x(1) * x(1), x(0) * x(0) + Rational(2) * x(0) * x(1) + x(1) * x(1)) == x(0) + x(1));
    CHECK(gcd(Rational(3) * x(0) * x(0) * x(1), Rational(6) * x(0) * x(2) + Rational(6) * x(0)) == x(0));
    CHECK(gcd(Polynomial(3), x(2)) == x(2));
    CHECK(gcd(x(0) + Polynomial(3, 1), x(0) - Polynomial(3, 1)).is_constant());

    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(3, 2, 3, rng);
        const auto b = random_poly(3, 2, 3, rng);
        const auto c = random_poly(3, 2, 2, rng);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const auto g = gcd(a * c, b * c);
        // c divides the gcd, and the gcd divides both inputs.
        CHECK(g.exact_divide(c).has_value());
        CHECK((a * c).exact_divide(g).has_value());
        CHECK((b * c).exact_divide(g).has_value());
        CHECK(g.leading().c == 1);
    }
}

TEST_CASE("rational functions are canonical") {
    const RationalFunction r(x(0) * x(0) - x(1) * x(1), Rational(2) * x(0) - Rational(2) * x(1));
    CHECK(r == RationalFunction(Rational(1, 2) * (x(0) + x(1))));
    CHECK(r.den().is_constant());

    const RationalFunction inv(Polynomial(3, 1), Rational(-3) * x(0));
    CHECK(inv.den() == x(0));
    CHECK(inv.num() == Polynomial(3, Rational(-1, 3)));
    CHECK((inv * RationalFunction(x(0))) == RationalFunction(3, Rational(-1, 3)));
    CHECK((inv - inv).is_zero());
    CHECK((inv - inv).den() == Polynomial(3, 1));
    CHECK_THROWS_AS(RationalFunction(x(0), Polynomial(3)), std::domain_error);
    CHECK_THROWS_AS(RationalFunction(3).inverse(), std::domain_error);
    CHECK(inv.to_string() == "-1/3/x0");
}

TEST_CASE("rational function field laws and derivative") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n1 = random_poly(3, 2, 3, rng);
        const auto n2 = random_poly(3, 2, 3, rng);
        auto d1 = random_poly(3, 2, 2, rng);
        auto d2 = trial % 2 ? Polynomial::monomial(3, Monomial::var(0, static_cast<unsigned>(trial % 4)), 2) : random_poly(3, 1, 2, rng);
        if (d1.is_zero()) d1 = Polynomial(3, 1);
        if (d2.is_zero()) d2 = Polynomial(3, 1);
        const RationalFunction a(n1, d1), b(n2, d2);
        const auto pt = random_point(3, rng);
        if (a.den().evaluate(pt) != 0 && b.den().evaluate(pt) != 0) {
            CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
            CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        }
        CHECK((a + b) - b == a);
        CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("monomial denominators take the fast path") {
    const auto t = RationalFunction::variable(3, 0);
    const auto f = (t * t + RationalFunction::variable(3, 1)) / (t * t * t);
    CHECK(f.den() == Polynomial::monomial(3, Monomial::var(0, 3)));
    // d/dt (t^-1 + y t^-3) = -t^-2 - 3 y t^-4
    const auto df = f.derivative(0);
    CHECK(df == -(t * t).inverse() - Rational(3) * RationalFunction::variable(3, 1) / t.pow(4));
    CHECK(f.pow(-1) == f.inverse());
}
