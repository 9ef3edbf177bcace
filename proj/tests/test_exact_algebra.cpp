#include <doctest.h>

#include "tle/error.hpp"
#include "tle/polynomial.hpp"
#include "tle/radical.hpp"
#include "tle/roots.hpp"

#include <cmath>
#include <random>

using namespace tle;

namespace {

Polynomial d1()
{
    return Polynomial::from_ints({-94976, 20736, 103104, -10368, -3024, 1296, -108}, "n");
}

Polynomial d2()
{
    return Polynomial::from_ints({6131712, -3039232, -16644096, 4818944, 6915840, -1936384, -690432, 251136, -30864,
                                  -4320, 1800, -216, 9},
                                 "n");
}

Polynomial t() { return Polynomial::identity("t"); }

Rational R(const char* s) { return Rational::parse(s); }

Polynomial random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(1, max_degree), coef(-5, 5);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = coef(rng);
    if (c.back().is_zero())
        c.back() = 1;
    return Polynomial(c);
}

int sampled_sign_changes(const Polynomial& p, double a, double b)
{
    Polynomial q = p.squarefree_part();
    std::vector<double> c;
    for (const auto& x : q.coeffs())
        c.push_back(x.to_double());
    auto f = [&](double x) {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    };
    int last = -1, stable = 0;
    for (int level = 10; level <= 22; ++level) {
        int n = 1 << level, changes = 0, prev = 0;
        for (int i = 0; i <= n; ++i) {
            double v = f(a + (b - a) * i / n);
            int s = (v > 0) - (v < 0);
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++changes;
            prev = s;
        }
        stable = changes == last ? stable + 1 : 0;
        last = changes;
        if (stable >= 2)
            break;
    }
    for (double e : {a, b})
        if (q(Rational::from_double(e)).is_zero())
            ++last;
    return last;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms")
{
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(mpz_class(-6), mpz_class(-4)).str() == "3/2");
    CHECK(Rational(mpz_class(3), mpz_class(-9)).str() == "-1/3");
    CHECK(R("0.9342") == Rational(mpz_class(4671), mpz_class(5000)));
    CHECK(R("-1.5e-3") == Rational(mpz_class(-3), mpz_class(2000)));
    CHECK(R("22/7").str() == "22/7");
    CHECK(R("7") == Rational(7));
    CHECK_THROWS_AS(R("abc"), Error);
    CHECK_THROWS_AS(R("1/0"), Error);
    CHECK(Rational(1, 3).to_long_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("polynomial evaluation")
{
    CHECK(d1()(Rational(0)) == Rational(-94976));
    CHECK(Polynomial()(Rational(7)) == Rational(0));
    CHECK(d2()(Rational(2)) == Rational(0));
    CHECK(d2()(Rational(-2)) == Rational(0));
    CHECK(d2().derivative()(Rational(2)) == Rational(0));
}

TEST_CASE("polynomial arithmetic")
{
    Polynomial a = t() + 1, b = t() - 1;
    CHECK(a * b == t() * t() - 1);
    CHECK(d1().compose(Polynomial::identity("n")) == d1());
    CHECK((d1() * d2()).degree() == d1().degree() + d2().degree());
    CHECK((t() * 0).is_zero());
    CHECK(Polynomial::from_ints({1, 2, 1}).compose(Polynomial::from_ints({-1, 1})) == Polynomial::from_ints({0, 0, 1}));
    auto [q, r] = divmod(Polynomial::from_ints({-1, 0, 0, 1}), Polynomial::from_ints({-1, 1}));
    CHECK(q == Polynomial::from_ints({1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(Polynomial::from_ints({-1, 0, 1}), Polynomial::from_ints({1, 2, 1})) == Polynomial::from_ints({1, 1}));
    CHECK(Polynomial::from_ints({1, 2, 1}).squarefree_part() == Polynomial::from_ints({1, 1}));
}

TEST_CASE("formal derivative")
{
    CHECK(t().pow(3).derivative() == 3 * t() * t());
    CHECK(Polynomial(Rational(5)).derivative().is_zero());
    Polynomial expected =
        Polynomial::from_ints_desc({648, -6480, 12096, 31104, -206208, -20736}, "n");
    CHECK(-d1().derivative() == expected);
}

TEST_CASE("sturm root counts")
{
    Polynomial p = t() * t() - 2;
    CHECK(sturm_count_roots(p, Domain::closed(0, 2)) == 1);
    CHECK(sturm_count_roots(t() * t() + 1, Domain::real_line()) == 0);
    CHECK(sturm_count_roots(p, Domain::real_line()) == 2);
    CHECK_THROWS_AS(sturm_count_roots(Polynomial(), Domain::real_line()), Error);

    Polynomial q = (t() - 1) * (t() - 2);
    CHECK(sturm_count_roots(q, Domain::closed(1, 2)) == 2);
    CHECK(sturm_count_roots(q, Domain::open(1, 2)) == 0);
    CHECK(sturm_count_roots(q, Domain{Rational(1), Rational(2), true, false}) == 1);
    CHECK(sturm_count_roots(q, Domain::ray(1)) == 2);
    CHECK(sturm_count_roots(q, Domain::ray(1, true)) == 1);
    CHECK(sturm_count_roots(q * q * (t() - 1), Domain::real_line()) == 2);

    Polynomial cubic = -t().pow(3) + (Rational(8) + Rational(3, 4) * 225) * t() * t() -
                       (Rational(16) + Rational(3, 16) * 50625) * t() + Rational(3, 16) * 759375 -
                       Rational(15, 16) * 50625 - Rational(3, 2) * 3375 + Rational(33, 4) * 225 + 45 - 9;
    CHECK(sturm_count_roots(cubic, Domain::real_line()) == 1);
    CHECK(sturm_count_roots(cubic, Domain::open(0, Rational(49, 4))) == 1);
}

TEST_CASE("sturm counts agree with a dense sampler")
{
    std::mt19937 rng(20241016);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, 8);
        INFO(p.str());
        CHECK(sturm_count_roots(p, Domain::closed(-10, 10)) == sampled_sign_changes(p, -10, 10));
    }
}

TEST_CASE("root isolation")
{
    auto roots = isolate_roots(t() * t() - 2, Domain::closed(0, 2), Rational(1, 1000));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].contains(R("1.41421")));
    CHECK(!(Rational(1, 1000) < roots[0].width()));
    CHECK(isolate_roots(t() * t() + 1, Domain::closed(-5, 5), Rational(1, 10)).empty());

    auto exact = isolate_roots((t() - Rational(1, 2)) * (t() * t() - 3), Domain::closed(-2, 2), Rational(1, 100));
    REQUIRE(exact.size() == 3);
    CHECK(exact[1] == Interval(Rational(1, 2)));
}

TEST_CASE("isolating intervals refine to sign changes")
{
    std::mt19937 rng(7);
    Rational tiny = Rational(1) / Rational(mpz_class("1000000000000000000000000000000"));
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(rng, 6);
        Polynomial q = p.squarefree_part();
        for (auto iv : isolate_roots(p, Domain::closed(-10, 10), Rational(1, 8))) {
            Interval r = refine_root(q, iv, tiny);
            if (r.is_point()) {
                CHECK(q(r.lo()).is_zero());
            } else {
                CHECK(!(tiny < r.width()));
                CHECK(q(r.lo()).sign() * q(r.hi()).sign() < 0);
            }
        }
    }
}

TEST_CASE("multiplication distributes over addition")
{
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("sign certificates")
{
    CHECK(certify_sign(t() * t(), Domain::open(1, 2), SignClaim::positive).verified());

    Polynomial p810 = Polynomial::from_ints_desc({23328, -384912, 2443608, -8266860, -276048, 76177584, -915397632,
                                                  1095581376, -4004833536, 1592960256, -2731991040, -3305373696,
                                                  2038431744},
                                                 "n");
    CHECK(certify_sign(p810, Domain::ray(10), SignClaim::positive).verified());

    // Exact scan over the integers 0..10 is the witness oracle for the extended claim.
    int first_negative = -1;
    for (int n = 0; n <= 10 && first_negative < 0; ++n)
        if (p810(Rational(n)).sign() < 0)
            first_negative = n;
    CHECK(first_negative == 1);
    Certificate c = certify_sign(p810, Domain::ray(0), SignClaim::positive);
    CHECK(c.status == Status::falsified);
    REQUIRE(c.witness);
    const Rational& w = std::get<Rational>(*c.witness);
    CHECK(p810(w).sign() <= 0);
    CHECK(Rational(0) <= w);

    Polynomial sq = (t() - 1) * (t() - 1);
    CHECK(certify_sign(sq, Domain::real_line(), SignClaim::nonneg).verified());
    Certificate touch = certify_sign(sq, Domain::real_line(), SignClaim::positive);
    CHECK(touch.status == Status::falsified);
    CHECK(std::get<Rational>(*touch.witness) == Rational(1));

    Polynomial irr = (t() * t() - 2) * (t() * t() - 2);
    Certificate even = certify_sign(irr, Domain::closed(0, 3), SignClaim::positive);
    CHECK(even.status == Status::falsified);
    REQUIRE(std::holds_alternative<Interval>(*even.witness));
    CHECK(std::get<Interval>(*even.witness).contains(R("1.41421356")));

    Certificate neg = certify_sign(t() - 3, Domain::closed(0, 5), SignClaim::nonpos);
    CHECK(neg.status == Status::falsified);
    CHECK((std::get<Rational>(*neg.witness) - 3).sign() > 0);
    CHECK(certify_sign(t() - 3, Domain{Rational(0), Rational(3), false, false}, SignClaim::nonpos).verified());
    CHECK(certify_sign(t() - 3, Domain{Rational(0), Rational(3), false, true}, SignClaim::negative).verified());
}

TEST_CASE("radical enclosures")
{
    Interval s2 = enclose(RadicalExpr::sqrt(2), Rational(1, 1000000));
    CHECK(s2.lo() < R("1.41421357"));
    CHECK(R("1.41421356") < s2.hi());
    CHECK(s2.lo() * s2.lo() <= Rational(2));
    CHECK(Rational(2) <= s2.hi() * s2.hi());
    CHECK(!(Rational(1, 1000000) < s2.width()));
    CHECK(enclose(RadicalExpr::cbrt(-8), Rational(0)) == Interval(Rational(-2)));
    CHECK(enclose(RadicalExpr::cbrt(Rational(27, 8)), Rational(0)) == Interval(Rational(3, 2)));
    CHECK_THROWS_AS(enclose(RadicalExpr::sqrt(-1), Rational(1, 10)), Error);

    RadicalExpr zero = RadicalExpr::sqrt(2) * RadicalExpr::sqrt(2) - 2;
    try {
        enclose(RadicalExpr::sqrt(zero), Rational(1, 10), 512);
        FAIL("expected inconclusive precision");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inconclusive);
    }
    try {
        enclose(RadicalExpr::sqrt(RadicalExpr(-1) - RadicalExpr::sqrt(2)), Rational(1, 10));
        FAIL("expected domain violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("enclosures shrink monotonically")
{
    RadicalExpr e = RadicalExpr::cbrt(RadicalExpr(-17) + 36 * RadicalExpr::sqrt(Rational(5, 3))) / 7;
    Interval prev = enclose(e, Rational(1, 10));
    Rational w(1, 10);
    for (int i = 0; i < 60; ++i) {
        w = w / 2;
        Interval cur = enclose(e, w);
        CHECK(prev.lo() <= cur.lo());
        CHECK(cur.hi() <= prev.hi());
        prev = cur;
    }
}

TEST_CASE("square root enclosures bracket the square")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(0, 100000), den(1, 999);
    for (int i = 0; i < 100; ++i) {
        Rational x(mpz_class(num(rng)), mpz_class(den(rng)));
        Interval r = enclose(RadicalExpr::sqrt(x), Rational(1, 1 << 20));
        CHECK(r.lo() * r.lo() <= x);
        CHECK(x <= r.hi() * r.hi());
    }
}
