#include <doctest.h>

#include "tle/error.hpp"
#include "tle/exponents.hpp"
#include "tle/roots.hpp"

#include <cmath>

using namespace tle;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Rational pow10(int e)
{
    Rational r(1);
    for (int i = 0; i < e; ++i)
        r = r * 10;
    return r;
}

bool near(const Interval& x, const char* value, const char* tol)
{
    return x.intersects(Interval(R(value) - R(tol), R(value) + R(tol)));
}

}  // namespace

// Values frozen from an independent 300-digit evaluation of the closed forms.
TEST_CASE("serrin and sobolev exponents")
{
    CHECK(serrin_exponent(12).enclosure() == Interval(Rational(2)));
    CHECK(serrin_exponent(7).enclosure() == Interval(Rational(7)));
    CHECK(serrin_exponent(15).enclosure() == Interval(Rational(5, 3)));
    CHECK(sobolev_exponent(12).enclosure() == Interval(Rational(3)));
    CHECK(sobolev_exponent(18).enclosure() == Interval(Rational(2)));
    CHECK(sobolev_exponent(7).enclosure() == Interval(Rational(13)));
    CHECK_THROWS_AS(serrin_exponent(6), Error);
    CHECK_THROWS_WITH(sobolev_exponent(5), doctest::Contains("dimension below triharmonic range"));
}

TEST_CASE("d0 enclosures")
{
    Interval a = d0_enclosure(15, Rational(1, 1000));
    CHECK(near(a, "186.0929", "0.001"));
    CHECK(near(a, "186.09297865", "1e-8"));

    Interval big = d0_enclosure(1000000, Rational(1, 1000000));
    CHECK(Rational(128) < big.lo());
    CHECK(big.hi() < R("128.01"));
    CHECK(near(big, "128.000512003", "1e-9"));

    Interval mid = d0_enclosure(20, Rational(1, 1000));
    CHECK(Rational(128) < mid.lo());
    CHECK(mid.hi() < Rational(187));
    CHECK(near(mid, "164.521058575", "1e-9"));
    CHECK_THROWS_AS(d0_enclosure(11, Rational(1, 10)), Error);
}

TEST_CASE("d(n) enclosures")
{
    Interval d15 = d_enclosure(15, Rational(1, 1000000));
    CHECK(d15.positive());
    CHECK(d15.hi() * d15.hi() < Rational(15));
    CHECK(near(d15, "3.4990255494", "1e-10"));

    Interval t = pc_admissible_root(15, Rational(1, 1000000));
    CHECK(t.intersects(d15 * d15));
    CHECK(sturm_count_roots(pc_cubic(15), Domain::real_line()) == 1);

    Interval large = d_enclosure(1000000, Rational(1, 100000000));
    Interval scaled = Interval(Rational(1000)) * (large - Interval(Rational(1000)));
    CHECK(near(scaled, "-0.5", "0.001"));
}

TEST_CASE("d(n) asymptotics at n = 1e10")
{
    Rational n = pow10(10), root = pow10(5);
    Interval d = enclose(d_expr(10000000000L), Rational(1) / pow10(12));
    Interval ratio = d / Interval(root) - Interval(1);
    CHECK(ratio.hi() < R("1e-5"));
    CHECK(R("-1e-5") < ratio.lo());
    Interval scaled = Interval(root) * (d - Interval(root)) + Interval(Rational(1, 2));
    CHECK(scaled.hi() < R("1e-3"));
    CHECK(R("-1e-3") < scaled.lo());
}

TEST_CASE("joseph lundgren exponent")
{
    for (long n = 7; n <= 14; ++n)
        CHECK(joseph_lundgren_triharmonic(n).is_infinite());
    ExponentValue p15 = joseph_lundgren_triharmonic(15);
    REQUIRE(!p15.is_infinite());
    CHECK(p15.enclosure().contains(R("6158.31559270981")));
    CHECK(certainly_less(sobolev_exponent(15).enclosure(), p15.enclosure()));
    CHECK(near(joseph_lundgren_triharmonic(20).enclosure(), "4.35787792918347", "1e-12"));
    CHECK(near(joseph_lundgren_triharmonic(50).enclosure(), "1.42757937949348", "1e-12"));
    CHECK(certainly_less(joseph_lundgren_triharmonic(100).enclosure(), pm(100).enclosure()));
    CHECK(!(default_exponent_width() < p15.enclosure().width()));
}

TEST_CASE("root oracle")
{
    Interval o15 = pc_root_oracle(15);
    CHECK(o15.intersects(joseph_lundgren_triharmonic(15).enclosure()));
    CHECK_THROWS_WITH(pc_root_oracle(14), doctest::Contains("no admissible root"));
    Interval o50 = pc_root_oracle(50);
    Rational gap = o50.mid() - joseph_lundgren_triharmonic(50).enclosure().mid();
    CHECK(gap.abs() < R("1e-10"));
}

TEST_CASE("closed form and root oracle agree on 15..200")
{
    for (long n = 15; n <= 200; ++n) {
        INFO("n = " << n);
        Interval a = joseph_lundgren_triharmonic(n).enclosure(), b = pc_root_oracle(n);
        CHECK(a.intersects(b));
        CHECK((a.mid() - b.mid()).abs() < R("1e-10"));
    }
}

TEST_CASE("p_m, p_m1 and lower-order exponents")
{
    CHECK(pm(30).is_infinite());
    CHECK(near(pm(31).enclosure(), "5.95611990339944", "1e-12"));
    CHECK(certainly_less(joseph_lundgren_triharmonic(31).enclosure(), pm(31).enclosure()));
    CHECK(near(pm(100).enclosure(), "1.66462540764672", "1e-12"));

    CHECK(pm1(20).is_infinite());
    CHECK(pm1(21).enclosure() == Interval(Rational(49)));
    CHECK(pm1(48).enclosure() == Interval(Rational(19, 7)));

    CHECK(pc_harmonic(10).is_infinite());
    CHECK(near(pc_harmonic(11).enclosure(), "6.92202458681634", "1e-12"));
    CHECK(pc_biharmonic(12).is_infinite());
    CHECK(near(pc_biharmonic(13).enclosure(), "28.1723798198671", "1e-12"));
    CHECK_THROWS_AS(pc_harmonic(2), Error);
}

TEST_CASE("d0 decreases and stays in its band")
{
    Interval prev = d0_enclosure(15, R("1e-9"));
    for (long n : {16L, 18L, 21L, 30L, 50L, 100L, 300L, 1000L, 10000L}) {
        Interval cur = d0_enclosure(n, R("1e-9"));
        CHECK(certainly_less(cur, prev));
        CHECK(Rational(128) < cur.lo());
        CHECK(cur.hi() < Rational(187));
        prev = cur;
    }
}

TEST_CASE("d(n) < sqrt(n) on a log-uniform sample")
{
    for (long n = 15; n <= 10000; n = n * 5 / 4 + 1) {
        INFO("n = " << n);
        Interval d = d_enclosure(n, R("1e-9"));
        CHECK(d.hi() * d.hi() < Rational(n));
    }
}

TEST_CASE("ordering chain")
{
    for (long n = 15; n <= 200; n += 37) {
        auto r = exponent_chain_report(n);
        for (const auto& c : r.ordering) {
            INFO(n << " " << c.claim_id);
            CHECK(c.verified());
        }
    }
    auto r21 = exponent_chain_report(21);
    REQUIRE(r21.ordering.size() == 3);
    CHECK(r21.ordering[2].claim_id == "pm1<pm");
    CHECK(r21.ordering[2].verified());
    CHECK(r21.ordering[2].details["convention"] == "finite < infinity");

    auto r12 = exponent_chain_report(12);
    CHECK(r12.pc.is_infinite());
    REQUIRE(r12.ordering.size() == 1);
    CHECK(r12.ordering[0].verified());

    auto r31 = exponent_chain_report(31);
    CHECK(worst_status(r31.ordering) == Status::verified);
    auto j = r31.to_json();
    CHECK(j["n"] == 31);
    CHECK(j["exponents"]["pm"]["kind"] == "finite");
    CHECK(j["exponents"]["pm1"]["lo"] == "59/11");
    CHECK(j["certificates"].size() == 3);
    CHECK(r31.csv_row().rfind("31,", 0) == 0);

    Certificate wrong = certify_exponent_less(
        "pm<pc", "reversed", [](const Rational& w) { return pm(31, w); },
        [](const Rational& w) { return joseph_lundgren_triharmonic(31, w); });
    CHECK(wrong.status == Status::falsified);
}
