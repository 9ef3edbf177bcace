#include "tle/coefficients.hpp"
#include "tle/energy.hpp"
#include "tle/error.hpp"
#include "tle/jet.hpp"
#include "tle/profiles.hpp"
#include "tle/radial.hpp"

#include <doctest.h>

#include <cmath>

using namespace tle;

namespace {

long double rel(long double a, long double b)
{
    return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300L});
}

}  // namespace

TEST_CASE("jets")
{
    Jet x = Jet::variable(0.7L, 6);
    Jet y = exp(sin(x)) / (1 + x * x);
    long double h = 1e-4L;
    auto f = [](long double t) { return std::exp(std::sin(t)) / (1 + t * t); };
    CHECK(y.value() == doctest::Approx(static_cast<double>(f(0.7L))).epsilon(1e-15));
    long double fd = (f(0.7L + h) - f(0.7L - h)) / (2 * h);
    CHECK(std::fabs(y.deriv(1) - fd) < 1e-7);
    Jet z = pow(x, 2.5L);
    CHECK(rel(z.deriv(3), 2.5L * 1.5L * 0.5L * std::pow(0.7L, -0.5L)) < 1e-15);
    CHECK(rel(log(exp(x)).deriv(4), 0) == 0);
    CHECK(rel(ipow(x, 3).deriv(3), 6) < 1e-18);
}

TEST_CASE("parameter scaling matches the pointwise blow-down")
{
    long double k = k_of_p(Rational(4)).to_long_double();
    auto check = [&](const HarmonicTestFunction& u) {
        for (long double lam : {2.0L, 0.7L}) {
            HarmonicTestFunction s = scale(u, lam, k);
            for (int i = 1; i <= 10; ++i) {
                long double r = 0.3L * i;
                CHECK(rel(s.radial(r), std::pow(lam, k) * u.radial(lam * r)) < 1e-15);
            }
        }
    };
    check(HarmonicTestFunction::gaussian(12, 0, 1.0L));
    check(HarmonicTestFunction::gaussian(12, 2, 0.8L));
    check(HarmonicTestFunction::exponential_decay(12, 1, 1.5L));
    check(HarmonicTestFunction::polynomial_bump(12, 2, {1, 0.3L}, 3.0L));
}

TEST_CASE("sphere moments")
{
    CHECK(rel(sphere_area(3), 4 * std::acos(-1.0L)) < 1e-16);
    CHECK(rel(sphere_moment(12, 0, 2), 1) < 1e-14);
    CHECK(rel(sphere_moment(12, 2, 2), 1) < 1e-14);
}

TEST_CASE("exact flux algebra selects the consistent readings")
{
    for (auto [n, p] : std::vector<std::pair<long, long>>{{12, 4}, {15, 3}, {21, 2}}) {
        Rational k = k_of_p(Rational(p));
        for (long l : {0, 1, 2}) {
            auto alg = FluxAlgebra::build(n, k, l * (l + n - 2));
            CHECK(alg.consistent(FormulaVariant::parse("eq_2_3")));
            CHECK_FALSE(alg.consistent(FormulaVariant::parse("eq_2_3/angular")));
            CHECK_FALSE(alg.consistent(FormulaVariant::parse("eq_2_3/printed-deltas")));
            CHECK(alg.consistent(FormulaVariant::parse("eq_7_1/corrected")));
            CHECK(alg.consistent(FormulaVariant::parse("eq_7_1")) == (l == 0));
        }
    }
    auto alg = FluxAlgebra::build(12, Rational(2), 0);
    const auto& c = alg.flux_reduction.canonical;
    CHECK(c.diagonal());
    CHECK(c.coeff(1, 1) == Rational(1575));
    CHECK(c.coeff(2, 2) == Rational(141));
    CHECK(c.coeff(3, 3) == Rational(3));
    CHECK(c.coeff(1, 1) == coef::A2(Rational(12), Rational(2)));
    CHECK(c.coeff(2, 2) == coef::A1(Rational(12), Rational(2)));
    CHECK_THROWS_AS(FormulaVariant::parse("eq_9_9"), Error);
}

TEST_CASE("scaling identities for u^lambda")
{
    auto rep = identity_suite_3_2(HarmonicTestFunction::gaussian(12, 0, 1.0L), Rational(4), random_lambda_r(20, 7));
    CHECK(rep.identities.size() == 5);
    CHECK(rep.max_relative() < 1e-9);
    auto bump = identity_suite_3_2(HarmonicTestFunction::polynomial_bump(15, 2, {1, 0.3L}, 3.0L), Rational(3),
                                   random_lambda_r(20, 11));
    CHECK(bump.max_relative() < 1e-9);
    long double k = k_of_p(Rational(4)).to_long_double();
    auto hom = identity_suite_3_2(HarmonicTestFunction::homogeneous(12, 0, k), Rational(4), random_lambda_r(10, 3));
    CHECK(hom.max_relative() < 1e-12);
}

TEST_CASE("energy of simple profiles")
{
    EnergyModel zero(HarmonicTestFunction::gaussian(12, 0, 1.0L, 0.0L), Rational(4));
    CHECK(zero.energy(1.0L) == 0);
    CHECK(zero.dE_formula(1.0L) == 0);

    HarmonicTestFunction g = HarmonicTestFunction::gaussian(12, 0, 1.0L);
    EnergyOptions fine;
    fine.pieces_per_level = 2;
    long double e1 = EnergyModel(g, Rational(4)).energy(1.0L);
    long double e2 = EnergyModel(g, Rational(4), fine).energy(1.0L);
    CHECK(rel(e1, e2) < 1e-10);
    CHECK(rel(e1, 465.01092348065719762L) < 1e-10);

    CHECK_THROWS_AS(EnergyModel(HarmonicTestFunction::power(12, 0, -4.0L), Rational(4)), Error);
}

TEST_CASE("homogeneous profile is a fixed point of the scaling")
{
    for (auto [n, p] : std::vector<std::pair<long, long>>{{12, 4}, {15, 3}, {21, 2}}) {
        long double k = k_of_p(Rational(p)).to_long_double();
        for (unsigned l : {0u, 1u}) {
            EnergyModel m(HarmonicTestFunction::homogeneous(n, l, k), Rational(p));
            for (long double lam : test_lambdas())
                CHECK(std::fabs(m.dE_formula(lam)) < 1e-12);
            CHECK(std::fabs(m.energy(0.6L) - m.energy(2.1L)) < 1e-10);
        }
    }
}

TEST_CASE("finite-difference referee")
{
    EnergyModel m(HarmonicTestFunction::gaussian(12, 1, 1.0L), Rational(4));
    auto r = fd_check(m, 1.2L);
    CHECK(r.relative_residual < 1e-6);
    CHECK(r.convergence_order_estimate > 1.8);
    CHECK(r.convergence_order_estimate < 2.2);
    auto c = fd_check(m, 1.2L, FormulaVariant::parse("eq_7_1/corrected"));
    CHECK(c.relative_residual < 1e-6);
    auto wrong = fd_check(m, 1.2L, FormulaVariant::parse("eq_2_3/angular"));
    CHECK(wrong.relative_residual > 1e-3);
}

TEST_CASE("energy scale invariance")
{
    long double k = k_of_p(Rational(3)).to_long_double();
    HarmonicTestFunction u = HarmonicTestFunction::exponential_decay(15, 1, 1.2L);
    EnergyModel base(u, Rational(3));
    for (auto [lam, R] : random_lambda_r(5, 5)) {
        EnergyModel s(scale(u, lam, k), Rational(3));
        CHECK(rel(base.energy(R * lam), s.energy(R)) < 1e-10);
    }
}

TEST_CASE("lemma-7.2 Jordan decomposition")
{
    ScalarJetFn quad = [](const Jet& x) { return 1 + 2 * x - 0.5L * x * x; };
    CHECK(jordan_residual(quad, 3, 5, 0.5L, 2) < 1e-12);
    long double A1 = coef::A1(Rational(15), Rational(1)).to_long_double();
    long double A2 = coef::A2(Rational(15), Rational(1)).to_long_double();
    ScalarJetFn s = [](const Jet& x) { return sin(x); };
    CHECK(jordan_residual(s, A1, A2, 0.5L, 2) < 1e-9);
    CHECK(jordan_residual(s, A1, A2, 0.5L, 2, 1.3L, 0.4L) < 1e-9);
    auto scan = jordan_c1_scan(s, A1, A2, 0.5L, 2);
    CHECK(scan.best_c1 == doctest::Approx(2.0));
    CHECK(rel(scan.best_d1, A1 + 12) < 1e-15);
    CHECK(scan.max_residual < 1e-9);
}

TEST_CASE("modified energy")
{
    EnergyModel m(HarmonicTestFunction::gaussian(12, 0, 1.0L), Rational(4));
    for (long double lam : test_lambdas()) {
        long double d = m.dEc_direct(lam, 0.5L);
        CHECK(rel(d, m.dEc_squares(lam, 0.5L)) < 1e-9);
        d += m.bulk(lam).correction;
        long double fd = fd_richardson([&](long double l) { return m.energy_c(l, 0.5L); }, lam, 1e-3L * lam);
        CHECK(rel(d, fd) < 1e-6);
    }
    auto b = monotonicity_bound_check(m, 0.5L, test_lambdas());
    CHECK(b.defined);
    CHECK(b.infimum_ratio > 0);

    long double k = k_of_p(Rational(4)).to_long_double();
    EnergyModel h(HarmonicTestFunction::homogeneous(12, 0, k), Rational(4));
    auto hb = monotonicity_bound_check(h, 0.5L, test_lambdas());
    CHECK_FALSE(hb.defined);
    CHECK(hb.skipped == test_lambdas().size());
}

TEST_CASE("nonnegativity on the test matrix")
{
    auto r = nonnegativity_check(12, Rational(4), Rational(1, 2), test_matrix(12), test_lambdas(), 1e-10L, false);
    CHECK(r.nonnegative);
    CHECK(r.samples == test_matrix(12).size() * test_lambdas().size());
    CHECK(r.max_identity_gap < 1e-8);
    auto w = nonnegativity_check(21, Rational(2), Rational(9342, 10000), test_matrix(21), test_lambdas(), 1e-10L,
                                 false);
    CHECK(w.nonnegative);
}

TEST_CASE("radial solver")
{
    auto zero = radial_ivp_solve(15, Rational(7), 0, 0, 0, 2);
    for (const auto& y : zero.y)
        for (auto c : y)
            CHECK(c == 0);
    CHECK(pohozaev_residual(zero, 2).residual == 0);

    auto prof = radial_ivp_solve(15, Rational(7), 1, 0, 0, 2);
    CHECK_FALSE(prof.blow_up);
    CHECK(prof.ode_defect <= prof.tol);
    CHECK(prof.r.back() == 2);
    auto ref = radial_refinement_check(15, Rational(7), 1, 0, 0, 2, 1e-10L);
    CHECK(ref.consistent);
    auto poh = pohozaev_residual(prof, 2);
    CHECK(poh.relative < 1e-6);
    CHECK(poh.printed_relative > 1e-2);
    CHECK(pohozaev_residual(scale(prof, 2), 1).relative < 1e-6);
    CHECK_THROWS_AS(pohozaev_residual(prof, 3), Error);

    auto back = RadialProfile::from_json(prof.to_json());
    CHECK(back.r.size() == prof.r.size());
    CHECK(pohozaev_residual(back, 2).relative < 1e-6);

    auto wild = radial_ivp_solve(15, Rational(7), 1, 10, -100, 50);
    CHECK(wild.blow_up);
    CHECK(wild.blow_up_radius < 50);
}

TEST_CASE("singular solution on an annulus")
{
    auto s = singular_annulus_check(15, Rational(7), 0.5L, 2.0L, 1e-10L);
    CHECK(s.preserved);
    long double k = k_of_p(Rational(7)).to_long_double();
    CHECK(rel(std::pow(s.amplitude, 6), coef::k0(Rational(15), Rational(1)).to_long_double()) < 1e-15);
    CHECK(k == 1);

    RadialOptions opt;
    auto prof = radial_solve_from(15, Rational(7), 0.5L, singular_state(15, Rational(7), 0.5L), 2.0L, opt);
    auto poh = pohozaev_residual(prof, 2.0L);
    CHECK(poh.inner_correction != 0);
    CHECK(poh.relative < 1e-6);
    CHECK_THROWS_AS(singular_amplitude_value(12, Rational(2)), Error);
}
