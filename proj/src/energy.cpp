#include "tle/energy.hpp"

#include "tle/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace tle {

namespace {

using Gauss = boost::math::quadrature::gauss<long double, 30>;

long double ld(const Rational& r) { return r.to_long_double(); }

// Radial part of Delta on the mode: F'' + (n-1) F'/r - mu F/r^2
Jet radial_laplacian(const Jet& F, const Jet& r, long double n, long double mu)
{
    Jet d1 = F.derivative();
    Jet d2 = d1.derivative();
    Jet rr = r.truncate(F.order());
    return d2 + (n - 1) * (d1 / rr.truncate(d1.order())) - mu * (F / (rr * rr));
}

long double signed_pow(long double x, long double e) { return std::copysign(std::pow(std::fabs(x), e), x); }

}  // namespace

std::string FormulaVariant::name() const
{
    if (formula == Formula::eq_7_1)
        return mu_terms == MuTerms::corrected ? "eq_7_1/corrected" : "eq_7_1";
    std::string s = "eq_2_3";
    if (final_term == FinalTerm::angular)
        s += "/angular";
    if (deltas == DeltaSource::printed)
        s += "/printed-deltas";
    return s;
}

FormulaVariant FormulaVariant::parse(const std::string& name)
{
    for (const auto& v : all())
        if (v.name() == name)
            return v;
    throw Error(ErrorKind::usage, "unknown formula variant '" + name + "'");
}

std::vector<FormulaVariant> FormulaVariant::all()
{
    std::vector<FormulaVariant> v;
    for (auto d : {DeltaSource::derived, DeltaSource::printed})
        for (auto t : {FinalTerm::laplacian, FinalTerm::angular})
            v.push_back({Formula::eq_2_3, t, d, MuTerms::printed});
    v.push_back({Formula::eq_7_1, FinalTerm::laplacian, DeltaSource::derived, MuTerms::printed});
    v.push_back({Formula::eq_7_1, FinalTerm::laplacian, DeltaSource::derived, MuTerms::corrected});
    return v;
}

namespace {

struct ModeForms {
    LinearForm V, W, DV;
};

ModeForms mode_forms(const Rational& n, const Rational& k, const Rational& mu)
{
    LinearForm f = LinearForm::g(0);
    ModeForms m;
    m.V = f.shifted_D(k - n + 2).shifted_D(k) - f * mu;
    m.W = m.V.shifted_D(k + 4 - n).shifted_D(k + 2) - m.V * mu;
    m.DV = m.V.D();
    return m;
}

}  // namespace

FluxAlgebra FluxAlgebra::build(long n, const Rational& k, long mu)
{
    FluxAlgebra a;
    a.n = Rational(n);
    a.k = k;
    a.mu = Rational(mu);
    ModeForms m = mode_forms(a.n, k, a.mu);
    LinearForm g1 = LinearForm::g(1), g2 = LinearForm::g(2);
    // lambda times the flux: d_r v * dv/dl + d_r w * du/dl - w * d_r du/dl on the unit sphere
    a.flux = QuadForm::product(m.V.shifted_D(k + 2), m.DV) + QuadForm::product(m.W.shifted_D(k + 4), g1) -
             QuadForm::product(m.W, g2 + g1 * (Rational(1) - k));
    a.flux_reduction = reduce(a.flux);
    return a;
}

QuadForm FluxAlgebra::formula(const FormulaVariant& v) const
{
    QuadForm q;
    const Rational& m = mu;
    if (v.formula == Formula::eq_7_1) {
        q.add(3, 3, 3);
        Rational A1 = coef::A1(n, k), A2 = coef::A2(n, k), B1 = coef::B1(n, k);
        if (v.mu_terms == MuTerms::printed) {
            q.add(2, 2, A1 + 2 * m);
            q.add(1, 1, A2 + B1 * m + m * m);
        } else {
            q.add(2, 2, A1 + 6 * m);
            q.add(1, 1, A2 + (B1 - 12) * m + 3 * m * m);
        }
        return q;
    }
    long nn = 0;
    {
        mpz_class z = n.num();
        nn = z.get_si();
    }
    auto d = deltas(Params::from_k(nn, k), v.deltas);
    Rational al = coef::alpha(n, k), be = coef::beta(n, k);
    q.add(3, 3, 2);
    q.add(2, 2, 10 * d[0] - 2 * d[1] - 56 + 4 * m);
    q.add(1, 1, -18 * d[0] + 6 * d[1] - 4 * d[2] + 2 * d[3] + 72 + (8 * al - 4 * be + 4 * n - 28) * m + 2 * m * m);
    if (v.final_term == FinalTerm::laplacian) {
        ModeForms mf = mode_forms(n, k, mu);
        q += QuadForm::product(mf.DV, mf.DV);
    } else {
        q.add(1, 1, m * m);
    }
    return q;
}

bool FluxAlgebra::consistent(const FormulaVariant& v) const
{
    return reduce(formula(v)).canonical == flux_reduction.canonical;
}

nlohmann::ordered_json FluxAlgebra::consistency_report() const
{
    nlohmann::ordered_json j;
    j["n"] = n.str();
    j["k"] = k.str();
    j["mu"] = mu.str();
    j["canonical_flux"] = flux_reduction.canonical.to_json();
    auto& vs = j["variants"] = nlohmann::ordered_json::array();
    for (const auto& v : FormulaVariant::all()) {
        Reduction r = reduce(formula(v));
        QuadForm diff = r.canonical - flux_reduction.canonical;
        vs.push_back({{"variant", v.name()}, {"consistent", diff.terms().empty()}, {"canonical_difference", diff.to_json()}});
    }
    return j;
}

nlohmann::ordered_json EnergyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["lambda"] = static_cast<double>(lambda);
    j["variant"] = variant;
    j["E"] = static_cast<double>(E);
    j["dE_formula"] = static_cast<double>(dE_formula);
    j["dE_fd"] = static_cast<double>(dE_fd);
    j["fd_step"] = static_cast<double>(fd_step);
    j["bulk_correction"] = static_cast<double>(correction);
    j["relative_residual"] = static_cast<double>(relative_residual);
    j["convergence_order_estimate"] = static_cast<double>(convergence_order_estimate);
    auto& s = j["steps"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < steps.size(); ++i)
        s.push_back({{"h", static_cast<double>(steps[i])},
                     {"fd", static_cast<double>(fd_values[i])},
                     {"abs_residual", static_cast<double>(residuals[i])}});
    return j;
}

EnergyModel::EnergyModel(HarmonicTestFunction u, const Rational& p, EnergyOptions opt)
    : u_(std::move(u)), p_(p), opt_(opt)
{
    if (u_.n < 7)
        throw Error(ErrorKind::usage, "energy needs n >= 7");
    if (p <= Rational(1))
        throw Error(ErrorKind::usage, "energy needs p > 1");
    Rational k = k_of_p(p);
    k_ = ld(k);
    n_ = static_cast<long double>(u_.n);
    mu_ = u_.mu();
    if (u_.shape.kind == ProfileKind::power) {
        long double s = u_.shape.exponent;
        if (!(2 * s + n_ - 6 > 0) || !(s * (ld(p) + 1) + n_ > 0))
            throw Error(ErrorKind::data, "divergent bulk integral");
    }
    cY_ = sphere_moment(u_.n, u_.l, ld(p) + 1);
    long mu = static_cast<long>(u_.l) * (static_cast<long>(u_.l) + u_.n - 2);
    alg_ = FluxAlgebra::build(u_.n, k, mu);
    for (const auto& v : FormulaVariant::all())
        reductions_.emplace_back(v, reduce(alg_.formula(v)));
    Rational n(u_.n);
    A1_ = ld(coef::A1(n, k));
    A2_ = ld(coef::A2(n, k));
    B1_ = ld(coef::B1(n, k));
}

const Reduction& EnergyModel::reduction(const FormulaVariant& v) const
{
    for (const auto& [w, r] : reductions_)
        if (w.name() == v.name())
            return r;
    throw Error(ErrorKind::usage, "unknown formula variant");
}

std::vector<long double> EnergyModel::g(long double lambda) const
{
    std::size_t N = opt_.jet_order;
    Jet L = Jet::variable(lambda, N);
    Jet f = pow(L, k_) * u_.radial(L);
    std::vector<long double> g(N + 1);
    long double lp = 1.0L;
    for (std::size_t j = 0; j <= N; ++j) {
        g[j] = lp * f.deriv(j);
        lp *= lambda;
    }
    return g;
}

EnergyModel::Bulk EnergyModel::bulk(long double lambda) const
{
    if (!(lambda > 0))
        throw Error(ErrorKind::usage, "lambda must be positive");
    std::vector<long double> pts;
    for (int i = opt_.levels; i >= 0; --i)
        pts.push_back(std::ldexp(lambda, -i));
    long double kink = u_.kink();
    if (kink > 0 && kink < lambda) {
        pts.push_back(kink);
        std::sort(pts.begin(), pts.end());
    }
    long double p = ld(p_);
    auto integrands = [&](long double rho, long double& e, long double& c) {
        Jet r = Jet::variable(rho, opt_.jet_order);
        Jet R = u_.radial(r);
        Jet v = radial_laplacian(R, r, n_, mu_);
        Jet w = radial_laplacian(v, r, n_, mu_);
        Jet z = radial_laplacian(w, r, n_, mu_);
        long double R0 = R.value(), R1 = R.deriv(1);
        long double v0 = v.value(), v1 = v.deriv(1);
        long double vol = std::pow(rho, n_ - 1);
        e = (0.5L * (v1 * v1 + mu_ * v0 * v0 / (rho * rho)) - cY_ / (p + 1) * std::pow(std::fabs(R0), p + 1)) * vol;
        c = (z.value() + cY_ * signed_pow(R0, p)) * (k_ * R0 + rho * R1) * vol;
    };
    long double E = 0.0L, C = 0.0L;
    if (opt_.pieces_per_level > 1) {
        std::vector<long double> fine;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            for (int j = 0; j < opt_.pieces_per_level; ++j)
                fine.push_back(pts[i] + (pts[i + 1] - pts[i]) * j / opt_.pieces_per_level);
        fine.push_back(pts.back());
        pts = std::move(fine);
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        E += Gauss::integrate(
            [&](long double rho) {
                long double e, c;
                integrands(rho, e, c);
                return e;
            },
            pts[i], pts[i + 1]);
        C += Gauss::integrate(
            [&](long double rho) {
                long double e, c;
                integrands(rho, e, c);
                return c;
            },
            pts[i], pts[i + 1]);
    }
    Bulk b;
    b.energy = std::pow(lambda, 2 * k_ + 6 - n_) * E;
    b.correction = -std::pow(lambda, 2 * k_ + 5 - n_) * C;
    if (!std::isfinite(b.energy) || !std::isfinite(b.correction))
        throw Error(ErrorKind::data, "divergent bulk integral");
    return b;
}

long double EnergyModel::energy(long double lambda, const FormulaVariant& v) const
{
    auto gv = g(lambda);
    return bulk(lambda).energy - alg_.flux_reduction.boundary.eval(gv) + reduction(v).boundary.eval(gv);
}

std::pair<long double, long double> EnergyModel::dE_formula_scaled(long double lambda, const FormulaVariant& v) const
{
    auto gv = g(lambda);
    QuadForm q = alg_.formula(v);
    long double corr = bulk(lambda).correction;
    long double mag = std::fabs(corr);
    for (const auto& [key, c] : q.terms())
        mag += std::fabs(ld(c) * gv[key.first] * gv[key.second]) / lambda;
    return {q.eval(gv) / lambda + corr, mag};
}

long double EnergyModel::dE_formula(long double lambda, const FormulaVariant& v) const
{
    return dE_formula_scaled(lambda, v).first;
}

long double EnergyModel::split_coefficient(long double alpha) const
{
    if (alpha < 0 || alpha >= 1)
        throw Error(ErrorKind::usage, "split parameter must lie in [0, 1)");
    return 2 * std::sqrt(3 * alpha * A2_);
}

long double EnergyModel::energy_c(long double lambda, long double alpha) const
{
    long double s = split_coefficient(alpha);
    auto gv = g(lambda);
    long double adj = 6 * gv[2] * gv[2] + s * (gv[1] * gv[2] - 0.5L * gv[1] * gv[1]);
    return bulk(lambda).energy - alg_.flux_reduction.boundary.eval(gv) + adj;
}

long double EnergyModel::dEc_direct(long double lambda, long double alpha) const
{
    long double s = split_coefficient(alpha);
    auto gv = g(lambda);
    auto dg = [&](int i) { return (i * gv[i] + gv[i + 1]) / lambda; };
    long double adj = 12 * gv[2] * dg(2) + s * (dg(1) * gv[2] + gv[1] * dg(2) - gv[1] * dg(1));
    return alg_.flux_reduction.canonical.eval(gv) / lambda + adj;
}

long double EnergyModel::dEc_squares(long double lambda, long double alpha) const
{
    long double s = split_coefficient(alpha);
    auto gv = g(lambda);
    long double X = gv[3] + 2 * gv[2];
    long double sq = std::sqrt(3.0L) * X + std::sqrt(alpha * A2_) * gv[1];
    long double total = sq * sq + (A1_ + 12 + s + 6 * mu_) * gv[2] * gv[2] +
                        ((1 - alpha) * A2_ - s + (B1_ - 12) * mu_ + 3 * mu_ * mu_) * gv[1] * gv[1];
    return total / lambda;
}

long double fd_richardson(const std::function<long double(long double)>& E, long double lambda, long double h)
{
    auto central = [&](long double s) { return (E(lambda + s) - E(lambda - s)) / (2 * s); };
    return (4 * central(h / 2) - central(h)) / 3;
}

EnergyReport fd_check(const EnergyModel& m, long double lambda, const FormulaVariant& v,
                      std::vector<long double> step_factors)
{
    if (step_factors.empty())
        throw Error(ErrorKind::usage, "fd_check needs at least one step");
    for (std::size_t i = 0; i < step_factors.size(); ++i)
        if (!(step_factors[i] > 0) || (i && step_factors[i] >= step_factors[i - 1]))
            throw Error(ErrorKind::usage, "fd steps must be positive and decreasing");
    EnergyReport r;
    r.lambda = lambda;
    r.variant = v.name();
    auto E = [&](long double x) { return m.energy(x, v); };
    r.E = E(lambda);
    auto [formula, mag] = m.dE_formula_scaled(lambda, v);
    r.dE_formula = formula;
    r.correction = m.bulk(lambda).correction;
    r.scale = mag;
    for (long double c : step_factors) {
        long double h = c * lambda;
        long double fd = (E(lambda + h) - E(lambda - h)) / (2 * h);
        r.steps.push_back(h);
        r.fd_values.push_back(fd);
        r.residuals.push_back(std::fabs(fd - formula));
    }
    // least-squares slope of log residual against log h
    if (r.steps.size() >= 2) {
        long double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < r.steps.size(); ++i) {
            if (!(r.residuals[i] > 0))
                continue;
            long double x = std::log(r.steps[i]), y = std::log(r.residuals[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++cnt;
        }
        if (cnt >= 2)
            r.convergence_order_estimate = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    }
    r.fd_step = 1e-3L * lambda;
    r.dE_fd = fd_richardson(E, lambda, r.fd_step);
    long double denom = std::max({mag, std::fabs(formula), std::numeric_limits<long double>::min()});
    r.relative_residual = std::fabs(r.dE_fd - formula) / denom;
    return r;
}

long double IdentityReport::max_relative() const
{
    long double m = 0;
    for (const auto& i : identities)
        m = std::max(m, i.max_relative);
    return m;
}

nlohmann::ordered_json IdentityReport::to_json() const
{
    nlohmann::ordered_json j;
    j["samples"] = samples;
    auto& a = j["identities"] = nlohmann::ordered_json::array();
    for (const auto& i : identities)
        a.push_back({{"name", i.name},
                     {"max_relative_residual", static_cast<double>(i.max_relative)},
                     {"max_relative_residual_printed", static_cast<double>(i.max_relative_printed)}});
    j["max_relative_residual"] = static_cast<double>(max_relative());
    return j;
}

std::vector<std::pair<long double, long double>> random_lambda_r(std::size_t count, unsigned seed)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> L(0.5, 2.0), R(0.5, 1.5);
    std::vector<std::pair<long double, long double>> v;
    for (std::size_t i = 0; i < count; ++i) {
        long double l = L(gen);
        v.emplace_back(l, R(gen));
    }
    return v;
}

IdentityReport identity_suite_3_2(const HarmonicTestFunction& u, const Rational& p,
                                  const std::vector<std::pair<long double, long double>>& lambda_r)
{
    Rational kq = k_of_p(p);
    long double k = ld(kq);
    LinearForm f = LinearForm::g(0);

    // r^j d_r^j u^l as forms in g_i = lambda^i d^i u^l / dlambda^i (at fixed r)
    std::vector<LinearForm> radial(5);
    radial[0] = f;
    for (int j = 1; j <= 4; ++j)
        radial[j] = radial[j - 1].shifted_D(kq + Rational(j - 1));
    // lambda r^3 d_r^3 du^l/dl
    LinearForm mixed = f.D();
    for (int j = 0; j < 3; ++j)
        mixed = mixed.shifted_D(kq + Rational(j));

    using V = std::vector<long double>;
    auto printed = [&](const std::string& name) -> V {
        if (name == "3.8")
            return {-k, 1};
        if (name == "3.15")
            return {k * (1 + k), -2 * k, 1};
        if (name == "3.17")
            return {-(2 + k) * (1 + k) * k, 3 * k + 3 * k * k, -3 * k, 1};
        if (name == "3.21")
            return {0, (1 - k) * (1 + k) * k, -3 * k * (1 - k), 3 - 3 * k, 1};
        return {(3 + k) * (2 + k) * (1 + k) * k, -8 * k * (1 + k) * (1 + k / 2), (2 + 2 * k) * 3 * k, -4 * k, 1};
    };
    struct Spec {
        std::string name;
        LinearForm derived;
    };
    std::vector<Spec> specs = {{"3.8", radial[1]}, {"3.15", radial[2]}, {"3.17", radial[3]}, {"3.21", mixed},
                               {"d4r", radial[4]}};

    IdentityReport rep;
    rep.samples = lambda_r.size();
    for (const auto& s : specs)
        rep.identities.push_back({s.name, 0, 0});

    for (auto [lambda, r] : lambda_r) {
        Jet L = Jet::variable(lambda, 5);
        Jet F = pow(L, k) * u.radial(L * r);
        V gl(6);
        long double lp = 1;
        for (int j = 0; j <= 5; ++j) {
            gl[j] = lp * F.deriv(j);
            lp *= lambda;
        }
        Jet rr = Jet::variable(r, 5);
        Jet Rj = u.radial(rr * lambda);
        long double lk = std::pow(lambda, k);
        Jet G = lk * Rj;
        Jet H = (k * lk / lambda) * Rj + lk * (rr.truncate(4) * (Rj.derivative() * (1 / lambda)));
        auto lhs = [&](const std::string& name) {
            if (name == "3.21")
                return lambda * r * r * r * H.deriv(3);
            int j = name == "3.8" ? 1 : name == "3.15" ? 2 : name == "3.17" ? 3 : 4;
            return std::pow(r, static_cast<long double>(j)) * G.deriv(j);
        };
        for (std::size_t i = 0; i < specs.size(); ++i) {
            long double l = lhs(specs[i].name);
            auto rel = [&](const V& c) {
                long double val = 0, mag = std::fabs(l) + std::fabs(gl[0]);
                for (std::size_t j = 0; j < c.size(); ++j) {
                    val += c[j] * gl[j];
                    mag += std::fabs(c[j] * gl[j]);
                }
                return mag > 0 ? std::fabs(l - val) / mag : 0.0L;
            };
            V dc;
            for (const auto& c : specs[i].derived.coeffs())
                dc.push_back(ld(c));
            rep.identities[i].max_relative = std::max(rep.identities[i].max_relative, rel(dc));
            rep.identities[i].max_relative_printed = std::max(rep.identities[i].max_relative_printed, rel(printed(specs[i].name)));
        }
    }
    return rep;
}

long double jordan_residual(const ScalarJetFn& f, long double A1, long double A2, long double l0, long double l1,
                            long double c1, long double c2)
{
    long double d1 = A1 - 3 * c1 * c1 + 12 * c1;
    long double d2 = A2 - (c2 * c2 - 2 * c2) * d1;
    auto derivs = [&](long double x) {
        Jet v = f(Jet::variable(x, 3));
        return std::array<long double, 4>{v.deriv(0), v.deriv(1), v.deriv(2), v.deriv(3)};
    };
    auto integrand = [&](long double x) {
        auto d = derivs(x);
        long double lhs = 3 * std::pow(x, 5) * d[3] * d[3] + A1 * x * x * x * d[2] * d[2] + A2 * x * d[1] * d[1];
        long double a = x * x * d[3] + c1 * x * d[2];
        long double b = x * d[2] + c2 * d[1];
        long double rhs = 3 * x * a * a + d1 * x * b * b + d2 * x * d[1] * d[1];
        return lhs - rhs;
    };
    auto boundary = [&](long double x) {
        auto d = derivs(x);
        return 3 * c1 * std::pow(x, 4) * d[2] * d[2] + c2 * d1 * x * x * d[1] * d[1];
    };
    constexpr int pieces = 16;
    long double s = 0;
    for (int i = 0; i < pieces; ++i) {
        long double a = l0 + (l1 - l0) * i / pieces, b = l0 + (l1 - l0) * (i + 1) / pieces;
        s += Gauss::integrate(integrand, a, b);
    }
    return std::fabs(s + boundary(l1) - boundary(l0));
}

JordanScan jordan_c1_scan(const ScalarJetFn& f, long double A1, long double A2, long double l0, long double l1,
                          long double c1_lo, long double c1_hi, int points)
{
    JordanScan s;
    s.best_d1 = -std::numeric_limits<long double>::infinity();
    for (int i = 0; i < points; ++i) {
        long double c1 = c1_lo + (c1_hi - c1_lo) * i / (points - 1);
        long double d1 = A1 - 3 * c1 * c1 + 12 * c1;
        if (d1 > s.best_d1) {
            s.best_d1 = d1;
            s.best_c1 = c1;
        }
        if (i % 40 == 0)
            s.max_residual = std::max(s.max_residual, jordan_residual(f, A1, A2, l0, l1, c1, 0));
    }
    return s;
}

nlohmann::ordered_json BoundCheck::to_json() const
{
    nlohmann::ordered_json j;
    j["defined"] = defined;
    if (defined)
        j["infimum_ratio"] = static_cast<double>(infimum_ratio);
    else
        j["infimum_ratio"] = nullptr;
    j["min_dEc"] = static_cast<double>(min_dEc);
    j["samples"] = samples;
    j["skipped"] = skipped;
    return j;
}

BoundCheck monotonicity_bound_check(const EnergyModel& m, long double alpha, const std::vector<long double>& lambdas)
{
    BoundCheck b;
    b.infimum_ratio = std::numeric_limits<long double>::infinity();
    b.min_dEc = std::numeric_limits<long double>::infinity();
    for (long double l : lambdas) {
        auto gv = m.g(l);
        long double rhs = gv[1] * gv[1] / l;
        long double d = m.dEc_squares(l, alpha);
        ++b.samples;
        b.min_dEc = std::min(b.min_dEc, d);
        long double scale = std::fabs(gv[0] * gv[0]) / l;
        if (!(rhs > 1e-24L * std::max(scale, 1e-300L)) || rhs == 0) {
            ++b.skipped;
            continue;
        }
        b.defined = true;
        b.infimum_ratio = std::min(b.infimum_ratio, d / rhs);
    }
    if (b.samples == 0)
        b.min_dEc = 0;
    return b;
}

nlohmann::ordered_json NonnegativityReport::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = p.str();
    j["alpha"] = alpha.str();
    j["samples"] = samples;
    j["min_dEc_direct"] = static_cast<double>(min_direct);
    j["min_dEc_squares"] = static_cast<double>(min_squares);
    j["max_identity_gap"] = static_cast<double>(max_identity_gap);
    j["max_fd_gap"] = static_cast<double>(max_fd_gap);
    j["nonnegative"] = nonnegative;
    return j;
}

std::vector<HarmonicTestFunction> test_matrix(long n)
{
    std::vector<HarmonicTestFunction> v;
    for (unsigned l : {0u, 1u, 2u}) {
        v.push_back(HarmonicTestFunction::gaussian(n, l, 1.0L));
        v.push_back(HarmonicTestFunction::polynomial_bump(n, l, {1.0L, 0.3L}, 3.0L));
        v.push_back(HarmonicTestFunction::exponential_decay(n, l, 1.5L));
    }
    return v;
}

std::vector<long double> test_lambdas() { return {0.5L, 0.8L, 1.2L, 1.7L, 2.4L}; }

NonnegativityReport nonnegativity_check(long n, const Rational& p, const Rational& alpha,
                                        const std::vector<HarmonicTestFunction>& functions,
                                        const std::vector<long double>& lambdas, long double tolerance, bool with_fd)
{
    NonnegativityReport r;
    r.n = n;
    r.p = p;
    r.alpha = alpha;
    r.min_direct = r.min_squares = std::numeric_limits<long double>::infinity();
    long double a = ld(alpha);
    for (const auto& u : functions) {
        if (u.n != n)
            throw Error(ErrorKind::usage, "test function dimension does not match n");
        EnergyModel m(u, p);
        for (long double l : lambdas) {
            long double d = m.dEc_direct(l, a), s = m.dEc_squares(l, a);
            auto gv = m.g(l);
            long double mag = 0;
            for (int i = 0; i <= 3; ++i)
                mag += gv[i] * gv[i];
            mag /= l;
            r.min_direct = std::min(r.min_direct, d);
            r.min_squares = std::min(r.min_squares, s);
            r.max_identity_gap = std::max(r.max_identity_gap, std::fabs(d - s) / std::max(mag, 1e-300L));
            if (with_fd) {
                long double fd = fd_richardson([&](long double x) { return m.energy_c(x, a); }, l, 1e-3L * l);
                long double corr = m.bulk(l).correction;
                long double denom = std::max({std::fabs(d) + std::fabs(corr), mag, 1e-300L});
                r.max_fd_gap = std::max(r.max_fd_gap, std::fabs(fd - corr - d) / denom);
            }
            ++r.samples;
        }
    }
    r.nonnegative = r.samples > 0 && r.min_direct >= -tolerance && r.min_squares >= -tolerance;
    return r;
}

}  // namespace tle
