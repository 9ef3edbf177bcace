#include "tle/radial.hpp"

#include "tle/coefficients.hpp"
#include "tle/error.hpp"
#include "tle/profiles.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

namespace tle {

namespace odeint = boost::numeric::odeint;

namespace {

struct BlowUp {};

using Stepper = odeint::runge_kutta_fehlberg78<RadialState, long double, RadialState, long double>;

struct System {
    long double n, p, bound;
    void operator()(const RadialState& y, RadialState& dy, long double r) const
    {
        for (int i = 0; i < 6; ++i)
            if (!std::isfinite(y[i]) || std::fabs(y[i]) > bound)
                throw BlowUp{};
        long double au = std::fabs(y[0]);
        long double g = std::copysign(std::pow(au, p), y[0]);
        long double c = (n - 1) / r;
        dy[0] = y[1];
        dy[1] = y[2] - c * y[1];
        dy[2] = y[3];
        dy[3] = y[4] - c * y[3];
        dy[4] = y[5];
        dy[5] = -g - c * y[5];
        dy[6] = au * g * std::copysign(1.0L, y[0]) * std::pow(r, n - 1);
    }
};

RadialState advance(const System& sys, RadialState y, long double a, long double b, long double tol)
{
    if (b <= a)
        return y;
    auto ctl = odeint::make_controlled<Stepper>(tol, tol);
    odeint::integrate_adaptive(ctl, sys, y, a, b, (b - a) / 16);
    return y;
}

void fill(RadialProfile& prof, const RadialState& y0, long double r_max, const RadialOptions& opt)
{
    if (!(r_max > prof.r_start))
        throw Error(ErrorKind::usage, "r_max must exceed the start radius");
    if (!(opt.tol > 0) || !(opt.output_step > 0))
        throw Error(ErrorKind::usage, "tolerance and output step must be positive");
    System sys{static_cast<long double>(prof.n), prof.p.to_long_double(), opt.blow_up_bound};
    std::vector<long double> times{prof.r_start};
    for (long i = 1;; ++i) {
        long double t = prof.r_start + i * opt.output_step;
        if (t >= r_max - 1e-12L * r_max)
            break;
        times.push_back(t);
    }
    times.push_back(r_max);
    prof.tol = opt.tol;
    RadialState y = y0;
    auto ctl = odeint::make_controlled<Stepper>(opt.tol, opt.tol);
    auto observer = [&](const RadialState& s, long double r) {
        prof.r.push_back(r);
        prof.y.push_back(s);
    };
    try {
        odeint::integrate_times(ctl, sys, y, times.begin(), times.end(), opt.output_step / 8, observer);
    } catch (const BlowUp&) {
        prof.blow_up = true;
    } catch (const std::exception&) {
        prof.blow_up = true;
    }
    if (prof.blow_up)
        prof.blow_up_radius = prof.r.empty() ? prof.r_start : prof.r.back();
    if (opt.measure_defect) {
        for (std::size_t i = 0; i + 1 < prof.r.size(); ++i) {
            RadialState z;
            try {
                z = advance(sys, prof.y[i], prof.r[i], prof.r[i + 1], opt.tol / 100);
            } catch (const BlowUp&) {
                break;
            }
            for (int c = 0; c < 7; ++c)
                prof.ode_defect = std::max(prof.ode_defect, std::fabs(z[c] - prof.y[i + 1][c]) /
                                                                std::max(1.0L, std::fabs(prof.y[i + 1][c])));
        }
    }
}

}  // namespace

RadialProfile radial_ivp_solve(long n, const Rational& p, long double u0, long double v0, long double w0,
                               long double r_max, const RadialOptions& opt)
{
    if (n < 7)
        throw Error(ErrorKind::usage, "radial solver needs n >= 7");
    if (p <= Rational(1))
        throw Error(ErrorKind::usage, "radial solver needs p > 1");
    if (!std::isfinite(u0) || !std::isfinite(v0) || !std::isfinite(w0))
        throw Error(ErrorKind::data, "initial values must be finite");
    RadialProfile prof;
    prof.n = n;
    prof.p = p;
    prof.u0 = u0;
    prof.v0 = v0;
    prof.w0 = w0;
    prof.r_start = opt.r_eps;
    prof.regular_start = true;

    long double N = static_cast<long double>(n), P = p.to_long_double();
    long double au = std::fabs(u0);
    long double g0 = std::copysign(std::pow(au, P), u0);
    long double dg0 = au > 0 ? P * std::pow(au, P - 1) : 0.0L;
    long double U1 = v0 / (2 * N), V1 = w0 / (2 * N), W1 = -g0 / (2 * N);
    long double U2 = V1 / (4 * (N + 2)), V2 = W1 / (4 * (N + 2)), W2 = -dg0 * U1 / (4 * (N + 2));
    long double r = opt.r_eps, r2 = r * r;
    RadialState y0{u0 + U1 * r2 + U2 * r2 * r2, 2 * U1 * r + 4 * U2 * r2 * r,
                   v0 + V1 * r2 + V2 * r2 * r2, 2 * V1 * r + 4 * V2 * r2 * r,
                   w0 + W1 * r2 + W2 * r2 * r2, 2 * W1 * r + 4 * W2 * r2 * r,
                   std::pow(au, P + 1) * std::pow(r, N) / N};
    fill(prof, y0, r_max, opt);
    return prof;
}

RadialProfile radial_solve_from(long n, const Rational& p, long double r0, const RadialState& y0, long double r_max,
                                const RadialOptions& opt)
{
    if (!(r0 > 0))
        throw Error(ErrorKind::usage, "start radius must be positive");
    RadialProfile prof;
    prof.n = n;
    prof.p = p;
    prof.r_start = r0;
    prof.regular_start = false;
    prof.taylor_order = 0;
    prof.u0 = y0[0];
    RadialState y = y0;
    y[6] = 0;
    fill(prof, y, r_max, opt);
    return prof;
}

RadialState radial_state_at(const RadialProfile& prof, long double R, long double tol)
{
    if (prof.r.empty())
        throw Error(ErrorKind::data, "empty radial profile");
    long double slack = 1e-12L * std::max(1.0L, prof.r.back());
    if (R < prof.r.front() - slack || R > prof.r.back() + slack)
        throw Error(ErrorKind::usage, "R outside the profile grid");
    auto it = std::upper_bound(prof.r.begin(), prof.r.end(), R + slack);
    std::size_t i = static_cast<std::size_t>(it - prof.r.begin()) - 1;
    if (std::fabs(prof.r[i] - R) <= slack)
        return prof.y[i];
    System sys{static_cast<long double>(prof.n), prof.p.to_long_double(), 1e300L};
    return advance(sys, prof.y[i], prof.r[i], R, tol);
}

RadialProfile scale(const RadialProfile& prof, long double lambda)
{
    if (!(lambda > 0))
        throw Error(ErrorKind::usage, "scale factor must be positive");
    long double k = k_of_p(prof.p).to_long_double();
    long double N = static_cast<long double>(prof.n);
    RadialProfile s = prof;
    s.r_start /= lambda;
    s.blow_up_radius /= lambda;
    for (auto& r : s.r)
        r /= lambda;
    std::array<long double, 7> f;
    for (int j = 0; j < 6; ++j)
        f[j] = std::pow(lambda, k + j);
    f[6] = std::pow(lambda, 2 * k + 6 - N);
    for (auto& y : s.y)
        for (int j = 0; j < 7; ++j)
            y[j] *= f[j];
    s.u0 *= f[0];
    s.v0 *= f[2];
    s.w0 *= f[4];
    return s;
}

long double singular_amplitude_value(long n, const Rational& p)
{
    Params pr = Params::from_p(n, p);
    if (!pr.supercritical())
        throw Error(ErrorKind::domain, "singular solution needs a supercritical exponent");
    long double k0 = coef::k0(Rational(n), pr.k).to_long_double();
    return std::pow(k0, 1.0L / (p.to_long_double() - 1));
}

RadialState singular_state(long n, const Rational& p, long double r)
{
    long double K = singular_amplitude_value(n, p);
    long double k = k_of_p(p).to_long_double(), N = static_cast<long double>(n);
    // Delta (a r^{-m}) = a m (m + 2 - n) r^{-m-2}
    long double a0 = K, a1 = a0 * k * (k + 2 - N), a2 = a1 * (k + 2) * (k + 4 - N);
    auto term = [&](long double a, long double m) { return std::array<long double, 2>{a * std::pow(r, -m), -m * a * std::pow(r, -m - 1)}; };
    auto u = term(a0, k), v = term(a1, k + 2), w = term(a2, k + 4);
    return {u[0], u[1], v[0], v[1], w[0], w[1], 0};
}

nlohmann::ordered_json SingularAnnulusReport::to_json() const
{
    return {{"r0", static_cast<double>(r0)},
            {"r1", static_cast<double>(r1)},
            {"tol", static_cast<double>(tol)},
            {"amplitude", static_cast<double>(amplitude)},
            {"max_relative_error", static_cast<double>(max_relative_error)},
            {"bound", static_cast<double>(10 * tol)},
            {"preserved", preserved}};
}

SingularAnnulusReport singular_annulus_check(long n, const Rational& p, long double r0, long double r1, long double tol)
{
    SingularAnnulusReport rep;
    rep.r0 = r0;
    rep.r1 = r1;
    rep.tol = tol;
    rep.amplitude = singular_amplitude_value(n, p);
    RadialOptions opt;
    opt.tol = tol;
    opt.output_step = (r1 - r0) / 100;
    opt.measure_defect = false;
    RadialProfile prof = radial_solve_from(n, p, r0, singular_state(n, p, r0), r1, opt);
    if (prof.blow_up)
        return rep;
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        RadialState e = singular_state(n, p, prof.r[i]);
        for (int c = 0; c < 6; ++c)
            rep.max_relative_error = std::max(rep.max_relative_error, std::fabs(prof.y[i][c] - e[c]) / std::fabs(e[c]));
    }
    rep.preserved = rep.max_relative_error <= 10 * tol;
    return rep;
}

nlohmann::ordered_json RefinementReport::to_json() const
{
    return {{"tol", static_cast<double>(tol)},
            {"max_difference", static_cast<double>(max_difference)},
            {"bound", static_cast<double>(bound)},
            {"consistent", consistent}};
}

RefinementReport radial_refinement_check(long n, const Rational& p, long double u0, long double v0, long double w0,
                                         long double r_max, long double tol)
{
    RefinementReport rep;
    rep.tol = tol;
    rep.bound = 10 * tol;
    RadialOptions a, b;
    a.tol = tol;
    b.tol = tol / 2;
    a.measure_defect = b.measure_defect = false;
    RadialProfile x = radial_ivp_solve(n, p, u0, v0, w0, r_max, a);
    RadialProfile y = radial_ivp_solve(n, p, u0, v0, w0, r_max, b);
    if (x.blow_up || y.blow_up) {
        rep.max_difference = std::numeric_limits<long double>::infinity();
        return rep;
    }
    const RadialState& s = x.y.back();
    const RadialState& t = y.y.back();
    for (int c = 0; c < 6; ++c)
        rep.max_difference = std::max(rep.max_difference, std::fabs(s[c] - t[c]) / std::max(1.0L, std::fabs(t[c])));
    rep.consistent = rep.max_difference <= rep.bound;
    return rep;
}

long double pohozaev_B3(long n, long double p, long double R, const RadialState& s)
{
    long double N = static_cast<long double>(n);
    auto [u, up, v, vp, w, wp, I] = s;
    (void)I;
    return (3 - N / 2) * u * wp - (N / 2 + 1) * up * w + (1 - N / 2) * v * vp - R * up * wp - 0.5L * R * vp * vp +
           R * v * w - R * std::pow(std::fabs(u), p + 1) / (p + 1);
}

long double pohozaev_B3_printed(long n, long double p, long double R, const RadialState& s)
{
    long double N = static_cast<long double>(n);
    auto [u, up, v, vp, w, wp, I] = s;
    (void)I;
    long double upp = v - (N - 1) / R * up;
    long double minus = R / (p + 1) * std::pow(std::fabs(u), p + 1) - 2 * w * up + 2 * u * wp - R / 2 * vp * vp -
                        (N - 2) / 2 * u * wp + (N - 2) / 2 * v * vp + R * up * wp - w * (up + R * upp) + R * vp * vp;
    return -minus;
}

nlohmann::ordered_json PohozaevReport::to_json() const
{
    return {{"R", static_cast<double>(R)},
            {"lhs", static_cast<double>(lhs)},
            {"rhs", static_cast<double>(rhs)},
            {"residual", static_cast<double>(residual)},
            {"relative_residual", static_cast<double>(relative)},
            {"inner_boundary_correction", static_cast<double>(inner_correction)},
            {"printed_form_relative_residual", static_cast<double>(printed_relative)}};
}

PohozaevReport pohozaev_residual(const RadialProfile& prof, long double R)
{
    if (prof.r.empty())
        throw Error(ErrorKind::data, "empty radial profile");
    if (!(R > prof.r.front()) || R > prof.r.back() * (1 + 1e-12L))
        throw Error(ErrorKind::usage, "R outside the profile grid");
    long double N = static_cast<long double>(prof.n), P = prof.p.to_long_double();
    long double tol = prof.tol > 0 ? prof.tol : 1e-10L;
    RadialState s = radial_state_at(prof, R, tol);
    const RadialState& s0 = prof.y.front();
    long double r0 = prof.r.front();
    long double c = (N - 6) / 2 - N / (P + 1);
    long double area = sphere_area(prof.n);

    PohozaevReport rep;
    rep.R = R;
    rep.inner_correction = prof.regular_start ? 0.0L : area * std::pow(r0, N - 1) * pohozaev_B3(prof.n, P, r0, s0);
    rep.lhs = area * c * s[6];
    rep.rhs = area * std::pow(R, N - 1) * pohozaev_B3(prof.n, P, R, s) - rep.inner_correction;
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    long double den = std::max({std::fabs(rep.lhs), std::fabs(rep.rhs), std::numeric_limits<long double>::min()});
    rep.relative = rep.residual / den;
    long double inner_printed = prof.regular_start ? 0.0L : area * std::pow(r0, N - 1) * pohozaev_B3_printed(prof.n, P, r0, s0);
    long double rhs_printed = area * std::pow(R, N - 1) * pohozaev_B3_printed(prof.n, P, R, s) - inner_printed;
    rep.printed_relative = std::fabs(rep.lhs - rhs_printed) /
                           std::max({std::fabs(rep.lhs), std::fabs(rhs_printed), std::numeric_limits<long double>::min()});
    return rep;
}

nlohmann::ordered_json RadialProfile::to_json() const
{
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "radial-profile";
    j["n"] = n;
    j["p"] = p.str();
    j["u0"] = static_cast<double>(u0);
    j["v0"] = static_cast<double>(v0);
    j["w0"] = static_cast<double>(w0);
    j["r_start"] = static_cast<double>(r_start);
    j["regular_start"] = regular_start;
    j["taylor_order"] = taylor_order;
    j["tol"] = static_cast<double>(tol);
    j["blow_up"] = blow_up;
    if (blow_up)
        j["blow_up_radius"] = static_cast<double>(blow_up_radius);
    j["ode_defect"] = static_cast<double>(ode_defect);
    j["columns"] = {"r", "u", "du", "v", "dv", "w", "dw", "I"};
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        row.push_back(static_cast<double>(r[i]));
        for (auto x : y[i])
            row.push_back(static_cast<double>(x));
        rows.push_back(std::move(row));
    }
    return j;
}

RadialProfile RadialProfile::from_json(const nlohmann::ordered_json& j)
{
    try {
        if (j.at("kind") != "radial-profile")
            throw Error(ErrorKind::data, "not a radial profile file");
        RadialProfile prof;
        prof.n = j.at("n").get<long>();
        prof.p = Rational::parse(j.at("p").get<std::string>());
        prof.u0 = j.value("u0", 0.0);
        prof.v0 = j.value("v0", 0.0);
        prof.w0 = j.value("w0", 0.0);
        prof.r_start = j.at("r_start").get<double>();
        prof.regular_start = j.value("regular_start", true);
        prof.taylor_order = j.value("taylor_order", 4);
        prof.tol = j.value("tol", 1e-10);
        prof.blow_up = j.value("blow_up", false);
        prof.blow_up_radius = j.value("blow_up_radius", 0.0);
        prof.ode_defect = j.value("ode_defect", 0.0);
        for (const auto& row : j.at("rows")) {
            if (row.size() != 8)
                throw Error(ErrorKind::data, "radial profile rows need 8 columns");
            prof.r.push_back(row[0].get<double>());
            RadialState s;
            for (int c = 0; c < 7; ++c)
                s[c] = row[c + 1].get<double>();
            prof.y.push_back(s);
        }
        for (std::size_t i = 1; i < prof.r.size(); ++i)
            if (!(prof.r[i] > prof.r[i - 1]))
                throw Error(ErrorKind::data, "radial profile grid must be strictly increasing");
        return prof;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::data, std::string("malformed radial profile: ") + e.what());
    }
}

}  // namespace tle
