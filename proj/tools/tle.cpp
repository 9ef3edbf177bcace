#include "tle/certifier.hpp"
#include "tle/coefficients.hpp"
#include "tle/energy.hpp"
#include "tle/error.hpp"
#include "tle/exponents.hpp"
#include "tle/profiles.hpp"
#include "tle/radial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tle;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0, exit_fail = 1, exit_inconclusive = 2, exit_usage = 64, exit_data = 65, exit_io = 74;

int exit_code(Status s)
{
    switch (s) {
    case Status::verified:
        return exit_ok;
    case Status::falsified:
        return exit_fail;
    case Status::inconclusive:
        return exit_inconclusive;
    }
    return exit_fail;
}

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::usage:
    case ErrorKind::domain:
        return exit_usage;
    case ErrorKind::data:
    case ErrorKind::degenerate:
        return exit_data;
    case ErrorKind::io:
        return exit_io;
    case ErrorKind::inconclusive:
        return exit_inconclusive;
    }
    return exit_fail;
}

struct Output {
    std::string format = "json";
    std::string path;
};

void emit(const Output& out, const std::string& text)
{
    if (out.path.empty() || out.path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream f(out.path);
    if (!f)
        throw Error(ErrorKind::io, "cannot open '" + out.path + "' for writing");
    f << text;
    if (!text.empty() && text.back() != '\n')
        f << '\n';
    if (!f)
        throw Error(ErrorKind::io, "write to '" + out.path + "' failed");
}

std::string quote(const std::string& s)
{
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::string pretty_table(const std::string& csv)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    std::vector<std::size_t> width;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        bool quoted = false;
        for (char c : line) {
            if (c == '"')
                quoted = !quoted;
            else if (c == ',' && !quoted) {
                cells.push_back(cell);
                cell.clear();
            } else
                cell += c;
        }
        cells.push_back(cell);
        if (width.size() < cells.size())
            width.resize(cells.size(), 0);
        for (std::size_t i = 0; i < cells.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
        rows.push_back(std::move(cells));
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << std::left << std::setw(static_cast<int>(width[i]) + 2) << r[i];
        os << '\n';
    }
    return os.str();
}

std::string pretty_pairs(const json& j, const std::string& indent = "")
{
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            os << indent << it.key() << ":\n" << pretty_pairs(*it, indent + "  ");
        } else if (it->is_array() && !it->empty() && it->front().is_object()) {
            os << indent << it.key() << ": [" << it->size() << " entries]\n";
        } else {
            os << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        }
    }
    return os.str();
}

std::pair<long, long> parse_range(const std::string& s)
{
    auto c = s.find(':');
    try {
        if (c == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long a = std::stol(s.substr(0, c)), b = std::stol(s.substr(c + 1));
        if (a > b)
            throw Error(ErrorKind::usage, "empty range '" + s + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::usage, "bad range '" + s + "'");
    }
}

std::vector<long double> parse_lambda_range(const std::string& s)
{
    std::vector<std::string> parts;
    std::string cell;
    std::istringstream in(s);
    while (std::getline(in, cell, ':'))
        parts.push_back(cell);
    if (parts.size() != 3)
        throw Error(ErrorKind::usage, "lambda range must be a:b:steps");
    long double a, b;
    long steps;
    try {
        a = std::stold(parts[0]);
        b = std::stold(parts[1]);
        steps = std::stol(parts[2]);
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::usage, "bad lambda range '" + s + "'");
    }
    if (!(a > 0) || !(b >= a) || steps < 1 || (steps == 1 && b != a))
        throw Error(ErrorKind::usage, "lambda range needs 0 < a <= b and steps >= 1");
    std::vector<long double> v;
    for (long i = 0; i < steps; ++i)
        v.push_back(steps == 1 ? a : a + (b - a) * i / (steps - 1));
    return v;
}

Params params_from(long n, const std::string& p, const std::string& k)
{
    if (p.empty() == k.empty())
        throw Error(ErrorKind::usage, "give exactly one of --p and --k");
    return p.empty() ? Params::from_k(n, Rational::parse(k)) : Params::from_p(n, Rational::parse(p));
}

void warn_outside_range(const Params& pr)
{
    if (!pr.supercritical())
        std::cerr << "warning: p = " << pr.p.str() << " is not supercritical for n = " << pr.n
                  << "; the monotonicity results assume p_S(n) < p\n";
}

std::string fmt(long double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << static_cast<double>(x);
    return os.str();
}

void add_format_option(CLI::App* app, Output& out)
{
    app->add_option("--format", out.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app->add_option("--out", out.path, "output file (default stdout)");
}

int cmd_exponents(const std::string& n, const std::string& range, const std::string& width, const Output& out)
{
    if (n.empty() == range.empty())
        throw Error(ErrorKind::usage, "give exactly one of --n and --n-range");
    auto [lo, hi] = parse_range(n.empty() ? range : n);
    if (lo < 7)
        throw Error(ErrorKind::usage, "dimension must be at least 7");
    Rational w = width.empty() ? default_exponent_width() : Rational::parse(width);
    std::vector<ExponentChainReport> rows;
    Status worst_seen = Status::verified;
    for (long i = lo; i <= hi; ++i) {
        rows.push_back(exponent_chain_report(i, w));
        worst_seen = worst(worst_seen, worst_status(rows.back().ordering));
    }
    if (out.format == "json") {
        json j;
        j["schema_version"] = 1;
        j["kind"] = "exponent-table";
        j["rows"] = json::array();
        for (const auto& r : rows)
            j["rows"].push_back(r.to_json());
        emit(out, j.dump(2));
    } else {
        std::string csv = ExponentChainReport::csv_header() + "\n";
        for (const auto& r : rows)
            csv += r.csv_row() + "\n";
        emit(out, out.format == "csv" ? "# schema_version=1\n" + csv : pretty_table(csv));
    }
    return exit_code(worst_seen);
}

int cmd_coeffs(long n, const std::string& p, const std::string& k, const Output& out)
{
    Params pr = params_from(n, p, k);
    CoefficientSet cs = coefficient_set(pr);
    json j;
    j["schema_version"] = 1;
    j["kind"] = "coefficient-set";
    j["coefficients"] = cs.to_json();
    j["delta_consistency"] = delta_consistency_report(pr);
    j["singular_stability"] = to_string(singular_stability(pr));
    if (out.format == "json") {
        emit(out, j.dump(2));
    } else if (out.format == "csv") {
        std::string csv = "# schema_version=1\nname,value\n";
        for (auto it = j["coefficients"].begin(); it != j["coefficients"].end(); ++it)
            if (!it->is_structured())
                csv += it.key() + "," + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
        csv += "singular_stability," + j["singular_stability"].get<std::string>() + "\n";
        emit(out, csv);
    } else {
        emit(out, pretty_pairs(j));
    }
    return exit_ok;
}

int cmd_certify(CertifyConfig cfg, const std::string& lemma, const Output& out)
{
    if (!lemma.empty())
        cfg.only = resolve_claim_id(lemma);
    auto certs = run_all(cfg);
    json bundle = certificate_bundle(certs, cfg);
    if (out.format == "json") {
        emit(out, bundle.dump(2));
    } else {
        std::string csv = "claim_id,status,precision_bits,anchor\n";
        for (const auto& c : certs)
            csv += c.claim_id + "," + to_string(c.status) + "," + std::to_string(c.precision_bits) + "," + quote(c.anchor) + "\n";
        emit(out, out.format == "csv" ? "# schema_version=1\n" + csv : pretty_table(csv));
    }
    return exit_code(worst_status(certs));
}

struct MonotonicityArgs {
    long n = 12;
    std::string p, k, profile = "gaussian", lambda_range = "0.5:2.4:5", variant = "eq_2_3", alpha = "1/2";
    unsigned lmode = 0;
    long double sigma = 1, rate = 1.5L, exponent = 0, support = 3, amplitude = 1;
    std::vector<double> coeffs{1.0, 0.3};
    double tol = 1e-6, nonneg_tol = 1e-10;
    int levels = 60;
};

HarmonicTestFunction make_profile(const MonotonicityArgs& a, const Params& pr)
{
    switch (profile_kind_from_string(a.profile)) {
    case ProfileKind::gaussian:
        return HarmonicTestFunction::gaussian(a.n, a.lmode, a.sigma, a.amplitude);
    case ProfileKind::power:
        if (a.profile == "homogeneous")
            return HarmonicTestFunction::homogeneous(a.n, a.lmode, pr.k.to_long_double());
        return HarmonicTestFunction::power(a.n, a.lmode, a.exponent, a.amplitude);
    case ProfileKind::polynomial_bump:
        return HarmonicTestFunction::polynomial_bump(a.n, a.lmode, {a.coeffs.begin(), a.coeffs.end()}, a.support, 6,
                                                     a.amplitude);
    case ProfileKind::exponential_decay:
        return HarmonicTestFunction::exponential_decay(a.n, a.lmode, a.rate, a.amplitude);
    }
    throw Error(ErrorKind::usage, "unknown profile");
}

int cmd_monotonicity(const MonotonicityArgs& a, const Output& out)
{
    Params pr = params_from(a.n, a.p, a.k);
    warn_outside_range(pr);
    auto lambdas = parse_lambda_range(a.lambda_range);
    std::vector<FormulaVariant> variants;
    if (a.variant == "all")
        variants = FormulaVariant::all();
    else
        variants.push_back(FormulaVariant::parse(a.variant));
    EnergyOptions eo;
    eo.levels = a.levels;
    HarmonicTestFunction u = make_profile(a, pr);
    EnergyModel m(u, pr.p, eo);

    Rational alpha = Rational::parse(a.alpha);
    Certificate split = alpha_split(a.n, alpha);
    if (!split.verified())
        std::cerr << "warning: alpha = " << alpha.str() << " is not certified for n = " << a.n << " ("
                  << to_string(split.status) << ")\n";

    bool fail = false;
    json j;
    j["schema_version"] = 1;
    j["kind"] = "monotonicity-report";
    j["n"] = a.n;
    j["p"] = pr.p.str();
    j["k"] = pr.k.str();
    j["supercritical"] = pr.supercritical();
    j["profile"] = u.to_json();
    j["tolerance"] = a.tol;
    json consistency = m.algebra().consistency_report();
    j["exact_consistency"] = consistency;
    j["runs"] = json::array();
    std::string csv = "# schema_version=1\nvariant,lambda,E,dE_formula,dE_fd,relative_residual,order\n";
    for (const auto& v : variants) {
        json run;
        run["variant"] = v.name();
        run["exactly_consistent"] = m.algebra().consistent(v);
        run["samples"] = json::array();
        long double worst_res = 0;
        for (long double l : lambdas) {
            EnergyReport r = fd_check(m, l, v);
            run["samples"].push_back(r.to_json());
            worst_res = std::max(worst_res, r.relative_residual);
            csv += v.name() + "," + fmt(l) + "," + fmt(r.E) + "," + fmt(r.dE_formula) + "," + fmt(r.dE_fd) + "," +
                   fmt(r.relative_residual) + "," + fmt(r.convergence_order_estimate) + "\n";
        }
        run["max_relative_residual"] = static_cast<double>(worst_res);
        run["within_tolerance"] = worst_res < a.tol;
        if (a.variant != "all" && !(worst_res < a.tol))
            fail = true;
        j["runs"].push_back(run);
    }
    json mod;
    mod["alpha"] = alpha.str();
    mod["alpha_certificate"] = split.to_json();
    if (split.verified() || alpha < Rational(1)) {
        long double al = alpha.to_long_double();
        BoundCheck b = monotonicity_bound_check(m, al, lambdas);
        mod["bound"] = b.to_json();
        long double min_d = std::numeric_limits<long double>::infinity();
        for (long double l : lambdas)
            min_d = std::min(min_d, m.dEc_direct(l, al));
        mod["min_dEc_direct"] = static_cast<double>(min_d);
        mod["nonnegative"] = min_d >= -a.nonneg_tol;
        if (split.verified() && min_d < -a.nonneg_tol)
            fail = true;
    }
    j["modified_energy"] = mod;
    j["status"] = fail ? "residual-exceeded" : "ok";
    if (out.format == "json")
        emit(out, j.dump(2));
    else if (out.format == "csv")
        emit(out, csv);
    else
        emit(out, pretty_table(csv.substr(csv.find('\n') + 1)));
    return fail ? exit_fail : exit_ok;
}

int cmd_radial(long n, const std::string& p, long double u0, long double v0, long double w0, long double rmax,
               const RadialOptions& opt, const Output& out)
{
    Rational pq = Rational::parse(p);
    RadialProfile prof = radial_ivp_solve(n, pq, u0, v0, w0, rmax, opt);
    if (prof.blow_up)
        std::cerr << "warning: solution left the bound " << fmt(opt.blow_up_bound) << " near r = "
                  << fmt(prof.blow_up_radius) << "; the profile is partial\n";
    bool fail = prof.ode_defect > opt.tol;
    if (out.format == "json") {
        emit(out, prof.to_json().dump(1));
    } else {
        std::string csv = "r,u,du,v,dv,w,dw,I\n";
        for (std::size_t i = 0; i < prof.r.size(); ++i) {
            csv += fmt(prof.r[i]);
            for (auto x : prof.y[i])
                csv += "," + fmt(x);
            csv += "\n";
        }
        emit(out, out.format == "csv" ? "# schema_version=1\n" + csv : pretty_table(csv));
    }
    std::cerr << "ode defect " << fmt(prof.ode_defect) << " (tolerance " << fmt(opt.tol) << ")\n";
    return fail ? exit_fail : exit_ok;
}

int cmd_pohozaev(const std::string& file, long double R, double tol, const Output& out)
{
    std::ifstream f(file);
    if (!f)
        throw Error(ErrorKind::io, "cannot read '" + file + "'");
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::data, "'" + file + "' is not valid JSON");
    }
    RadialProfile prof = RadialProfile::from_json(j);
    PohozaevReport r = pohozaev_residual(prof, R);
    bool fail = !(r.relative < tol);
    json rep;
    rep["schema_version"] = 1;
    rep["kind"] = "pohozaev-report";
    rep["profile_file"] = file;
    rep["report"] = r.to_json();
    rep["tolerance"] = tol;
    rep["status"] = fail ? "residual-exceeded" : "ok";
    if (out.format == "json") {
        emit(out, rep.dump(2));
    } else if (out.format == "csv") {
        emit(out, "# schema_version=1\nR,lhs,rhs,residual,relative_residual\n" + fmt(r.R) + "," + fmt(r.lhs) + "," +
                      fmt(r.rhs) + "," + fmt(r.residual) + "," + fmt(r.relative) + "\n");
    } else {
        emit(out, "R = " + fmt(r.R) + "  residual = " + fmt(r.residual) + "  relative = " + fmt(r.relative) +
                      (fail ? "  FAIL\n" : "  ok\n"));
    }
    return fail ? exit_fail : exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified exponents, coefficients and monotonicity checks for the triharmonic Lane-Emden equation"};
    app.require_subcommand(1);
    unsigned cap = 0;
    app.add_option("--precision-cap", cap, "maximum working precision in bits (env TLE_PRECISION_CAP_BITS)")
        ->check(CLI::Range(64u, 1u << 24));

    Output out;

    auto* ex = app.add_subcommand("exponents", "exponent table for one n or a range");
    std::string ex_n, ex_range, ex_width;
    ex->add_option("--n", ex_n, "dimension");
    ex->add_option("--n-range", ex_range, "dimensions a:b");
    ex->add_option("--width", ex_width, "enclosure width target");
    add_format_option(ex, out);

    auto* co = app.add_subcommand("coeffs", "exact coefficients for (n, p) or (n, k)");
    long co_n = 0;
    std::string co_p, co_k;
    co->add_option("--n", co_n, "dimension")->required();
    co->add_option("--p", co_p, "exponent p (rational)");
    co->add_option("--k", co_k, "k = 6/(p-1) (rational)");
    add_format_option(co, out);

    auto* ce = app.add_subcommand("certify", "run the certificate suite");
    CertifyConfig cfg;
    std::string lemma;
    std::vector<std::string> tamper;
    long n_max = 0;
    ce->add_option("--lemma", lemma, "single claim, e.g. 8.3 or lemma-8.3");
    ce->add_option("--n-max", n_max, "upper dimension for the selected claims");
    ce->add_option("--tamper", tamper, "negative-control hooks")->group("");
    add_format_option(ce, out);

    auto* mo = app.add_subcommand("monotonicity", "finite-difference referee for the monotonicity formula");
    MonotonicityArgs ma;
    mo->add_option("--n", ma.n, "dimension")->required();
    mo->add_option("--p", ma.p, "exponent p (rational)");
    mo->add_option("--k", ma.k, "k = 6/(p-1) (rational)");
    mo->add_option("--profile", ma.profile, "gaussian, bump, exponential, power or homogeneous");
    mo->add_option("--lmode", ma.lmode, "spherical harmonic degree");
    mo->add_option("--lambda-range", ma.lambda_range, "a:b:steps");
    mo->add_option("--variant", ma.variant, "formula reading, or 'all'");
    mo->add_option("--alpha", ma.alpha, "split parameter for the modified energy");
    mo->add_option("--sigma", ma.sigma, "gaussian width");
    mo->add_option("--rate", ma.rate, "exponential decay rate");
    mo->add_option("--exponent", ma.exponent, "power profile exponent");
    mo->add_option("--support", ma.support, "bump support radius");
    mo->add_option("--coeffs", ma.coeffs, "bump polynomial coefficients");
    mo->add_option("--amplitude", ma.amplitude, "profile amplitude");
    mo->add_option("--tol", ma.tol, "relative residual tolerance (default 1e-6)");
    mo->add_option("--nonneg-tol", ma.nonneg_tol, "allowed negativity of dE^c (default 1e-10)");
    mo->add_option("--levels", ma.levels, "depth of the geometric quadrature mesh");
    add_format_option(mo, out);

    auto* ra = app.add_subcommand("radial", "solve the radial initial value problem");
    long ra_n = 0;
    std::string ra_p;
    long double u0 = 1, v0 = 0, w0 = 0, rmax = 2;
    RadialOptions ro;
    ra->add_option("--n", ra_n, "dimension")->required();
    ra->add_option("--p", ra_p, "exponent p (rational)")->required();
    ra->add_option("--u0", u0, "u(0)");
    ra->add_option("--v0", v0, "Delta u(0)");
    ra->add_option("--w0", w0, "Delta^2 u(0)");
    ra->add_option("--rmax", rmax, "outer radius");
    ra->add_option("--tol", ro.tol, "solver tolerance (default 1e-10)");
    ra->add_option("--r-eps", ro.r_eps, "Taylor launch radius (default 1e-3)");
    ra->add_option("--step", ro.output_step, "output grid spacing (default 1e-2)");
    add_format_option(ra, out);

    auto* po = app.add_subcommand("pohozaev", "Pohozaev residual of a stored radial profile");
    std::string pfile;
    long double R = 0;
    double ptol = 1e-6;
    po->add_option("--profile-file", pfile, "profile written by 'radial'")->required();
    po->add_option("--R", R, "radius")->required();
    po->add_option("--tol", ptol, "relative residual tolerance (default 1e-6)");
    add_format_option(po, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (cap)
        setenv("TLE_PRECISION_CAP_BITS", std::to_string(cap).c_str(), 1);

    try {
        if (ex->parsed())
            return cmd_exponents(ex_n, ex_range, ex_width, out);
        if (co->parsed())
            return cmd_coeffs(co_n, co_p, co_k, out);
        if (ce->parsed()) {
            if (n_max) {
                cfg.n_max = cfg.lemma_8_3_n_max = cfg.band_n_max = cfg.lemma_8_6_n_max = cfg.lemma_4_1_n_max =
                    cfg.chain_n_max = n_max;
            }
            cfg.tamper.insert(tamper.begin(), tamper.end());
            return cmd_certify(cfg, lemma, out);
        }
        if (mo->parsed())
            return cmd_monotonicity(ma, out);
        if (ra->parsed())
            return cmd_radial(ra_n, ra_p, u0, v0, w0, rmax, ro, out);
        if (po->parsed())
            return cmd_pohozaev(pfile, R, ptol, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}
