#include "tle/exponents.hpp"

#include "tle/error.hpp"
#include "tle/roots.hpp"

#include <cstdio>
#include <sstream>

namespace tle {

namespace {

void require_triharmonic(long n)
{
    if (n <= 6)
        throw Error(ErrorKind::domain, "dimension below triharmonic range: n = " + std::to_string(n));
}

Rational half_gap(long n) { return Rational(n - 8, 2); }

std::string decimal(const Rational& x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15Lg", x.to_long_double());
    return buf;
}

Interval enclose_positive_den(const RadicalExpr& num, const RadicalExpr& den, const Rational& width,
                              const std::string& what)
{
    Interval d = enclose(den, Rational(1, 1024));
    if (!d.positive())
        throw Error(ErrorKind::data, what + ": denominator not certified positive, enclosure " + d.str());
    return enclose(num / den, width);
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::closed_form ? "closed_form" : "root_oracle"; }

const Interval& ExponentValue::enclosure() const
{
    if (!value)
        throw Error(ErrorKind::domain, "exponent is infinite");
    return *value;
}

nlohmann::ordered_json ExponentValue::to_json() const
{
    nlohmann::ordered_json j;
    if (!value) {
        j["kind"] = "infinite";
        j["lo"] = nullptr;
        j["hi"] = nullptr;
    } else {
        j["kind"] = "finite";
        j["lo"] = value->lo().str();
        j["hi"] = value->hi().str();
        j["approx"] = value->mid().to_double();
    }
    j["provenance"] = to_string(provenance);
    return j;
}

Polynomial d1_polynomial()
{
    return Polynomial::from_ints_desc({-108, 1296, -3024, -10368, 103104, 20736, -94976}, "n");
}

Polynomial d2_polynomial()
{
    return Polynomial::from_ints_desc({9, -216, 1800, -4320, -30864, 251136, -690432, -1936384, 6915840, 4818944,
                                       -16644096, -3039232, 6131712},
                                      "n");
}

ExponentValue serrin_exponent(long n)
{
    require_triharmonic(n);
    return ExponentValue::finite(Interval(Rational(n, n - 6)));
}

ExponentValue sobolev_exponent(long n)
{
    require_triharmonic(n);
    return ExponentValue::finite(Interval(Rational(n + 6, n - 6)));
}

RadicalExpr d0_expr(long n)
{
    Rational x(n);
    return -RadicalExpr::cbrt(RadicalExpr(d1_polynomial()(x)) + 36 * RadicalExpr::sqrt(d2_polynomial()(x)));
}

RadicalExpr d0_alt_expr(long n)
{
    Rational x(n);
    return RadicalExpr(256 * (3 * x * x + 4)) /
           RadicalExpr::cbrt(36 * RadicalExpr::sqrt(d2_polynomial()(x)) - RadicalExpr(d1_polynomial()(x)));
}

RadicalExpr d_expr(long n)
{
    Rational x(n);
    RadicalExpr d0 = d0_expr(n);
    RadicalExpr radicand = RadicalExpr(9 * x * x + 96) - RadicalExpr(1536 + 1152 * x * x) / d0 -
                           RadicalExpr(Rational(3, 2)) * d0;
    return RadicalExpr::sqrt(radicand) / 6;
}

Interval d0_enclosure(long n, const Rational& width)
{
    if (n < 12)
        throw Error(ErrorKind::domain, "d0 requires n >= 12, got " + std::to_string(n));
    if (d2_polynomial()(Rational(n)).sign() <= 0)
        throw Error(ErrorKind::domain, "d2(n) not positive at n = " + std::to_string(n));
    Interval main = enclose(d0_expr(n), width);
    Interval alt = enclose(d0_alt_expr(n), width);
    if (!main.intersects(alt))
        throw Error(ErrorKind::data, "d0 closed forms disagree at n = " + std::to_string(n) + ": " + main.str() +
                                         " vs " + alt.str());
    return main;
}

Interval d_enclosure(long n, const Rational& width)
{
    if (n < 15)
        throw Error(ErrorKind::domain, "d(n) requires n >= 15, got " + std::to_string(n));
    return enclose(d_expr(n), width);
}

ExponentValue joseph_lundgren_triharmonic(long n, const Rational& width)
{
    require_triharmonic(n);
    if (n <= 14)
        return ExponentValue::infinite();
    RadicalExpr d = d_expr(n);
    RadicalExpr num = RadicalExpr(n + 4) - 2 * d, den = RadicalExpr(n - 8) - 2 * d;
    return ExponentValue::finite(enclose_positive_den(num, den, width, "p_c"));
}

Polynomial pc_cubic(long n)
{
    Rational x(n);
    Polynomial t = Polynomial::identity("t");
    Rational x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;
    return -t.pow(3) + (8 + Rational(3, 4) * x2) * t * t - (16 + Rational(3, 16) * x4) * t + Rational(3, 16) * x5 -
           Rational(15, 16) * x4 - Rational(3, 2) * x3 + Rational(33, 4) * x2 + 3 * x - 9;
}

Interval pc_admissible_root(long n, const Rational& width)
{
    require_triharmonic(n);
    if (n <= 8)
        throw Error(ErrorKind::domain, "no admissible root at n = " + std::to_string(n));
    Rational top = half_gap(n) * half_gap(n);
    Polynomial c = pc_cubic(n);
    auto roots = isolate_roots(c, Domain::open(0, top), Rational(1, 16));
    if (roots.empty())
        throw Error(ErrorKind::domain, "no admissible root at n = " + std::to_string(n));
    if (roots.size() > 1)
        throw Error(ErrorKind::data, "ambiguous root structure at n = " + std::to_string(n));
    return refine_root(c.squarefree_part(), roots.front(), width);
}

Interval pc_root_oracle(long n, const Rational& width)
{
    Rational tw = width / 1024;
    unsigned bits = 64;
    for (;;) {
        Interval t = pc_admissible_root(n, tw);
        Interval k = Interval(half_gap(n)) - sqrt_out(t, bits);
        if (k.positive()) {
            Interval p = (Interval(1) + Interval(6) / k).round_out(bits);
            if (!(width < p.width()))
                return p;
        }
        if (bits > default_precision_cap())
            throw Error(ErrorKind::inconclusive, "inconclusive precision: p_c root oracle at n = " + std::to_string(n));
        tw = tw / 65536;
        bits += 32;
    }
}

ExponentValue pm(long n, const Rational& width)
{
    require_triharmonic(n);
    if (n <= 30)
        return ExponentValue::infinite();
    Rational x(n);
    RadicalExpr s = RadicalExpr::sqrt(15 * x * x - 60 * x + 190);
    return ExponentValue::finite(enclose_positive_den(RadicalExpr(5 * x + 30) - s, RadicalExpr(5 * x - 30) - s, width,
                                                      "p_m"));
}

ExponentValue pm1(long n)
{
    require_triharmonic(n);
    if (n <= 20)
        return ExponentValue::infinite();
    return ExponentValue::finite(Interval(Rational(n + 28, n - 20)));
}

ExponentValue pc_harmonic(long n, const Rational& width)
{
    if (n < 3)
        throw Error(ErrorKind::domain, "harmonic exponent requires n >= 3");
    if (n <= 10)
        return ExponentValue::infinite();
    Rational x(n);
    RadicalExpr num = RadicalExpr((x - 2) * (x - 2) - 4 * x) + 8 * RadicalExpr::sqrt(x - 1);
    return ExponentValue::finite(enclose(num / RadicalExpr((x - 2) * (x - 10)), width));
}

ExponentValue pc_biharmonic(long n, const Rational& width)
{
    if (n < 5)
        throw Error(ErrorKind::domain, "biharmonic exponent requires n >= 5");
    if (n <= 12)
        return ExponentValue::infinite();
    Rational x(n);
    RadicalExpr s = RadicalExpr::sqrt(RadicalExpr(x * x + 4) - x * RadicalExpr::sqrt(x * x - 8 * x + 32));
    return ExponentValue::finite(
        enclose_positive_den(RadicalExpr(x + 2) - s, RadicalExpr(x - 6) - s, width, "biharmonic p_c"));
}

Certificate certify_exponent_less(const std::string& claim_id, const std::string& statement, const ExponentFn& a,
                                  const ExponentFn& b, const Rational& start_width, unsigned cap_bits)
{
    Certificate c;
    c.claim_id = claim_id;
    c.statement = statement;
    Rational w = start_width;
    unsigned bits = 0;
    for (Rational v = start_width; v < Rational(1); v = v * 2)
        ++bits;
    try {
        for (;;) {
            ExponentValue va = a(w), vb = b(w);
            c.precision_bits = bits;
            if (vb.is_infinite()) {
                c.status = va.is_infinite() ? Status::falsified : Status::verified;
                c.details["convention"] = "finite < infinity";
                c.details["left"] = va.to_json();
                c.details["right"] = vb.to_json();
                return c;
            }
            if (va.is_infinite()) {
                c.status = Status::falsified;
                c.witness = vb.enclosure();
                c.details["left"] = va.to_json();
                c.details["right"] = vb.to_json();
                return c;
            }
            const Interval &x = va.enclosure(), &y = vb.enclosure();
            c.details["left"] = va.to_json();
            c.details["right"] = vb.to_json();
            if (certainly_less(x, y)) {
                c.status = Status::verified;
                return c;
            }
            if (y.hi() <= x.lo()) {
                c.status = Status::falsified;
                c.witness = x;
                return c;
            }
            if (bits + 16 > cap_bits) {
                c.status = Status::inconclusive;
                return c;
            }
            w = w / 65536;
            bits += 16;
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::inconclusive)
            throw;
        c.status = Status::inconclusive;
        c.details["reason"] = e.what();
        return c;
    }
}

namespace {

void add_names(nlohmann::ordered_json& j, const ExponentChainReport& r)
{
    j["serrin"] = r.serrin.to_json();
    j["sobolev"] = r.sobolev.to_json();
    j["pc"] = r.pc.to_json();
    j["pm"] = r.pm.to_json();
    j["pm1"] = r.pm1.to_json();
    j["pc_harmonic"] = r.pc_harmonic.to_json();
    j["pc_biharmonic"] = r.pc_biharmonic.to_json();
}

std::string csv_cell(const ExponentValue& v)
{
    return v.is_infinite() ? "inf" : decimal(v.enclosure().mid());
}

}  // namespace

nlohmann::ordered_json ExponentChainReport::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    add_names(e, *this);
    j["exponents"] = e;
    j["certificates"] = nlohmann::ordered_json::array();
    for (const auto& c : ordering)
        j["certificates"].push_back(c.to_json());
    return j;
}

std::string ExponentChainReport::csv_header()
{
    return "n,serrin,sobolev,pc,pm,pm1,pc_harmonic,pc_biharmonic,ordering";
}

std::string ExponentChainReport::csv_row() const
{
    std::ostringstream os;
    os << n << ',' << csv_cell(serrin) << ',' << csv_cell(sobolev) << ',' << csv_cell(pc) << ',' << csv_cell(pm)
       << ',' << csv_cell(pm1) << ',' << csv_cell(pc_harmonic) << ',' << csv_cell(pc_biharmonic) << ','
       << to_string(worst_status(ordering));
    return os.str();
}

ExponentChainReport exponent_chain_report(long n, const Rational& width)
{
    require_triharmonic(n);
    ExponentChainReport r;
    r.n = n;
    r.serrin = serrin_exponent(n);
    r.sobolev = sobolev_exponent(n);
    r.pc = joseph_lundgren_triharmonic(n, width);
    r.pm = pm(n, width);
    r.pm1 = pm1(n);
    r.pc_harmonic = pc_harmonic(n, width);
    r.pc_biharmonic = pc_biharmonic(n, width);

    auto fixed = [](ExponentValue v) { return [v](const Rational&) { return v; }; };
    auto pc_fn = [n](const Rational& w) { return joseph_lundgren_triharmonic(n, w); };
    auto pm_fn = [n](const Rational& w) { return pm(n, w); };

    Certificate c = certify_exponent_less("sobolev<pc", "p_S(n) < p_c(n)", fixed(r.sobolev), pc_fn, width);
    c.anchor = "Eq. (1.5)";
    r.ordering.push_back(c);
    if (n >= 15) {
        c = certify_exponent_less("pc<pm", "p_c(n) < p_m(n)", pc_fn, pm_fn, width);
        c.anchor = "Theorem 2.2";
        r.ordering.push_back(c);
    }
    if (n >= 21) {
        c = certify_exponent_less("pm1<pm", "p_m1(n) < p_m(n)", fixed(r.pm1), pm_fn, width);
        c.anchor = "Remark 2.3";
        r.ordering.push_back(c);
    }
    for (auto& cert : r.ordering)
        cert.details["n"] = n;
    return r;
}

}  // namespace tle
