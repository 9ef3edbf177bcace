#include "tle/certifier.hpp"

#include "tle/coefficients.hpp"
#include "tle/error.hpp"
#include "tle/exponents.hpp"
#include "tle/radical.hpp"

#include <algorithm>
#include <cmath>

namespace tle {

namespace {

using json = nlohmann::ordered_json;

Polynomial N() { return Polynomial::identity("n"); }
Polynomial K() { return Polynomial::identity("k"); }

Certificate make(const std::string& id, const std::string& statement, const std::string& anchor)
{
    Certificate c;
    c.claim_id = id;
    c.statement = statement;
    c.anchor = anchor;
    c.details["checks"] = json::array();
    return c;
}

json brief(const Certificate& c)
{
    json j;
    j["claim_id"] = c.claim_id;
    j["status"] = to_string(c.status);
    if (c.witness) {
        if (const auto* r = std::get_if<Rational>(&*c.witness))
            j["witness"] = r->str();
        else
            j["witness"] = std::get<Interval>(*c.witness).str();
    }
    return j;
}

// Folds a sub-check into the parent; the first failing sub-check supplies the witness.
void absorb(Certificate& parent, const Certificate& child, bool full = false)
{
    if (child.status != Status::verified && parent.status == Status::verified && child.witness)
        parent.witness = child.witness;
    parent.status = worst(parent.status, child.status);
    parent.precision_bits = std::max(parent.precision_bits, child.precision_bits);
    parent.details["checks"].push_back(full ? child.to_json() : brief(child));
}

Certificate sign_check(const std::string& id, const Polynomial& p, const Domain& d, SignClaim claim)
{
    return certify_sign(p, d, claim, id, p.str() + " " + to_string(claim) + " on " + d.str());
}

Rational decimal(const char* s) { return Rational::parse(s); }

std::string approx(const Rational& x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", x.to_long_double());
    return buf;
}

json interval_json(const Interval& x)
{
    return {{"lo", x.lo().str()}, {"hi", x.hi().str()}, {"approx", approx(x.mid())}};
}

// Records a printed display that fails exactly, together with the candidate corrections tried.
json misprint(const std::string& display, const Certificate& printed,
              const std::vector<std::pair<std::string, Certificate>>& candidates)
{
    json j;
    j["display"] = display;
    j["printed"] = brief(printed);
    json tried = json::array();
    std::string adopted;
    for (const auto& [name, cert] : candidates) {
        tried.push_back({{"correction", name}, {"status", to_string(cert.status)}});
        if (adopted.empty() && cert.verified())
            adopted = name;
    }
    j["candidates"] = tried;
    j["adopted"] = adopted.empty() ? json(nullptr) : json(adopted);
    return j;
}

void add_misprint(Certificate& c, json m)
{
    if (!c.details.contains("misprints"))
        c.details["misprints"] = json::array();
    c.details["misprints"].push_back(std::move(m));
}

Rational upper(const RadicalExpr& e) { return enclose(e, Rational(1, 1 << 30)).hi(); }

Rational sqrt_hi(long n) { return sqrt_out(Interval(Rational(n)), 40).hi(); }

Rational top(long n) { return Rational(n - 6, 2); }

}  // namespace

Certificate certify_identity(const std::string& claim_id, const std::string& statement, const Polynomial& lhs,
                             const Polynomial& rhs)
{
    Certificate c;
    c.claim_id = claim_id;
    c.statement = statement;
    Polynomial diff = lhs - rhs;
    c.details["lhs_degree"] = lhs.degree();
    c.details["rhs_degree"] = rhs.degree();
    if (diff.is_zero()) {
        c.status = Status::verified;
        return c;
    }
    c.status = Status::falsified;
    for (long x = 0;; ++x) {
        Rational v = diff(Rational(x));
        if (!v.is_zero()) {
            c.witness = Rational(x);
            c.details["difference_at_witness"] = v.str();
            break;
        }
    }
    return c;
}

Certificate verify_A2_factorization(const A2Options& opt)
{
    Certificate c = make("a2-factorization",
                         "A2 expanded equals 3(k+1)(k+3)(k-(n-5))(k-(n-3)) for n in " + std::to_string(opt.n_lo) + ".." +
                             std::to_string(opt.n_hi),
                         "Eq. (7.3)");
    long checked = 0;
    for (long n = opt.n_lo; n <= opt.n_hi; ++n) {
        Rational x(n);
        Polynomial k = K(), k2 = k * k;
        Polynomial expanded = 3 * k2 * k2 + (opt.k3_constant - 6 * x) * k2 * k + (3 * x * x - 48 * x + 150) * k2 +
                              (12 * x * x - 114 * x + 252) * k + (9 * x * x - 72 * x + 135);
        Polynomial factored = coef::A2_factored(x, k);
        Polynomial derived = A2_in_k(n);
        for (const auto& [name, lhs] : {std::pair<std::string, Polynomial>{"expanded", expanded},
                                        std::pair<std::string, Polynomial>{"from-deltas", derived}}) {
            Certificate id = certify_identity("a2-" + name + "-n" + std::to_string(n), name + " vs factored", lhs,
                                              factored);
            if (!id.verified()) {
                c.status = Status::falsified;
                c.witness = id.witness;
                c.details["failed_n"] = n;
                c.details["failed_form"] = name;
                c.details["witness_k"] = std::get<Rational>(*id.witness).str();
                c.details["checks"].push_back(brief(id));
                return c;
            }
        }
        ++checked;
    }
    c.status = Status::verified;
    c.details["n_checked"] = checked;
    Rational at0 = coef::A2_factored(Rational(21), Rational(0));
    c.details["A2(n=21,k=0)"] = at0.str();
    if (at0 != Rational(2592))
        c.status = Status::falsified;
    return c;
}

Certificate verify_d0_identity()
{
    Certificate c = make("d0-identity", "d1^2 - 36^2 d2 = 256^3 (3n^2+4)^3", "Eq. (8.6)");
    Polynomial d1 = d1_polynomial(), d2 = d2_polynomial(), n = N();
    Polynomial q = 3 * n * n + 4;
    Polynomial rhs = Rational(256 * 256 * 256) * q.pow(3);
    Certificate printed = certify_identity("d0-identity-printed", "d1^2 - 36^2 d2^2 = 256^3 (3n^2+4)^3",
                                           d1 * d1 - 1296 * d2 * d2, rhs);
    printed.details["degree_argument"] = "lhs degree " + std::to_string((d1 * d1 - 1296 * d2 * d2).degree()) +
                                         " vs rhs degree " + std::to_string(rhs.degree());
    Certificate fixed =
        certify_identity("d0-identity-corrected", "d1^2 - 36^2 d2 = 256^3 (3n^2+4)^3", d1 * d1 - 1296 * d2, rhs);
    Certificate other =
        certify_identity("d0-identity-36", "d1^2 - 36 d2^2 = 256^3 (3n^2+4)^3", d1 * d1 - 36 * d2 * d2, rhs);
    c.details["readings"] = {{"printed_d2_squared", printed.to_json()}, {"d2_unsquared", fixed.to_json()}};
    if (!printed.verified())
        add_misprint(c, misprint("d1^2 - 36^2 d2^2(n) = 256^3 (3n^2+4)^3", printed,
                                 {{"exponent slip: d2^2 -> d2", fixed}, {"constant slip: 36^2 -> 36", other}}));
    absorb(c, fixed);
    for (long m : {15L, 20L, 50L}) {
        Certificate x = make("d0-forms-n" + std::to_string(m), "cube-root and rationalized forms of d0 intersect", "");
        try {
            Interval a = enclose(d0_expr(m), Rational(1, 1000000)), b = enclose(d0_alt_expr(m), Rational(1, 1000000));
            x.status = a.intersects(b) ? Status::verified : Status::falsified;
            x.details["forms"] = {interval_json(a), interval_json(b)};
            if (!a.intersects(b))
                x.witness = a;
        } catch (const Error& e) {
            x.status = Status::inconclusive;
            x.details["reason"] = e.what();
        }
        absorb(c, x);
    }
    return c;
}

Certificate verify_lemma_8_1()
{
    Certificate c = make("lemma-8.1", "d0 is decreasing and 128 < d0(n) < 187 for n >= 15", "Lemma 8.1");
    Polynomial n = N(), d1 = d1_polynomial(), d2 = d2_polynomial();
    Polynomial md1 = -d1.derivative(), dd2 = d2.derivative();

    absorb(c, certify_identity("minus-d1-prime", "-d1' display", md1,
                               Polynomial::from_ints_desc({648, -6480, 12096, 31104, -206208, -20736}, "n")));
    absorb(c, sign_check("minus-d1-prime-positive", md1, Domain::ray(8), SignClaim::positive));

    Polynomial g = md1 * md1 * d2 - 324 * dd2 * dd2;
    Polynomial expanded = Polynomial::from_ints_desc(
        {-293534171136LL, 4109478395904LL, -9001714581504LL, -168292924784640LL, 1233104438034432LL,
         -3119550711201792LL, -6748415824232448LL, 21348066225291264LL, -1783991975804928LL, 9835612546793472LL,
         34945090870837248LL, -114643053771227136LL, 19014404334944256LL, -110880250103070720LL,
         -14427791579676672LL, -356241767399424LL},
        "n");
    Polynomial f3 = Polynomial::from_ints_desc({3, -18, 84, 8}, "n");
    Polynomial f4 = Polynomial::from_ints_desc({1, -8, -40, 480, 16}, "n");
    Polynomial factored = Rational(-10871635968LL) * f3 * f4 * (n - 2).pow(2) * (n + 2).pow(2) * (3 * n * n + 4).pow(2);
    absorb(c, certify_identity("derivative-expansion", "(-d1')^2 d2 - 18^2 (d2')^2 expanded display", g, expanded));
    absorb(c, certify_identity("derivative-factorization", "(-d1')^2 d2 - 18^2 (d2')^2 factored display", g, factored));
    absorb(c, sign_check("derivative-negative", g, Domain::ray(3), SignClaim::negative));
    absorb(c, sign_check("cubic-factor-positive", f3, Domain::ray(15), SignClaim::positive));
    absorb(c, sign_check("quartic-factor-positive", f4, Domain::ray(15), SignClaim::positive));
    absorb(c, sign_check("d2-prime-positive", dd2, Domain::ray(15), SignClaim::positive));

    Polynomial d2f = Polynomial::from_ints_desc({9, -216, 1872, -6048, -16032, 206208, -848640, -189952, 383232}, "n") *
                     (n - 2).pow(2) * (n + 2).pow(2);
    absorb(c, certify_identity("d2-factorization", "d2 factored display", d2, d2f));
    absorb(c, sign_check("d2-positive", d2, Domain::ray(12), SignClaim::positive));

    // d0 > 128 iff -d1 - 128^3 > 36 sqrt(d2), i.e. both sides positive and squared comparison.
    Polynomial gap = -d1 - Rational(128 * 128 * 128);
    absorb(c, sign_check("d0-above-128-linear", gap, Domain::ray(15), SignClaim::positive));
    absorb(c, sign_check("d0-above-128-squared", gap * gap - 1296 * d2, Domain::ray(15), SignClaim::positive));

    Certificate at15 = make("d0-15-below-187", "d0(15) < 187", "");
    Interval d15 = d0_enclosure(15, Rational(1, 1000000));
    at15.status = d15.hi() < Rational(187) ? Status::verified : Status::falsified;
    at15.details["d0(15)"] = interval_json(d15);
    absorb(c, at15, true);

    Certificate lim = make("d0-large-n", "d0(10^6) in (128, 128.01)", "");
    Interval big = d0_enclosure(1000000, Rational(1, 1000000));
    lim.status = Rational(128) < big.lo() && big.hi() < decimal("128.01") ? Status::verified : Status::falsified;
    lim.details["d0(1e6)"] = interval_json(big);
    absorb(c, lim, true);
    return c;
}

Certificate verify_lemma_8_3(long n_max, long sample_max)
{
    Certificate c = make("lemma-8.3", "d(n) < sqrt(n) for n >= 15", "Lemma 8.3");
    Polynomial n = N(), d1 = d1_polynomial(), d2 = d2_polynomial();
    Polynomial q3 = (3 * n * n + 4).pow(3);

    Polynomial s = 6 * n * n - 9 * n + 32;
    Polynomial p810 = -d1 * s.pow(3) - (768 * n * n + 1024).pow(3);
    absorb(c, certify_identity("eq-8.10-expansion", "-d1 s^3 - (768n^2+1024)^3 display", p810,
                               Polynomial::from_ints_desc({23328, -384912, 2443608, -8266860, -276048, 76177584,
                                                           -915397632, 1095581376, -4004833536LL, 1592960256,
                                                           -2731991040LL, -3305373696LL, 2038431744},
                                                          "n")));
    absorb(c, sign_check("eq-8.10-positive", p810, Domain::ray(10), SignClaim::positive));

    Polynomial lhs811 = p810 * p810 - 1296 * d2 * s.pow(6);
    Polynomial mid811 = Polynomial::from_ints_desc(
        {116640, -606528, 1195560, 16771860, -104564844, 682366923, -1464330096, 5142941100LL, -6506609472LL,
         15562840464LL, -11332244736LL, 21360207936LL, -5590593536LL, 10574331904LL, 4294279168LL, -2878341120LL,
         3791650816LL, -3221225472LL},
        "n");
    Polynomial f811 = Polynomial::from_ints_desc({4320, -22464, 27000, 711036, -4003812, 22548513, -38373440, 96546304,
                                                  -66202112, 68272128, 59244544, -50331648},
                                                 "n");
    Rational k811(1358954496LL);
    absorb(c, certify_identity("eq-8.11-expansion", "middle display", lhs811, k811 * mid811));
    absorb(c, certify_identity("eq-8.11-factorization", "factored display", lhs811, k811 * f811 * q3));
    absorb(c, sign_check("eq-8.11-factor-positive", f811, Domain::ray(1), SignClaim::positive));

    absorb(c, certify_identity("x1-rationalization", "(3n^2+32)^2 - 9n^2(n^2-64) = 768n^2 + 1024",
                               (3 * n * n + 32).pow(2) - 9 * n * n * (n * n - 64), 768 * n * n + 1024));
    absorb(c, sign_check("x1-bound", n * n - 64 - (n - 3).pow(2), Domain::ray(15), SignClaim::positive));
    {
        Certificate x2 = make("x2-at-15", "x2(15) >= 1276", "");
        Interval v = enclose(RadicalExpr(707) + 45 * RadicalExpr::sqrt(161), Rational(1, 1000000));
        x2.status = Rational(1276) <= v.lo() ? Status::verified : Status::falsified;
        x2.details["x2(15)"] = interval_json(v);
        absorb(c, x2, true);
    }

    Polynomial r = 3 * n * n - 12 * n - 32;
    Polynomial p813 = -d1 * r.pow(3) - (384 * n * n + 512).pow(3);
    absorb(c, certify_identity("eq-8.13-expansion", "-d1 r^3 - (384n^2+512)^3 display", p813,
                               Polynomial::from_ints_desc({2916, -69984, 548208, -699840, -12052800, 54991872, -7831296,
                                                           -691006464, -299151360, 4048994304LL, 3403284480LL,
                                                           -2821718016LL, -3246391296LL},
                                                          "n")));
    absorb(c, sign_check("eq-8.13-positive", p813, Domain::ray(11), SignClaim::positive));

    Polynomial lhs814 = p813 * p813 - 1296 * d2 * r.pow(6);
    Polynomial mid814 = Polynomial::from_ints_desc(
        {-729, 14580, -36936, -631152, 3184272, 6849792, -15453504, -49876992, -32256000, -28111872, 268692480,
         613150720, 898416640, 1187315712, 983040000, 616562688, 369098752},
        "n");
    Polynomial f814 = Polynomial::from_ints_desc(
        {27, -540, 1260, 25536, -123120, -352960, 1058048, 3124224, -2383872, -9633792, -5767168}, "n");
    Rational k814(5435817984LL);
    absorb(c, certify_identity("eq-8.14-expansion", "middle display", lhs814, k814 * mid814));
    absorb(c, certify_identity("eq-8.14-factorization", "factored display", lhs814, -k814 * f814 * q3));
    absorb(c, sign_check("eq-8.14-negative", lhs814, Domain::ray(14), SignClaim::negative));

    Polynomial disc = 9 * n.pow(4) - 72 * n.pow(3) - 432 * n * n - 768 * n;
    absorb(c, sign_check("r-discriminant-positive", disc, Domain::ray(13), SignClaim::positive));
    absorb(c, certify_identity("r1-square-bound", "9n^4-72n^3-432n^2+2304n+9216 = (3n^2-12n-96)^2",
                               9 * n.pow(4) - 72 * n.pow(3) - 432 * n * n + 2304 * n + 9216,
                               (3 * n * n - 12 * n - 96).pow(2)));
    absorb(c, sign_check("r10-denominator-positive", r, Domain::ray(9), SignClaim::positive));
    {
        Certificate printed = certify_identity("r10-denominator-factorization", "3n^2-12n-32 = 3(n+4)(n-8)", r,
                                               3 * (n + 4) * (n - 8));
        Certificate alt = certify_identity("r10-denominator-96", "3n^2-12n-96 = 3(n+4)(n-8)",
                                           3 * n * n - 12 * n - 96, 3 * (n + 4) * (n - 8));
        if (!printed.verified())
            add_misprint(c, misprint("3n^2 - 12n - 32 = 3(n+4)(n-8)", printed, {{"constant slip: -32 -> -96", alt}}));
    }

    Certificate direct = make("direct-scan", "d(n)^2 < n by enclosure", "");
    long count = 0;
    auto check_n = [&](long m) {
        Interval d = d_enclosure(m, Rational(1, 1000000000));
        ++count;
        if (!(d.hi() * d.hi() < Rational(m))) {
            direct.status = Status::falsified;
            direct.witness = Rational(m);
            direct.details["failed_n"] = m;
            return false;
        }
        return true;
    };
    direct.status = Status::verified;
    try {
        for (long m = 15; m <= n_max; ++m)
            if (!check_n(m))
                break;
        if (direct.verified() && sample_max > n_max) {
            double lo = std::log(static_cast<double>(std::max(n_max, 15L))), hi = std::log(static_cast<double>(sample_max));
            long last = n_max;
            for (int i = 0; i <= 200; ++i) {
                long m = std::lround(std::exp(lo + (hi - lo) * i / 200.0));
                if (m <= last)
                    continue;
                last = m;
                if (!check_n(m))
                    break;
            }
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::inconclusive)
            throw;
        direct.status = Status::inconclusive;
        direct.details["reason"] = e.what();
    }
    direct.details["n_checked"] = count;
    direct.details["exhaustive_to"] = n_max;
    direct.details["sampled_to"] = sample_max;
    absorb(c, direct, true);
    return c;
}

namespace {

struct Reduction {
    std::string name;
    // (coefficient polynomial in a, its lower bound, power of t)
    std::vector<std::tuple<Polynomial, Rational, int>> terms;
    Domain a_range;
};

Polynomial reduction_poly(const Reduction& r)
{
    Polynomial p;
    for (const auto& [coeff, bound, e] : r.terms)
        p = p + Polynomial::monomial(bound, e, "t");
    return p;
}

Certificate check_reduction(const Reduction& r)
{
    Certificate c = make(r.name + "-coefficient-bounds", "each coefficient in a bounded below on the a-range", "");
    c.status = Status::verified;
    for (const auto& [coeff, bound, e] : r.terms)
        absorb(c, sign_check(r.name + "-t" + std::to_string(e), coeff - bound, r.a_range, SignClaim::nonneg));
    return c;
}

// Positivity of the reduction polynomial beyond a printed threshold, allowing one unit in the
// last printed digit.
Certificate check_threshold(const std::string& name, const Polynomial& p, const char* printed, const char* ulp)
{
    Certificate c = make(name, "reduction positive for t >= " + std::string(printed), "");
    Rational t0 = decimal(printed);
    Certificate exact = sign_check(name + "-printed", p, Domain::ray(t0), SignClaim::positive);
    Certificate rounded = sign_check(name + "-rounded", p, Domain::ray(t0 + decimal(ulp)), SignClaim::positive);
    auto roots = isolate_roots(p, Domain::ray(0), Rational(1, 1000000000));
    c.details["printed_threshold"] = printed;
    c.details["printed_status"] = to_string(exact.status);
    c.details["rounded_threshold"] = (t0 + decimal(ulp)).str();
    c.details["rounded_status"] = to_string(rounded.status);
    if (!roots.empty())
        c.details["largest_root"] = interval_json(roots.back());
    c.status = rounded.status;
    if (!rounded.verified())
        c.witness = rounded.witness;
    return c;
}

}  // namespace

Certificate verify_lemma_8_4_8_5(long n_lo, long n_hi)
{
    Certificate c = make("lemma-8.4-8.5",
                         "c1 > 0 (n >= 36) and c2 > 0 (n >= 12) on the band (n-8)/2 - sqrt(n) < k < (n-8)/2 + sqrt(n)",
                         "Lemmas 8.4, 8.5");
    Polynomial k = K();

    Certificate band = make("band", "per-n Sturm certification on a rational super-interval of the band", "");
    band.status = Status::verified;
    json informational = json::array();
    long counted = 0;
    for (long n = std::max(n_lo, 12L); n <= n_hi; ++n) {
        Rational half = Rational(n - 8, 2), s = sqrt_hi(n);
        Rational lo = max(Rational(0), half - s), hi = min(top(n), half + s);
        Domain d = Domain::closed(lo, hi);
        Certificate c2 = sign_check("c2-band-n" + std::to_string(n), c2_in_k(n), d, SignClaim::positive);
        if (!c2.verified()) {
            band.details["failed_n"] = n;
            absorb(band, c2);
        }
        Certificate c1 = sign_check("c1-band-n" + std::to_string(n), c1_in_k(n), d, SignClaim::positive);
        if (n >= 36) {
            if (!c1.verified()) {
                band.details["failed_n"] = n;
                absorb(band, c1);
            }
        } else if (!c1.verified()) {
            informational.push_back(brief(c1));
        }
        ++counted;
    }
    band.details["n_checked"] = counted;
    band.details["c1_outside_claim_failures"] = informational;
    absorb(c, band, true);

    for (long n = 7; n <= 60; ++n) {
        Rational x(n);
        Polynomial c1_display = 3 * k.pow(5) + (54 - 6 * x) * k.pow(4) + (3 * x * x - 84 * x + 372) * k.pow(3) +
                                (30 * x * x - 408 * x + 1224) * k * k +
                                (Rational(159, 2) * x * x - 810 * x + 1917 - Rational(3, 16) * x.pow(4) +
                                 Rational(3, 2) * x.pow(3)) *
                                    k +
                                (48 * x * x - 480 * x + 1152);
        Certificate id = certify_identity("c1-display-n" + std::to_string(n), "c1 in k display", c1_in_k(n), c1_display);
        if (!id.verified()) {
            absorb(c, id);
            break;
        }
    }
    {
        Certificate printed = make("c2-display", "c2 display with -3k^2 leading term", "Eq. (8.15)");
        Certificate fixed = make("c2-display-k3", "c2 display with -3k^3 leading term", "");
        printed.status = fixed.status = Status::verified;
        for (long n = 7; n <= 60; ++n) {
            Rational x(n);
            Polynomial rest = (3 * x - 36) * k * k + (-135 + 27 * x - Rational(3, 4) * x * x) * k + (36 * x - 192);
            Certificate a = certify_identity("c2-k2-n" + std::to_string(n), "", c2_in_k(n), -3 * k * k + rest);
            Certificate b = certify_identity("c2-k3-n" + std::to_string(n), "", c2_in_k(n), -3 * k.pow(3) + rest);
            if (!a.verified() && printed.verified()) {
                printed.status = Status::falsified;
                printed.witness = Rational(n);
            }
            if (!b.verified() && fixed.verified()) {
                fixed.status = Status::falsified;
                fixed.witness = Rational(n);
            }
        }
        if (!printed.verified())
            add_misprint(c, misprint("c2 := -3k^2 + (-36+3n)k^2 + ...", printed, {{"exponent slip: -3k^2 -> -3k^3", fixed}}));
        absorb(c, printed.verified() ? printed : fixed);
    }

    // The expansions in k = (n-8)/2 + a sqrt(n) with n = t^2 are polynomial in (a, t); agreement on
    // a grid larger than the degrees in each variable proves them.
    {
        Certificate c1e = make("c1-a-expansion", "c1 expansion in a and sqrt(n)", "");
        Certificate c2e = make("c2-a-expansion", "c2 expansion in a and sqrt(n)", "");
        c1e.status = c2e.status = Status::verified;
        std::vector<Rational> as = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1, 2),
                                    Rational(1), Rational(2)};
        for (const auto& a : as) {
            for (long ti = 1; ti <= 10; ++ti) {
                Rational t(ti), n = t * t, kk = (n - 8) / 2 + a * t;
                Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
                Rational e1 = 12 + (Rational(9, 8) - Rational(3, 4) * a2) * t.pow(8) +
                              (Rational(-3, 2) * a3 + Rational(3, 2) * a) * t.pow(7) +
                              (Rational(-39, 4) + Rational(3, 2) * a4 + 3 * a2) * t.pow(6) +
                              (3 * a5 - Rational(3, 2) * a) * t.pow(5) + (-6 * a4 + 6 * a2 + 3) * t.pow(4) +
                              (-12 * a3 - 18 * a) * t.pow(3) + (24 * a2 + Rational(141, 2)) * t * t - 3 * a * t;
                Rational e2 = -36 + (Rational(9, 2) - Rational(3, 2) * a2) * t.pow(4) + (-3 * a3 + 3 * a) * t.pow(3) -
                              Rational(39, 2) * t * t + 9 * a * t;
                if (coef::c1(n, kk) != e1 && c1e.verified()) {
                    c1e.status = Status::falsified;
                    c1e.witness = a;
                    c1e.details["t"] = t.str();
                }
                if (coef::c2(n, kk) != e2 && c2e.verified()) {
                    c2e.status = Status::falsified;
                    c2e.witness = a;
                    c2e.details["t"] = t.str();
                }
            }
        }
        absorb(c, c1e);
        absorb(c, c2e);
    }

    // Lower bounds of the a-coefficients and the resulting one-variable polynomials in t.
    Polynomial a = Polynomial::identity("a");
    Rational printed_c = upper(RadicalExpr(3) / (10 * RadicalExpr::sqrt(RadicalExpr::sqrt(10))));
    Rational exact_c = upper(RadicalExpr(12) / (10 * RadicalExpr::sqrt(RadicalExpr::sqrt(10))));
    Rational root3 = upper(RadicalExpr::sqrt(3) / 3);
    auto c1_terms = [&](const Rational& t5_bound, const Rational& t7_bound, const Rational& t3_bound, bool positive_a) {
        std::vector<std::tuple<Polynomial, Rational, int>> v = {
            {Polynomial(Rational(12)), Rational(12), 0},
            {Rational(9, 8) - Rational(3, 4) * a * a, Rational(3, 8), 8},
            {Rational(-3, 2) * a.pow(3) + Rational(3, 2) * a, t7_bound, 7},
            {Rational(-39, 4) + Rational(3, 2) * a.pow(4) + 3 * a * a, Rational(-39, 4), 6},
            {3 * a.pow(5) - Rational(3, 2) * a, t5_bound, 5},
            {-6 * a.pow(4) + 6 * a * a + 3, Rational(-3), 4},
            {-12 * a.pow(3) - 18 * a, t3_bound, 3},
            {24 * a * a + Rational(141, 2), Rational(141, 2), 2},
            {-3 * a, positive_a ? Rational(-3) : Rational(0), 1},
        };
        return v;
    };
    Reduction c1_pos_printed{"c1-a-nonneg-printed-constant", c1_terms(-printed_c, 0, -30, true), Domain::closed(0, 1)};
    Reduction c1_pos_exact{"c1-a-nonneg-exact-constant", c1_terms(-exact_c, 0, -30, true), Domain::closed(0, 1)};
    Reduction c1_neg{"c1-a-nonpos", c1_terms(Rational(-3, 2), -root3, -30, false), Domain::closed(-1, 0)};
    auto c2_terms = [&](bool positive_a) {
        std::vector<std::tuple<Polynomial, Rational, int>> v = {
            {Polynomial(Rational(-36)), Rational(-36), 0},
            {Rational(9, 2) - Rational(3, 2) * a * a, Rational(3), 4},
            {-3 * a.pow(3) + 3 * a, Rational(-3), 3},
            {Polynomial(Rational(-39, 2)), Rational(-39, 2), 2},
            {9 * a, positive_a ? Rational(0) : Rational(-9), 1},
        };
        return v;
    };
    Reduction c2_pos{"c2-a-nonneg", c2_terms(true), Domain::closed(0, 1)};
    Reduction c2_neg{"c2-a-nonpos", c2_terms(false), Domain::closed(-1, 0)};

    Certificate bound_printed = check_reduction(c1_pos_printed);
    Certificate bound_exact = check_reduction(c1_pos_exact);
    if (!bound_printed.verified())
        add_misprint(c, misprint("3a^5 - (3/2)a >= -3/10^(5/4) on [0,1]", bound_printed,
                                 {{"constant slip: 3 -> 12", bound_exact}}));
    absorb(c, bound_exact);
    absorb(c, check_reduction(c1_neg));
    absorb(c, check_reduction(c2_pos));
    absorb(c, check_reduction(c2_neg));

    json thresholds = json::array();
    auto threshold = [&](const std::string& name, const Reduction& r, const char* printed, const char* ulp,
                         bool counts) {
        Certificate t = check_threshold(name, reduction_poly(r), printed, ulp);
        thresholds.push_back(t.to_json());
        if (counts)
            absorb(c, t);
        return t;
    };
    threshold("c1-threshold-printed-constant", c1_pos_printed, "5.168", "0.001", false);
    threshold("c1-threshold-exact-constant-printed-t", c1_pos_exact, "5.168", "0.001", false);
    threshold("c1-threshold-exact-constant", c1_pos_exact, "5.192", "0.001", true);
    Certificate neg_printed = threshold("c1-threshold-a-nonpos-printed", c1_neg, "5.999", "0.001", false);
    Certificate neg_fixed = threshold("c1-threshold-a-nonpos-corrected", c1_neg, "6.04", "0.01", true);
    if (!neg_printed.verified())
        add_misprint(c, misprint("c1 >= 0 if t >= 5.999 (a <= 0)", neg_printed, {{"threshold t >= 6.04", neg_fixed}}));
    threshold("c2-threshold-a-nonneg", c2_pos, "3.3019", "0.0001", true);
    threshold("c2-threshold-a-nonpos", c2_neg, "3.4388", "0.0001", true);
    c.details["thresholds"] = thresholds;
    c.details["note"] = "t-reductions use n^(5/2) = t^5 and n^(7/2) = t^7; n = 36 lies below the corrected a <= 0 "
                        "threshold and is covered by the per-n band certification";
    return c;
}

Interval r1_enclosure(long n, const Rational& width)
{
    return Interval(Rational(n - 8, 2)) - d_enclosure(n, width);
}

Certificate verify_lemma_8_6(long n_hi)
{
    Certificate c = make("lemma-8.6", "c0, c1, c2 > 0 for 0 < k < (n-6)/2 (n <= 14) and r1 < k < (n-6)/2 (15 <= n <= 50)",
                         "Lemma 8.6");
    c.status = Status::verified;
    for (long n = 7; n <= std::min(n_hi, 14L); ++n) {
        Domain d = Domain::open(0, top(n));
        for (auto [name, p] : {std::pair<std::string, Polynomial>{"c0", c0_in_k(n)}, {"c1", c1_in_k(n)},
                               {"c2", c2_in_k(n)}})
            absorb(c, sign_check(name + "-n" + std::to_string(n), p, d, SignClaim::positive));
    }
    json sharp = json::array();
    for (long n = 15; n <= n_hi; ++n) {
        Interval r1 = r1_enclosure(n, Rational(1, 1000000000));
        Domain d = Domain::open(max(Rational(0), r1.hi()), top(n));
        for (auto [name, p] : {std::pair<std::string, Polynomial>{"c0", c0_in_k(n)}, {"c1", c1_in_k(n)},
                               {"c2", c2_in_k(n)}})
            absorb(c, sign_check(name + "-n" + std::to_string(n), p, d, SignClaim::positive));
        Rational below = r1.lo() - Rational(1, 1000);
        Rational v = c0_in_k(n)(below);
        Certificate s = make("c0-below-r1-n" + std::to_string(n), "c0 < 0 just below r1", "");
        s.status = v.sign() < 0 ? Status::verified : Status::falsified;
        if (!s.verified())
            s.witness = below;
        sharp.push_back(brief(s));
        absorb(c, s);
    }
    c.details["c0_root_structure"] = "c0 vanishes at r1 = (n-8)/2 - d(n) and is positive on (r1, r2)";
    c.details["sharpness"] = sharp;
    return c;
}

Certificate verify_lemma_7_1_7_2(long n_lo, long n_hi)
{
    Certificate c = make("lemma-7.1-7.2", "A2 > 0 and B1 > 0 on the supercritical range; A1 + 12 > 0 for n <= 20",
                         "Lemmas 7.1, 7.2");
    c.status = Status::verified;
    for (long n = n_lo; n <= n_hi; ++n) {
        Domain d = Domain::open(0, top(n));
        absorb(c, sign_check("A2-n" + std::to_string(n), A2_in_k(n), d, SignClaim::positive));
        absorb(c, sign_check("B1-n" + std::to_string(n), B1_in_k(n), d, SignClaim::positive));
    }

    Polynomial x = Polynomial::identity("c");
    Polynomial shift = -3 * x * x + 12 * x;
    Certificate vertex = make("vertex", "A1 - 3c^2 + 12c is maximal at c = 2 with value A1 + 12", "");
    vertex.status = shift.derivative()(Rational(2)).is_zero() && shift(Rational(2)) == Rational(12) &&
                            shift.lead().sign() < 0
                        ? Status::verified
                        : Status::falsified;
    absorb(c, vertex);

    json onset = json::array();
    for (long n = n_lo; n <= n_hi; ++n) {
        Polynomial a1 = coef::A1(Rational(n), K()) + 12;
        Domain d = Domain::open(0, top(n));
        if (n <= 20) {
            absorb(c, sign_check("A1+12-n" + std::to_string(n), a1, d, SignClaim::positive));
            continue;
        }
        auto roots = isolate_roots(a1, d, Rational(1) / Rational(1000000000000L));
        json row;
        row["n"] = n;
        Certificate w = make("A1+12-window-n" + std::to_string(n), "A1 + 12 < 0 exactly on (0, k_m)", "");
        if (roots.size() != 1) {
            w.status = Status::falsified;
        } else {
            Rational x(n);
            Interval km = enclose((RadicalExpr(5 * x - 30) - RadicalExpr::sqrt(15 * x * x - 60 * x + 190)) / 10,
                                  Rational(1) / Rational(1000000000000L));
            bool neg_left = a1(roots[0].lo() / 2).sign() < 0;
            w.status = roots[0].intersects(km) && neg_left ? Status::verified : Status::falsified;
            row["k_m"] = interval_json(roots[0]);
        }
        onset.push_back(row);
        absorb(c, w);
    }
    c.details["A1+12_negative_windows"] = onset;
    return c;
}

AlphaSplit alpha_split_detail(long n, const Rational& alpha, const Rational& width)
{
    if (!(Rational(0) < alpha && alpha < Rational(1)))
        throw Error(ErrorKind::domain, "alpha must lie in (0, 1), got " + alpha.str());
    AlphaSplit r;
    r.n = n;
    r.alpha = alpha;
    Certificate& c = r.certificate;
    c = make("alpha-split", "monotonicity coefficients positive at n = " + std::to_string(n) + ", alpha = " + alpha.str(),
             "Eqs. (7.9)-(7.12)");
    c.status = Status::verified;

    Rational hi = top(n);
    Polynomial A2 = A2_in_k(n);
    std::vector<std::pair<Rational, Interval>> candidates = {{Rational(0), Interval(A2(Rational(0)))},
                                                             {hi, Interval(A2(hi))}};
    Polynomial dA2 = A2.derivative();
    for (auto iv : isolate_roots(dA2, Domain::open(0, hi), Rational(1, 1 << 20))) {
        iv = iv.is_point() ? iv : refine_root(dA2.squarefree_part(), iv, Rational(1) / Rational(mpz_class(mpz_class(1) << 60)));
        candidates.push_back({iv.mid(), enclose_poly(A2, iv)});
    }
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const auto& x, const auto& y) { return x.second.lo() < y.second.lo(); });
    r.min_A2 = best->second;
    r.argmin_k = best->first;
    Rational g = alpha / ((1 - alpha) * (1 - alpha));
    r.gate12 = 12 * g < r.min_A2.lo();
    r.gate8 = 8 * g < r.min_A2.lo();

    c.details["n"] = n;
    c.details["alpha"] = alpha.str();
    c.details["min_A2"] = interval_json(r.min_A2);
    c.details["argmin_k"] = r.argmin_k.str();
    c.details["gate_12"] = {{"lhs", (12 * g).str()}, {"approx", approx(12 * g)}, {"holds", r.gate12}};
    c.details["gate_8"] = {{"lhs", (8 * g).str()}, {"approx", approx(8 * g)}, {"holds", r.gate8}};
    if (!r.gate12) {
        c.status = Status::falsified;
        c.witness = r.argmin_k;
    }

    Polynomial a1 = coef::A1(Rational(n), K()) + 12;
    Polynomial Q = a1 * a1 - 12 * alpha * A2;
    r.a1_roots = isolate_roots(a1, Domain::open(0, hi), width);
    r.window_roots = isolate_roots(Q, Domain::real_line(), width);
    json wr = json::array(), ar = json::array();
    for (const auto& x : r.window_roots)
        wr.push_back(interval_json(x));
    for (const auto& x : r.a1_roots)
        ar.push_back(interval_json(x));
    c.details["window_roots"] = wr;
    c.details["A1+12_roots"] = ar;

    // Segments of [0, hi] cut by the roots of A1 + 12; where it is negative, the quadratic-form
    // discriminant Q must be negative on a rational superset of the segment.
    std::vector<Rational> left = {Rational(0)}, right;
    for (const auto& x : r.a1_roots) {
        right.push_back(x.hi());
        left.push_back(x.lo());
    }
    right.push_back(hi);
    bool vacuous = true;
    for (std::size_t i = 0; i < left.size(); ++i) {
        Rational a = i == 0 ? Rational(0) : r.a1_roots[i - 1].hi();
        Rational b = i < r.a1_roots.size() ? r.a1_roots[i].lo() : hi;
        Rational probe = (a + b) / 2;
        if (a1(probe).sign() >= 0)
            continue;
        vacuous = false;
        Rational lo = i == 0 ? Rational(0) : r.a1_roots[i - 1].lo();
        Rational up = i < r.a1_roots.size() ? r.a1_roots[i].hi() : hi;
        absorb(c, sign_check("Q-negative-on-[" + approx(lo) + "," + approx(up) + "]", Q, Domain::closed(lo, up),
                             SignClaim::negative));
    }
    c.details["A1+12_negative_somewhere"] = !vacuous;
    return r;
}

Certificate alpha_split(long n, const Rational& alpha) { return alpha_split_detail(n, alpha).certificate; }

Rational critical_alpha(long n, unsigned bits)
{
    Rational m = alpha_split_detail(n, Rational(1, 2)).min_A2.lo();
    Rational u = 1 + Rational(6) / m;
    RadicalExpr e = RadicalExpr(u) - RadicalExpr::sqrt(u * u - 1);
    Interval a = enclose(e, Rational(1) / Rational(mpz_class(mpz_class(1) << (bits + 8))));
    return round_down(a.lo(), bits) - Rational(1) / Rational(mpz_class(mpz_class(1) << bits));
}

Certificate verify_lemma_4_1(long n_lo, long n_hi)
{
    Certificate c = make("lemma-4.1", "c0, c1, c2 > 0 for (n+6)/(n-6) < p < p_c(n)", "Lemma 4.1");
    c.status = Status::verified;
    json rows = json::array();
    for (long n = n_lo; n <= n_hi; ++n) {
        Rational lo(0);
        if (n >= 15)
            lo = max(Rational(0), r1_enclosure(n, Rational(1, 1000000000)).hi());
        Domain d = Domain::open(lo, top(n));
        Status s = Status::verified;
        for (auto [name, p] : {std::pair<std::string, Polynomial>{"c0", c0_in_k(n)}, {"c1", c1_in_k(n)},
                               {"c2", c2_in_k(n)}}) {
            Certificate x = sign_check(name + "-n" + std::to_string(n), p, d, SignClaim::positive);
            s = worst(s, x.status);
            if (!x.verified())
                absorb(c, x);
        }
        if (s != Status::verified || n > 50)
            rows.push_back({{"n", n}, {"status", to_string(s)}, {"extension", n > 50}});
    }
    c.details["n_range"] = {n_lo, n_hi};
    c.details["extension_beyond_paper_scan"] = n_hi > 50;
    c.details["notable"] = rows;
    return c;
}

const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids = {"a2-factorization", "d0-identity", "lemma-8.1",     "lemma-8.3",
                                                 "lemma-8.4-8.5",    "lemma-8.6",   "lemma-7.1-7.2", "alpha-split",
                                                 "lemma-4.1",        "exponent-chain"};
    return ids;
}

std::string resolve_claim_id(const std::string& name)
{
    for (const auto& id : claim_ids())
        if (id == name)
            return id;
    static const std::vector<std::pair<std::string, std::string>> shorts = {
        {"7.3", "a2-factorization"},   {"A2", "a2-factorization"}, {"8.2", "d0-identity"},
        {"d0", "d0-identity"},         {"8.1", "lemma-8.1"},       {"8.3", "lemma-8.3"},
        {"8.4", "lemma-8.4-8.5"},      {"8.5", "lemma-8.4-8.5"},   {"8.6", "lemma-8.6"},
        {"7.1", "lemma-7.1-7.2"},      {"7.2", "lemma-7.1-7.2"},   {"alpha", "alpha-split"},
        {"4.1", "lemma-4.1"},          {"chain", "exponent-chain"}};
    for (const auto& [s, id] : shorts)
        if (s == name || "lemma-" + s == name)
            return id;
    throw Error(ErrorKind::usage, "unknown claim id '" + name + "'");
}

namespace {

Certificate alpha_split_family(long n_max)
{
    Certificate c = make("alpha-split", "monotonicity coefficients positive via the alpha split", "Theorem 2.2");
    c.status = Status::verified;
    json used = json::array();
    auto run = [&](long n, const Rational& a) {
        AlphaSplit s = alpha_split_detail(n, a);
        used.push_back({{"n", n}, {"alpha", a.str()}, {"status", to_string(s.certificate.status)}});
        absorb(c, s.certificate);
    };
    run(12, Rational(1, 2));
    run(15, Rational(1, 2));
    for (long n = 21; n <= std::min(n_max, 30L); ++n)
        run(n, n == 21 ? Rational::parse("0.9342") : critical_alpha(n));
    c.details["alphas"] = used;
    return c;
}

Certificate exponent_chain(long n_max)
{
    Certificate c = make("exponent-chain", "p_S < p_c < p_m for n >= 15 and p_m1 < p_m for n >= 21", "Theorem 2.2, Remark 2.3");
    c.status = Status::verified;
    long count = 0;
    for (long n = 15; n <= n_max; ++n) {
        auto r = exponent_chain_report(n);
        for (const auto& x : r.ordering) {
            ++count;
            if (!x.verified()) {
                Certificate y = x;
                y.claim_id += "-n" + std::to_string(n);
                absorb(c, y);
            }
        }
    }
    c.details["comparisons"] = count;
    c.details["n_max"] = n_max;
    return c;
}

}  // namespace

std::vector<Certificate> run_all(const CertifyConfig& cfg)
{
    std::vector<Certificate> out;
    auto want = [&](const std::string& id) { return !cfg.only || *cfg.only == id; };
    if (want("a2-factorization")) {
        A2Options o;
        o.n_hi = cfg.n_max;
        if (cfg.tamper.count("a2-k3") || cfg.tamper.count("demo"))
            o.k3_constant = 35;
        out.push_back(verify_A2_factorization(o));
    }
    if (want("d0-identity"))
        out.push_back(verify_d0_identity());
    if (want("lemma-8.1"))
        out.push_back(verify_lemma_8_1());
    if (want("lemma-8.3"))
        out.push_back(verify_lemma_8_3(cfg.lemma_8_3_n_max, cfg.lemma_8_3_sample_max));
    if (want("lemma-8.4-8.5"))
        out.push_back(verify_lemma_8_4_8_5(12, cfg.band_n_max));
    if (want("lemma-8.6"))
        out.push_back(verify_lemma_8_6(cfg.lemma_8_6_n_max));
    if (want("lemma-7.1-7.2"))
        out.push_back(verify_lemma_7_1_7_2(7, cfg.n_max));
    if (want("alpha-split"))
        out.push_back(alpha_split_family(30));
    if (want("lemma-4.1"))
        out.push_back(verify_lemma_4_1(7, cfg.lemma_4_1_n_max));
    if (want("exponent-chain"))
        out.push_back(exponent_chain(cfg.chain_n_max));
    return out;
}

json certificate_bundle(const std::vector<Certificate>& certs, const CertifyConfig& cfg)
{
    json j;
    j["schema_version"] = 1;
    j["kind"] = "certificate-bundle";
    json conf;
    conf["n_max"] = cfg.n_max;
    conf["lemma_8_3_n_max"] = cfg.lemma_8_3_n_max;
    conf["lemma_8_3_sample_max"] = cfg.lemma_8_3_sample_max;
    conf["band_n_max"] = cfg.band_n_max;
    conf["lemma_8_6_n_max"] = cfg.lemma_8_6_n_max;
    conf["lemma_4_1_n_max"] = cfg.lemma_4_1_n_max;
    conf["chain_n_max"] = cfg.chain_n_max;
    conf["only"] = cfg.only ? json(*cfg.only) : json(nullptr);
    conf["tamper"] = json(std::vector<std::string>(cfg.tamper.begin(), cfg.tamper.end()));
    j["config"] = conf;
    int counts[3] = {0, 0, 0};
    json misprints = json::array();
    for (const auto& c : certs) {
        ++counts[static_cast<int>(c.status)];
        if (c.details.contains("misprints"))
            for (const auto& m : c.details["misprints"])
                misprints.push_back({{"claim_id", c.claim_id}, {"record", m}});
    }
    j["summary"] = {{"status", to_string(worst_status(certs))},
                    {"verified", counts[0]},
                    {"falsified", counts[1]},
                    {"inconclusive", counts[2]}};
    j["misprints"] = misprints;
    j["certificates"] = json::array();
    for (const auto& c : certs)
        j["certificates"].push_back(c.to_json());
    return j;
}

}  // namespace tle
