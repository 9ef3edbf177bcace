#include "tle/roots.hpp"

#include "tle/error.hpp"

#include <algorithm>

namespace tle {

Domain Domain::closed(const Rational& a, const Rational& b)
{
    if (b < a)
        throw Error(ErrorKind::domain, "empty domain");
    return Domain{a, b, false, false};
}

Domain Domain::open(const Rational& a, const Rational& b)
{
    if (!(a < b))
        throw Error(ErrorKind::domain, "empty domain");
    return Domain{a, b, true, true};
}

Domain Domain::ray(const Rational& a, bool open) { return Domain{a, std::nullopt, open, true}; }

Domain Domain::real_line() { return Domain{std::nullopt, std::nullopt, true, true}; }

bool Domain::contains(const Rational& x) const
{
    if (lo && (x < *lo || (lo_open && x == *lo)))
        return false;
    if (hi && (*hi < x || (hi_open && x == *hi)))
        return false;
    return true;
}

std::string Domain::str() const
{
    std::string s = lo ? (lo_open ? "(" : "[") + lo->str() : "(-inf";
    s += ", ";
    s += hi ? hi->str() + (hi_open ? ")" : "]") : "+inf)";
    return s;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p)
{
    std::vector<Polynomial> chain{p};
    if (p.degree() < 1)
        return chain;
    chain.push_back(p.derivative());
    while (true) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        r = -(r * (Rational(1) / r.lead().abs()));
        chain.push_back(r);
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs)
{
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<Polynomial>& chain, const Rational& x)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain)
        s.push_back(q(x).sign());
    return variations(s);
}

struct Chain {
    Polynomial q;
    std::vector<Polynomial> seq;

    explicit Chain(const Polynomial& p) : q(p.squarefree_part()), seq(sturm_chain(q)) {}

    // roots of q in (a, b]
    int half_open(const Rational& a, const Rational& b) const
    {
        if (q.degree() < 1)
            return 0;
        return variations_at(seq, a) - variations_at(seq, b);
    }
    int open(const Rational& a, const Rational& b) const
    {
        return half_open(a, b) - (q(b).is_zero() ? 1 : 0);
    }
};

struct Bounds {
    Rational lo, hi;
};

Bounds finite_bounds(const Polynomial& q, const Domain& d)
{
    Rational b = cauchy_bound(q);
    return {d.lo ? *d.lo : -b, d.hi ? *d.hi : b};
}

Rational sample_point(const Domain& d)
{
    if (d.lo && d.hi)
        return (*d.lo + *d.hi) / Rational(2);
    if (d.lo)
        return *d.lo + Rational(1);
    if (d.hi)
        return *d.hi - Rational(1);
    return Rational(0);
}

bool violates(SignClaim c, int s)
{
    switch (c) {
    case SignClaim::positive:
        return s <= 0;
    case SignClaim::negative:
        return s >= 0;
    case SignClaim::nonneg:
        return s < 0;
    case SignClaim::nonpos:
        return s > 0;
    }
    return true;
}

// Pull interval endpoints off open domain endpoints so that they can serve as witnesses.
Interval inside(const Polynomial& q, Interval iv, const Domain& d)
{
    while (!iv.is_point() && (!d.contains(iv.lo()) || !d.contains(iv.hi())))
        iv = refine_root(q, iv, iv.width() / Rational(2));
    return iv;
}

}  // namespace

Rational cauchy_bound(const Polynomial& p)
{
    if (p.is_zero())
        throw Error(ErrorKind::degenerate, "degenerate polynomial");
    Rational m(0);
    Rational lead = p.lead();
    for (int i = 0; i < p.degree(); ++i)
        m = max(m, (p.coeff(i) / lead).abs());
    return Rational(1) + m;
}

int sturm_count_roots(const Polynomial& p, const Domain& d)
{
    if (p.is_zero())
        throw Error(ErrorKind::degenerate, "degenerate polynomial");
    Chain c(p);
    if (c.q.degree() < 1)
        return 0;
    Bounds b = finite_bounds(c.q, d);
    if (b.hi < b.lo)
        return 0;
    int n = c.half_open(b.lo, b.hi);
    if (d.hi && d.hi_open && c.q(b.hi).is_zero())
        --n;
    if (d.lo && !d.lo_open && c.q(b.lo).is_zero())
        ++n;
    return n;
}

Interval refine_root(const Polynomial& q, Interval iso, const Rational& width)
{
    if (iso.is_point())
        return iso;
    Rational lo = iso.lo(), hi = iso.hi();
    int slo = q(lo).sign();
    if (slo == 0)
        return Interval(lo);
    if (q(hi).is_zero())
        return Interval(hi);
    while (width < hi - lo) {
        Rational m = (lo + hi) / Rational(2);
        int sm = q(m).sign();
        if (sm == 0)
            return Interval(m);
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    return Interval(lo, hi);
}

std::vector<Interval> isolate_roots(const Polynomial& p, const Domain& d, const Rational& width)
{
    if (p.is_zero())
        throw Error(ErrorKind::degenerate, "degenerate polynomial");
    if (width.sign() <= 0)
        throw Error(ErrorKind::domain, "isolation width must be positive");
    Chain c(p);
    std::vector<Interval> out;
    if (c.q.degree() < 1)
        return out;
    Bounds b = finite_bounds(c.q, d);
    if (b.hi < b.lo)
        return out;
    if (d.lo && !d.lo_open && c.q(b.lo).is_zero())
        out.emplace_back(b.lo);
    if (b.lo == b.hi)
        return out;
    if (d.hi && !d.hi_open && c.q(b.hi).is_zero())
        out.emplace_back(b.hi);

    struct Job {
        Rational a, b;
        int count;
    };
    std::vector<Job> stack;
    int total = c.open(b.lo, b.hi);
    if (total > 0)
        stack.push_back({b.lo, b.hi, total});
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        bool clean = !c.q(j.a).is_zero() && !c.q(j.b).is_zero();
        if (j.count == 1 && clean && !(width < j.b - j.a)) {
            out.emplace_back(j.a, j.b);
            continue;
        }
        Rational m = (j.a + j.b) / Rational(2);
        if (c.q(m).is_zero())
            out.emplace_back(m);
        int left = c.open(j.a, m);
        int right = j.count - left - (c.q(m).is_zero() ? 1 : 0);
        if (left > 0)
            stack.push_back({j.a, m, left});
        if (right > 0)
            stack.push_back({m, j.b, right});
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo() < y.lo(); });
    return out;
}

std::string to_string(SignClaim c)
{
    switch (c) {
    case SignClaim::positive:
        return "positive";
    case SignClaim::negative:
        return "negative";
    case SignClaim::nonneg:
        return "nonneg";
    case SignClaim::nonpos:
        return "nonpos";
    }
    return "?";
}

Certificate certify_sign(const Polynomial& p, const Domain& d, SignClaim claim, std::string claim_id,
                         std::string statement)
{
    Certificate cert;
    cert.claim_id = std::move(claim_id);
    cert.statement = statement.empty() ? p.str() + " " + to_string(claim) + " on " + d.str() : std::move(statement);
    cert.details["domain"] = d.str();
    cert.details["claim"] = to_string(claim);
    cert.details["degree"] = p.degree();

    auto falsify = [&](std::variant<Rational, Interval> w) {
        cert.status = Status::falsified;
        cert.witness = std::move(w);
        return cert;
    };

    if (p.is_zero()) {
        bool strict = claim == SignClaim::positive || claim == SignClaim::negative;
        if (!strict) {
            cert.details["root_count"] = "all";
            return cert;
        }
        return falsify(sample_point(d));
    }

    bool strict = claim == SignClaim::positive || claim == SignClaim::negative;
    int count = sturm_count_roots(p, d);
    cert.details["root_count"] = count;
    Polynomial q = p.squarefree_part();

    if (strict && count == 0) {
        Rational s = sample_point(d);
        cert.details["sample"] = s.str();
        if (!d.hi && d.lo)
            cert.details["cauchy_bound"] = cauchy_bound(q).str();
        if (violates(claim, p(s).sign()))
            return falsify(s);
        return cert;
    }

    Rational w = Rational(1) / Rational(1 << 20);
    if (d.lo && d.hi)
        w = w * max(Rational(1), *d.hi - *d.lo);
    std::vector<Interval> roots = isolate_roots(p, d, w);
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (auto& r : roots) {
        r = inside(q, r, d);
        jr.push_back({r.lo().str(), r.hi().str()});
    }
    cert.details["roots"] = jr;

    if (strict) {
        std::optional<Interval> even_root;
        for (const auto& r : roots) {
            if (r.is_point())
                return falsify(r.lo());
            for (const Rational& x : {r.lo(), r.hi()})
                if (d.contains(x) && violates(claim, p(x).sign()))
                    return falsify(x);
            if (!even_root)
                even_root = r;
        }
        return falsify(*even_root);
    }

    std::vector<Rational> samples;
    Bounds b = finite_bounds(q, d);
    Rational left = b.lo;
    if (d.lo && !d.lo_open)
        samples.push_back(*d.lo);
    for (const auto& r : roots) {
        if (left < r.lo())
            samples.push_back((left + r.lo()) / Rational(2));
        if (!r.is_point()) {
            samples.push_back(r.lo());
            samples.push_back(r.hi());
        }
        left = r.hi();
    }
    if (d.hi) {
        if (left < *d.hi)
            samples.push_back((left + *d.hi) / Rational(2));
        if (!d.hi_open)
            samples.push_back(*d.hi);
    } else {
        samples.push_back(max(left, b.hi) + Rational(1));
    }
    if (!d.lo)
        samples.push_back(min(roots.empty() ? b.lo : roots.front().lo(), b.lo) - Rational(1));
    cert.details["samples"] = static_cast<int>(samples.size());
    for (const auto& s : samples)
        if (d.contains(s) && violates(claim, p(s).sign()))
            return falsify(s);
    return cert;
}

Interval enclose_poly(const Polynomial& p, const Interval& x)
{
    Interval acc(Rational(0));
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + Interval(p.coeff(i));
    return acc;
}

}  // namespace tle
