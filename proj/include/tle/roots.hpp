#pragma once

#include "tle/certificate.hpp"
#include "tle/interval.hpp"
#include "tle/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tle {

// A real interval or ray; a missing bound means infinity on that side.
struct Domain {
    std::optional<Rational> lo, hi;
    bool lo_open = false, hi_open = false;

    static Domain closed(const Rational& a, const Rational& b);
    static Domain open(const Rational& a, const Rational& b);
    static Domain ray(const Rational& a, bool open = false);
    static Domain real_line();

    bool contains(const Rational& x) const;
    std::string str() const;
};

std::vector<Polynomial> sturm_chain(const Polynomial& p);

// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

// Number of distinct real roots in the domain, endpoints honoured per the open/closed flags.
// Internally chains count on half-open (a, b].
int sturm_count_roots(const Polynomial& p, const Domain& d);

// Disjoint isolating intervals, sorted, each of width <= width; a point interval marks an exact
// rational root. Intervals of positive width have non-root endpoints of opposite sign.
std::vector<Interval> isolate_roots(const Polynomial& p, const Domain& d, const Rational& width);

// Shrinks an isolating interval of a squarefree polynomial to the requested width.
Interval refine_root(const Polynomial& squarefree, Interval iso, const Rational& width);

// Horner evaluation in interval arithmetic; contains p(x) for every x in the interval.
Interval enclose_poly(const Polynomial& p, const Interval& x);

enum class SignClaim { positive, negative, nonneg, nonpos };

std::string to_string(SignClaim c);

Certificate certify_sign(const Polynomial& p, const Domain& d, SignClaim claim, std::string claim_id = "sign",
                         std::string statement = {});

}  // namespace tle
