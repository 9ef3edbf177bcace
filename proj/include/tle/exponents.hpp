#pragma once

#include "tle/certificate.hpp"
#include "tle/interval.hpp"
#include "tle/polynomial.hpp"
#include "tle/radical.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tle {

enum class Provenance { closed_form, root_oracle };

std::string to_string(Provenance p);

// Either +infinity or a certified enclosure (a point interval when the value is rational).
struct ExponentValue {
    std::optional<Interval> value;
    Provenance provenance = Provenance::closed_form;

    static ExponentValue infinite(Provenance p = Provenance::closed_form) { return {std::nullopt, p}; }
    static ExponentValue finite(const Interval& v, Provenance p = Provenance::closed_form) { return {v, p}; }

    bool is_infinite() const { return !value.has_value(); }
    bool is_exact() const { return value && value->is_point(); }
    const Interval& enclosure() const;

    nlohmann::ordered_json to_json() const;
};

inline const Rational& default_exponent_width()
{
    static const Rational w = Rational(1) / Rational(mpz_class("1000000000000"));
    return w;
}

Polynomial d1_polynomial();
Polynomial d2_polynomial();

ExponentValue serrin_exponent(long n);
ExponentValue sobolev_exponent(long n);

RadicalExpr d0_expr(long n);
// The alternative closed form 256(3n^2+4) / (36 sqrt d2 - d1)^(1/3).
RadicalExpr d0_alt_expr(long n);
RadicalExpr d_expr(long n);

Interval d0_enclosure(long n, const Rational& width);
Interval d_enclosure(long n, const Rational& width);

ExponentValue joseph_lundgren_triharmonic(long n, const Rational& width = default_exponent_width());

// The cubic c0 in t = a^2 at fixed n.
Polynomial pc_cubic(long n);
// Enclosure of the admissible root t* of pc_cubic with 0 < t* < ((n-8)/2)^2.
Interval pc_admissible_root(long n, const Rational& width);
Interval pc_root_oracle(long n, const Rational& width = default_exponent_width());

ExponentValue pm(long n, const Rational& width = default_exponent_width());
ExponentValue pm1(long n);
ExponentValue pc_harmonic(long n, const Rational& width = default_exponent_width());
ExponentValue pc_biharmonic(long n, const Rational& width = default_exponent_width());

using ExponentFn = std::function<ExponentValue(const Rational& width)>;

// Certifies a < b, refining both sides until the enclosures separate. finite < infinity.
Certificate certify_exponent_less(const std::string& claim_id, const std::string& statement, const ExponentFn& a,
                                  const ExponentFn& b, const Rational& start_width = default_exponent_width(),
                                  unsigned cap_bits = default_precision_cap());

struct ExponentChainReport {
    long n = 0;
    ExponentValue serrin, sobolev, pc, pm, pm1, pc_harmonic, pc_biharmonic;
    std::vector<Certificate> ordering;

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

ExponentChainReport exponent_chain_report(long n, const Rational& width = default_exponent_width());

}  // namespace tle
