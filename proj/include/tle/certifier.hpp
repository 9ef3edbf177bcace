#pragma once

#include "tle/certificate.hpp"
#include "tle/interval.hpp"
#include "tle/polynomial.hpp"
#include "tle/roots.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tle {

// Exact identity check; a mismatch yields the first integer point where the sides differ.
Certificate certify_identity(const std::string& claim_id, const std::string& statement, const Polynomial& lhs,
                             const Polynomial& rhs);

struct A2Options {
    long n_lo = 7, n_hi = 60;
    // Constant in the (36 - 6n) k^3 coefficient of the expanded display.
    Rational k3_constant = 36;
};

Certificate verify_A2_factorization(const A2Options& opt = {});
Certificate verify_d0_identity();
Certificate verify_lemma_8_1();
Certificate verify_lemma_8_3(long n_max = 500, long sample_max = 10000);
Certificate verify_lemma_8_4_8_5(long n_lo = 12, long n_hi = 100);
Certificate verify_lemma_8_6(long n_hi = 50);
Certificate verify_lemma_7_1_7_2(long n_lo = 7, long n_hi = 60);

struct AlphaSplit {
    long n = 0;
    Rational alpha;
    Interval min_A2;
    Rational argmin_k;
    bool gate12 = false, gate8 = false;
    // Isolating intervals of the real roots of (A1+12)^2 - 12 alpha A2, and of A1+12 on the k-range.
    std::vector<Interval> window_roots;
    std::vector<Interval> a1_roots;
    Certificate certificate;
};

AlphaSplit alpha_split_detail(long n, const Rational& alpha, const Rational& width = Rational(1, 1000000000));
Certificate alpha_split(long n, const Rational& alpha);

// Largest gate-admissible alpha for n, rounded down to a rational with the given number of bits.
Rational critical_alpha(long n, unsigned bits = 40);

Certificate verify_lemma_4_1(long n_lo = 7, long n_hi = 100);

// Interval for r1(n) = (n-8)/2 - d(n).
Interval r1_enclosure(long n, const Rational& width);

struct CertifyConfig {
    long n_max = 60;
    long lemma_8_3_n_max = 500;
    long lemma_8_3_sample_max = 10000;
    long band_n_max = 100;
    long lemma_8_6_n_max = 50;
    long lemma_4_1_n_max = 100;
    long chain_n_max = 200;
    std::optional<std::string> only;
    std::set<std::string> tamper;
};

// Known claim ids, in run order.
const std::vector<std::string>& claim_ids();
// Accepts either a claim id or a short form such as "8.3".
std::string resolve_claim_id(const std::string& name);

std::vector<Certificate> run_all(const CertifyConfig& cfg = {});
nlohmann::ordered_json certificate_bundle(const std::vector<Certificate>& certs, const CertifyConfig& cfg);

}  // namespace tle
