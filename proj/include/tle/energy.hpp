#pragma once

#include "tle/coefficients.hpp"
#include "tle/profiles.hpp"
#include "tle/quadform.hpp"
#include "tle/rational.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace tle {

enum class Formula { eq_2_3, eq_7_1 };
// Final square of the flux formula: lambda (d Delta u^l / dl)^2 or lambda (Delta_theta du^l/dl)^2.
enum class FinalTerm { laplacian, angular };
enum class MuTerms { printed, corrected };

struct FormulaVariant {
    Formula formula = Formula::eq_2_3;
    FinalTerm final_term = FinalTerm::laplacian;
    DeltaSource deltas = DeltaSource::derived;
    MuTerms mu_terms = MuTerms::printed;

    std::string name() const;
    static FormulaVariant parse(const std::string& name);
    static std::vector<FormulaVariant> all();
};

struct EnergyOptions {
    // Depth of the geometric mesh on (0, lambda]; pieces [2^{-i-1}, 2^{-i}] lambda.
    int levels = 60;
    std::size_t jet_order = 8;
    int pieces_per_level = 1;
};

// Exact boundary algebra for one (n, k, mu).
struct FluxAlgebra {
    Rational n, k, mu;
    QuadForm flux;
    Reduction flux_reduction;

    static FluxAlgebra build(long n, const Rational& k, long mu);
    QuadForm formula(const FormulaVariant& v) const;
    // canonical(formula) == canonical(flux), as exact rationals
    bool consistent(const FormulaVariant& v) const;
    nlohmann::ordered_json consistency_report() const;
};

struct EnergyReport {
    long double lambda = 0, E = 0, dE_formula = 0, dE_fd = 0, fd_step = 0, convergence_order_estimate = 0;
    long double correction = 0;
    long double scale = 0;
    long double relative_residual = 0;
    std::vector<long double> steps, fd_values, residuals;
    std::string variant;

    nlohmann::ordered_json to_json() const;
};

class EnergyModel {
public:
    EnergyModel(HarmonicTestFunction u, const Rational& p, EnergyOptions opt = {});

    const HarmonicTestFunction& function() const { return u_; }
    const FluxAlgebra& algebra() const { return alg_; }
    long double k() const { return k_; }
    const Rational& p() const { return p_; }

    // g_j = lambda^j f^(j)(lambda), f(lambda) = lambda^k R(lambda): the mode coefficient of u^lambda on the unit sphere
    std::vector<long double> g(long double lambda) const;

    struct Bulk {
        long double energy = 0;      // lambda^{2k+6-n} int_{B_lambda} 1/2 |grad Delta u|^2 - |u|^{p+1}/(p+1)
        long double correction = 0;  // -int_{B_1} (Delta^3 u^l + |u^l|^{p-1} u^l) du^l/dl
    };
    Bulk bulk(long double lambda) const;

    long double energy(long double lambda, const FormulaVariant& v = {}) const;
    long double dE_formula(long double lambda, const FormulaVariant& v = {}) const;
    // formula value and the magnitude used to normalize residuals
    std::pair<long double, long double> dE_formula_scaled(long double lambda, const FormulaVariant& v) const;

    // Modified energy E^c: Jordan form (alpha = 0) or the alpha split.
    long double energy_c(long double lambda, long double alpha) const;
    // d/dl E^c for solutions, evaluated directly from the canonical form and the adjustment's derivative
    long double dEc_direct(long double lambda, long double alpha) const;
    // the same quantity written as the sum of squares with the split's coefficients
    long double dEc_squares(long double lambda, long double alpha) const;

private:
    HarmonicTestFunction u_;
    Rational p_;
    EnergyOptions opt_;
    long double k_, n_, mu_, cY_;
    FluxAlgebra alg_;
    std::vector<std::pair<FormulaVariant, Reduction>> reductions_;
    long double A1_, A2_, B1_;

    const Reduction& reduction(const FormulaVariant& v) const;
    long double split_coefficient(long double alpha) const;
};

EnergyReport fd_check(const EnergyModel& m, long double lambda, const FormulaVariant& v = {},
                      std::vector<long double> step_factors = {1e-2L, 1e-3L, 1e-4L});

// Richardson-extrapolated central difference of E at step h and h/2.
long double fd_richardson(const std::function<long double(long double)>& E, long double lambda, long double h);

struct IdentityResidual {
    std::string name;
    long double max_relative = 0;
    long double max_relative_printed = 0;
};

struct IdentityReport {
    std::vector<IdentityResidual> identities;
    std::size_t samples = 0;
    long double max_relative() const;
    nlohmann::ordered_json to_json() const;
};

IdentityReport identity_suite_3_2(const HarmonicTestFunction& u, const Rational& p,
                                  const std::vector<std::pair<long double, long double>>& lambda_r);
std::vector<std::pair<long double, long double>> random_lambda_r(std::size_t count, unsigned seed = 1);

using ScalarJetFn = std::function<Jet(const Jet&)>;

// Integrated residual of the Jordan decomposition with parameters c1, c2 over [l0, l1].
long double jordan_residual(const ScalarJetFn& f, long double A1, long double A2, long double l0, long double l1,
                            long double c1 = 2, long double c2 = 0);

struct JordanScan {
    long double best_c1 = 0, best_d1 = 0, max_residual = 0;
};
JordanScan jordan_c1_scan(const ScalarJetFn& f, long double A1, long double A2, long double l0, long double l1,
                          long double c1_lo = -2, long double c1_hi = 6, int points = 801);

struct BoundCheck {
    long double infimum_ratio = 0;
    long double min_dEc = 0;
    std::size_t samples = 0, skipped = 0;
    bool defined = false;
    nlohmann::ordered_json to_json() const;
};

// Ratio of dE^c/dl (sum-of-squares form) to lambda f'^2 over a lambda grid.
BoundCheck monotonicity_bound_check(const EnergyModel& m, long double alpha, const std::vector<long double>& lambdas);

struct NonnegativityReport {
    long n = 0;
    Rational p, alpha;
    long double min_direct = 0, min_squares = 0, max_identity_gap = 0, max_fd_gap = 0;
    std::size_t samples = 0;
    bool nonnegative = false;
    nlohmann::ordered_json to_json() const;
};

// The default test matrix: gaussian, bump and exponential profiles, modes l in {0, 1, 2}, five lambdas.
std::vector<HarmonicTestFunction> test_matrix(long n);
std::vector<long double> test_lambdas();

NonnegativityReport nonnegativity_check(long n, const Rational& p, const Rational& alpha,
                                        const std::vector<HarmonicTestFunction>& functions,
                                        const std::vector<long double>& lambdas, long double tolerance = 1e-10L,
                                        bool with_fd = true);

}  // namespace tle
