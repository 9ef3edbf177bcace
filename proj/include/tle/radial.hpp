#pragma once

#include "tle/rational.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace tle {

// State (u, u', v, v', w, w', I) with v = Delta u, w = Delta^2 u and
// I(r) = int_0^r |u|^{p+1} s^{n-1} ds (measured from the inner radius for annulus starts).
using RadialState = std::array<long double, 7>;

struct RadialOptions {
    long double r_eps = 1e-3L;
    long double tol = 1e-10L;
    long double output_step = 1e-2L;
    long double blow_up_bound = 1e30L;
    bool measure_defect = true;
};

struct RadialProfile {
    long n = 0;
    Rational p;
    long double u0 = 0, v0 = 0, w0 = 0;
    long double r_start = 0;
    bool regular_start = true;
    int taylor_order = 4;
    long double tol = 0;
    bool blow_up = false;
    long double blow_up_radius = 0;
    // largest mismatch between a stored node and a re-integration from the previous node at tol/100
    long double ode_defect = 0;
    std::vector<long double> r;
    std::vector<RadialState> y;

    long double r_max() const { return r.empty() ? 0 : r.back(); }
    nlohmann::ordered_json to_json() const;
    static RadialProfile from_json(const nlohmann::ordered_json& j);
};

// (-Delta)^3 u = |u|^{p-1} u with u(0) = u0, Delta u(0) = v0, Delta^2 u(0) = w0.
RadialProfile radial_ivp_solve(long n, const Rational& p, long double u0, long double v0, long double w0,
                               long double r_max, const RadialOptions& opt = {});

// Integrate from an arbitrary state at r0 > 0 (I is reset to 0 there).
RadialProfile radial_solve_from(long n, const Rational& p, long double r0, const RadialState& y0, long double r_max,
                                const RadialOptions& opt = {});

// State of the profile at radius R, re-integrated from the nearest stored node below R.
RadialState radial_state_at(const RadialProfile& prof, long double R, long double tol);

RadialProfile scale(const RadialProfile& prof, long double lambda);

// Closed-form singular solution K r^{-k}, K^{p-1} = k0(n, k), and its state at r.
long double singular_amplitude_value(long n, const Rational& p);
RadialState singular_state(long n, const Rational& p, long double r);

struct SingularAnnulusReport {
    long double r0 = 0, r1 = 0, tol = 0;
    long double max_relative_error = 0;
    long double amplitude = 0;
    bool preserved = false;
    nlohmann::ordered_json to_json() const;
};

SingularAnnulusReport singular_annulus_check(long n, const Rational& p, long double r0, long double r1,
                                             long double tol = 1e-10L);

struct RefinementReport {
    long double tol = 0, max_difference = 0, bound = 0;
    bool consistent = false;
    nlohmann::ordered_json to_json() const;
};

// Solve at tol and tol/2 and compare the states at r_max.
RefinementReport radial_refinement_check(long n, const Rational& p, long double u0, long double v0, long double w0,
                                         long double r_max, long double tol);

struct PohozaevReport {
    long double R = 0;
    long double lhs = 0, rhs = 0;
    long double residual = 0, relative = 0;
    long double inner_correction = 0;
    long double printed_relative = 0;
    nlohmann::ordered_json to_json() const;
};

// B3 in radial form, derived so that d/dR (R^{n-1} B3) = ((n-6)/2 - n/(p+1)) R^{n-1} |u|^{p+1}.
long double pohozaev_B3(long n, long double p, long double R, const RadialState& s);
// The boundary form as displayed, for comparison.
long double pohozaev_B3_printed(long n, long double p, long double R, const RadialState& s);

PohozaevReport pohozaev_residual(const RadialProfile& prof, long double R);

}  // namespace tle
