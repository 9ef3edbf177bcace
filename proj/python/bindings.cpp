#include "tle/certifier.hpp"
#include "tle/coefficients.hpp"
#include "tle/energy.hpp"
#include "tle/error.hpp"
#include "tle/exponents.hpp"
#include "tle/radial.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace tle;

namespace {

Params params(long n, const std::optional<std::string>& p, const std::optional<std::string>& k)
{
    if (p.has_value() == k.has_value())
        throw Error(ErrorKind::usage, "give exactly one of p and k");
    return p ? Params::from_p(n, Rational::parse(*p)) : Params::from_k(n, Rational::parse(*k));
}

HarmonicTestFunction profile(long n, const std::string& kind, unsigned l, const Params& pr)
{
    if (kind == "gaussian")
        return HarmonicTestFunction::gaussian(n, l, 1.0L);
    if (kind == "bump" || kind == "polynomial-bump")
        return HarmonicTestFunction::polynomial_bump(n, l, {1.0L, 0.3L}, 3.0L);
    if (kind == "exponential" || kind == "exponential-decay")
        return HarmonicTestFunction::exponential_decay(n, l, 1.5L);
    if (kind == "homogeneous")
        return HarmonicTestFunction::homogeneous(n, l, pr.k.to_long_double());
    throw Error(ErrorKind::usage, "unknown profile '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_tle, m)
{
    py::register_exception<Error>(m, "TleError", PyExc_ValueError);

    m.def("exponent_report", [](long n) { return exponent_chain_report(n).to_json().dump(); }, py::arg("n"));

    m.def(
        "coefficients",
        [](long n, std::optional<std::string> p, std::optional<std::string> k) {
            return coefficient_set(params(n, p, k)).to_json().dump();
        },
        py::arg("n"), py::arg("p") = py::none(), py::arg("k") = py::none());

    m.def(
        "singular_stability",
        [](long n, std::optional<std::string> p, std::optional<std::string> k) {
            return to_string(singular_stability(params(n, p, k)));
        },
        py::arg("n"), py::arg("p") = py::none(), py::arg("k") = py::none());

    m.def(
        "certify",
        [](std::optional<std::string> lemma, std::optional<long> n_max) {
            CertifyConfig cfg;
            if (lemma)
                cfg.only = resolve_claim_id(*lemma);
            if (n_max)
                cfg.n_max = cfg.lemma_8_3_n_max = cfg.band_n_max = cfg.lemma_8_6_n_max = cfg.lemma_4_1_n_max =
                    cfg.chain_n_max = *n_max;
            py::gil_scoped_release release;
            return certificate_bundle(run_all(cfg), cfg).dump();
        },
        py::arg("lemma") = py::none(), py::arg("n_max") = py::none());

    m.def(
        "alpha_split", [](long n, const std::string& alpha) { return alpha_split(n, Rational::parse(alpha)).to_json().dump(); },
        py::arg("n"), py::arg("alpha"));

    m.def(
        "fd_check",
        [](long n, const std::string& p, const std::string& kind, unsigned lmode, double lam, const std::string& variant) {
            Params pr = Params::from_p(n, Rational::parse(p));
            EnergyModel em(profile(n, kind, lmode, pr), pr.p);
            return fd_check(em, lam, FormulaVariant::parse(variant)).to_json().dump();
        },
        py::arg("n"), py::arg("p"), py::arg("profile") = "gaussian", py::arg("lmode") = 0, py::arg("lam") = 1.0,
        py::arg("variant") = "eq_2_3");

    m.def(
        "radial_solve",
        [](long n, const std::string& p, double u0, double v0, double w0, double rmax, double tol) {
            RadialOptions opt;
            opt.tol = tol;
            return radial_ivp_solve(n, Rational::parse(p), u0, v0, w0, rmax, opt).to_json().dump();
        },
        py::arg("n"), py::arg("p"), py::arg("u0") = 1.0, py::arg("v0") = 0.0, py::arg("w0") = 0.0,
        py::arg("rmax") = 2.0, py::arg("tol") = 1e-10);

    m.def(
        "pohozaev",
        [](const std::string& profile_json, double R) {
            auto prof = RadialProfile::from_json(nlohmann::ordered_json::parse(profile_json));
            return pohozaev_residual(prof, R).to_json().dump();
        },
        py::arg("profile_json"), py::arg("R"));
}
