#include "tle/certifier.hpp"
#include "tle/coefficients.hpp"
#include "tle/error.hpp"

#include <doctest.h>

using namespace tle;

namespace {

bool has_misprint(const Certificate& c, const std::string& adopted)
{
    if (!c.details.contains("misprints"))
        return false;
    for (const auto& m : c.details["misprints"])
        if (!m["adopted"].is_null() && m["adopted"].get<std::string>() == adopted)
            return true;
    return false;
}

}  // namespace

TEST_CASE("identity certificates")
{
    Polynomial x = Polynomial::identity("x");
    CHECK(certify_identity("sq", "", (x + 1).pow(2), x * x + 2 * x + 1).verified());
    auto bad = certify_identity("sq", "", (x + 1).pow(2), x * x + 1);
    CHECK(bad.status == Status::falsified);
    REQUIRE(bad.witness);
    CHECK(std::get<Rational>(*bad.witness) == Rational(1));
}

TEST_CASE("A2 factorization")
{
    auto c = verify_A2_factorization();
    CHECK(c.verified());
    CHECK(c.details["n_checked"] == 54);
    CHECK(c.details["A2(n=21,k=0)"] == "2592/1");

    A2Options o;
    o.k3_constant = 35;
    auto t = verify_A2_factorization(o);
    CHECK(t.status == Status::falsified);
    CHECK(t.details["failed_n"] == 7);
    REQUIRE(t.witness);
    Rational k = std::get<Rational>(*t.witness);
    CHECK(t.details["witness_k"] == k.str());
    CHECK(!k.is_zero());
}

TEST_CASE("d0 identity readings")
{
    auto c = verify_d0_identity();
    CHECK(c.verified());
    CHECK(c.details["readings"]["printed_d2_squared"]["status"] == "falsified");
    CHECK(c.details["readings"]["d2_unsquared"]["status"] == "verified");
    CHECK(has_misprint(c, "exponent slip: d2^2 -> d2"));
}

TEST_CASE("lemma 8.1")
{
    auto c = verify_lemma_8_1();
    CHECK(c.verified());
    for (const auto& x : c.details["checks"])
        CHECK_MESSAGE(x["status"] == "verified", x.dump());
}

TEST_CASE("lemma 8.3")
{
    auto c = verify_lemma_8_3(120, 2000);
    CHECK(c.verified());
    bool saw_810 = false, saw_x2 = false;
    for (const auto& x : c.details["checks"]) {
        CHECK_MESSAGE(x["status"] == "verified", x.dump());
        saw_810 |= x["claim_id"] == "eq-8.10-positive";
        saw_x2 |= x["claim_id"] == "x2-at-15";
    }
    CHECK(saw_810);
    CHECK(saw_x2);
    CHECK(has_misprint(c, "constant slip: -32 -> -96"));
}

TEST_CASE("lemma 8.4 and 8.5")
{
    auto c = verify_lemma_8_4_8_5(12, 60);
    CHECK(c.verified());
    CHECK(has_misprint(c, "exponent slip: -3k^2 -> -3k^3"));
    CHECK(has_misprint(c, "constant slip: 3 -> 12"));
    CHECK(has_misprint(c, "threshold t >= 6.04"));

    std::map<std::string, nlohmann::ordered_json> th;
    for (const auto& t : c.details["thresholds"])
        th[t["claim_id"].get<std::string>()] = t;
    CHECK(th["c1-threshold-printed-constant"]["status"] == "verified");
    CHECK(th["c1-threshold-exact-constant"]["status"] == "verified");
    CHECK(th["c1-threshold-a-nonpos-printed"]["status"] == "falsified");
    CHECK(th["c1-threshold-a-nonpos-corrected"]["status"] == "verified");
    CHECK(th["c2-threshold-a-nonneg"]["details"]["printed_status"] == "falsified");
    CHECK(th["c2-threshold-a-nonneg"]["status"] == "verified");
    CHECK(th["c2-threshold-a-nonpos"]["status"] == "verified");

    // single-n spot checks on the band
    Rational s40 = Rational(6324556, 1000000);
    CHECK(certify_sign(c1_in_k(40), Domain::closed(16 - s40, 17), SignClaim::positive).verified());
    Rational s12 = Rational(3464102, 1000000);
    CHECK(certify_sign(c2_in_k(12), Domain::closed(0, 3), SignClaim::positive).verified());
    CHECK(certify_sign(c2_in_k(12), Domain::closed(2 - s12, 2 + s12), SignClaim::positive).verified());
    CHECK(certify_sign(c2_in_k(12), Domain::closed(0, 40), SignClaim::positive).status == Status::falsified);
}

TEST_CASE("lemma 8.6 with sharpness control")
{
    auto c = verify_lemma_8_6(30);
    CHECK(c.verified());
    for (const auto& s : c.details["sharpness"])
        CHECK(s["status"] == "verified");

    Interval r1 = r1_enclosure(30, Rational(1, 1000000000));
    CHECK(c0_in_k(30)(r1.lo() - Rational(1, 1000)).sign() < 0);
    CHECK(c0_in_k(30)(r1.hi() + Rational(1, 1000)).sign() > 0);
    CHECK(certify_sign(c0_in_k(30), Domain::open(r1.lo() - Rational(1, 100), 12), SignClaim::positive).status ==
          Status::falsified);
}

TEST_CASE("lemma 7.1 and 7.2")
{
    auto c = verify_lemma_7_1_7_2(7, 40);
    CHECK(c.verified());
    auto windows = c.details["A1+12_negative_windows"];
    REQUIRE(windows.size() == 20);
    CHECK(windows[0]["n"] == 21);
    CHECK(std::stod(windows[0]["k_m"]["approx"].get<std::string>()) == doctest::Approx(0.0535243235474).epsilon(1e-9));
}

TEST_CASE("alpha split")
{
    auto a = alpha_split_detail(21, Rational::parse("0.9342"));
    CHECK(a.certificate.verified());
    CHECK(a.gate12);
    CHECK(a.min_A2.lo() > Rational(0));
    REQUIRE(a.window_roots.size() == 4);
    CHECK(a.window_roots[0].lo() < Rational::parse("-0.5941721095"));
    CHECK(a.window_roots[0].hi() > Rational::parse("-0.5941721096"));
    CHECK(a.window_roots[1].lo() < Rational::parse("4.4829880662"));
    CHECK(a.window_roots[1].hi() > Rational::parse("4.4829880661"));
    CHECK(a.window_roots[3].lo() < Rational::parse("15.5941721096"));
    CHECK(a.window_roots[3].hi() > Rational::parse("15.5941721095"));
    REQUIRE(a.a1_roots.size() == 1);

    auto b = alpha_split_detail(21, Rational::parse("0.99"));
    CHECK(b.certificate.status == Status::falsified);
    CHECK_FALSE(b.gate12);
    REQUIRE(b.certificate.witness);

    CHECK(alpha_split(15, Rational(1, 2)).verified());
    CHECK(alpha_split(12, Rational(1, 2)).verified());
    CHECK_THROWS_AS(alpha_split(21, Rational(1)), Error);

    Rational star = critical_alpha(21);
    CHECK(star > Rational::parse("0.9342"));
    CHECK(star < Rational::parse("0.9342") + Rational(1, 10000));
    auto at_star = alpha_split_detail(21, star);
    CHECK(at_star.certificate.verified());
    CHECK(at_star.window_roots[0].lo() < Rational::parse("-0.5941782055"));
    CHECK(at_star.window_roots[1].hi() > Rational::parse("4.4833348432"));
    for (long n = 22; n <= 26; ++n)
        CHECK(alpha_split(n, critical_alpha(n)).verified());
}

TEST_CASE("lemma 4.1")
{
    CHECK(verify_lemma_4_1(12, 12).verified());
    CHECK(verify_lemma_4_1(20, 20).verified());
    auto c = verify_lemma_4_1(100, 100);
    CHECK(c.verified());
    CHECK(c.details["extension_beyond_paper_scan"] == true);
}

TEST_CASE("claim ids")
{
    CHECK(resolve_claim_id("8.3") == "lemma-8.3");
    CHECK(resolve_claim_id("lemma-8.5") == "lemma-8.4-8.5");
    CHECK(resolve_claim_id("7.3") == "a2-factorization");
    CHECK(resolve_claim_id("alpha-split") == "alpha-split");
    CHECK_THROWS_AS(resolve_claim_id("9.9"), Error);
}

TEST_CASE("bundle is deterministic and tamper-sensitive")
{
    CertifyConfig cfg;
    cfg.n_max = 30;
    cfg.lemma_8_3_n_max = 40;
    cfg.lemma_8_3_sample_max = 200;
    cfg.band_n_max = 40;
    cfg.lemma_8_6_n_max = 20;
    cfg.lemma_4_1_n_max = 30;
    cfg.chain_n_max = 30;
    auto a = certificate_bundle(run_all(cfg), cfg).dump();
    auto b = certificate_bundle(run_all(cfg), cfg).dump();
    CHECK(a == b);
    auto j = nlohmann::ordered_json::parse(a);
    CHECK(j["schema_version"] == 1);
    CHECK(j["summary"]["status"] == "verified");
    CHECK(j["certificates"].size() == claim_ids().size());
    CHECK(j["misprints"].size() >= 5);

    cfg.only = "a2-factorization";
    cfg.tamper = {"a2-k3"};
    auto t = certificate_bundle(run_all(cfg), cfg);
    CHECK(t["summary"]["status"] == "falsified");
    CHECK(t["certificates"].size() == 1);
}
