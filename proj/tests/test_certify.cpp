#include <stdexcept>
#include <string>

#include <doctest.h>

#include "borsuk/certify.hpp"
#include "fixtures.hpp"

using namespace borsuk;

namespace {

const certify::Certificate& cert321() {
  static const auto cert =
      certify::build_certificate(321, certify::VerificationLevel::kQuick);
  return cert;
}

const certify::Certificate& cert322() {
  static const auto cert =
      certify::build_certificate(322, certify::VerificationLevel::kQuick);
  return cert;
}

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("parts_lower_bound is the ceiling and nothing else") {
    CHECK(certify::parts_lower_bound(116424, 350) == 333);
    CHECK(certify::parts_lower_bound(143136, 350) == 409);
    CHECK(certify::parts_lower_bound(350, 350) == 1);
    CHECK(certify::parts_lower_bound(351, 350) == 2);
    CHECK(certify::parts_lower_bound(1, 350) == 1);
    CHECK(certify::parts_lower_bound(0, 350) == 0);
    CHECK_THROWS_AS(certify::parts_lower_bound(10, 0), std::invalid_argument);

    // b is the unique integer with (b-1)*c < s <= b*c for s >= 1.
    TestRng rng(0xB0D5);
    int violations = 0;
    for (int t = 0; t < 5000; ++t) {
      const std::uint64_t s = 1 + rng.below(1000000);
      const std::uint64_t c = 1 + rng.below(1000);
      const std::uint64_t b = certify::parts_lower_bound(s, c);
      if (!((b - 1) * c < s && s <= b * c)) ++violations;
    }
    CHECK(violations == 0);
  }

  TEST_CASE("certificate for 321 carries the full verified record") {
    const auto& cert = cert321();
    CHECK(cert.claim_dimension == 321);
    CHECK(cert.subset_size == 116424);
    CHECK(cert.cap == 350);
    CHECK(cert.parts_lower_bound == 333);
    CHECK(cert.affine_dimension == 321);
    CHECK(cert.diameter_preserved);
    CHECK(cert.census_facts.shape2_count == 97152);
    CHECK(cert.census_facts.shape3_count == 98304);
    CHECK(cert.census_facts.shape4_count == 1104);
    CHECK(cert.census_facts.total_triple_edges == 235642176ull);
    CHECK(cert.census_facts.total_pair_edges == 39505536ull);
    CHECK(cert.census_facts.per_triple_count == 116424);
    CHECK(cert.census_facts.per_pair_count == 143136);
    CHECK(cert.code_facts.codeword_count == 4096);
    CHECK(cert.code_facts.octad_count == 759);
    CHECK(cert.code_facts.weight_distribution[12] == 2576);
    CHECK(cert.tool_version == certify::kToolVersion);
    CHECK(cert.elapsed > 0.0);

    const auto result = certify::verify_certificate(cert);
    CHECK(result.ok);
    CHECK(result.reasons.empty());
    CHECK(static_cast<bool>(result));
  }

  TEST_CASE("certificate for 322 certifies 409 parts") {
    const auto& cert = cert322();
    CHECK(cert.claim_dimension == 322);
    CHECK(cert.subset_size == 143136);
    CHECK(cert.parts_lower_bound == 409);
    CHECK(cert.affine_dimension == 322);
    CHECK(cert.diameter_preserved);
    CHECK(certify::verify_certificate(cert).ok);
  }

  TEST_CASE("certificates are deterministic up to timing") {
    const auto again = certify::build_certificate(321, certify::VerificationLevel::kQuick);
    CHECK(again == cert321());
    auto shifted = again;
    shifted.elapsed = again.elapsed + 1000.0;
    CHECK(shifted == again);
  }

  TEST_CASE("quick and full levels certify identical values") {
    const auto full = certify::build_certificate(321, certify::VerificationLevel::kFull);
    CHECK(full == cert321());
  }

  TEST_CASE("unsupported dimensions are rejected up front") {
    CHECK_THROWS_AS(certify::build_certificate(320, certify::VerificationLevel::kQuick),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify::build_certificate(24, certify::VerificationLevel::kFull),
                    std::invalid_argument);
  }

  TEST_CASE("tampered certificates fail with named reasons") {
    auto cert = cert321();

    SUBCASE("ceiling mismatch") {
      cert.parts_lower_bound = 332;
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      REQUIRE(r.reasons.size() == 1);
      CHECK(r.reasons[0] == "ceiling mismatch");
    }
    SUBCASE("dimension exceeds claim") {
      cert.affine_dimension = 322;
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      REQUIRE(r.reasons.size() == 1);
      CHECK(r.reasons[0] == "dimension exceeds claim");
    }
    SUBCASE("diameter flag is required") {
      cert.diameter_preserved = false;
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      CHECK(r.reasons[0] == "diameter not preserved");
    }
    SUBCASE("census totals are rechecked") {
      cert.census_facts.total_triple_edges += 1;
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      CHECK(r.reasons[0] == "triple census total mismatch");
    }
    SUBCASE("subset size must match the census") {
      cert.subset_size -= 350;
      cert.parts_lower_bound = certify::parts_lower_bound(cert.subset_size, cert.cap);
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      CHECK(r.reasons[0] == "subset size does not match the triple census");
    }
    SUBCASE("code facts are rechecked") {
      cert.code_facts.octad_count = 758;
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      CHECK(r.reasons[0] == "octad count mismatch");
    }
    SUBCASE("multiple defects accumulate reasons") {
      cert.claim_dimension = 320;
      cert.diameter_preserved = false;
      const auto r = certify::verify_certificate(cert);
      CHECK_FALSE(r.ok);
      CHECK(r.reasons.size() >= 2);
    }
  }

  TEST_CASE("json round-trip preserves every certified field") {
    const auto& cert = cert321();
    const std::string doc = certify::to_json_string(cert);
    CHECK(doc.find("\"subset_size\": 116424") != std::string::npos);
    CHECK(doc.find("\"parts_lower_bound\": 333") != std::string::npos);
    CHECK(doc.find("\"cap\": 350") != std::string::npos);

    const auto back = certify::certificate_from_json_string(doc);
    CHECK(back == cert);
    CHECK(certify::verify_certificate(back).ok);
  }

  TEST_CASE("malformed certificate documents are rejected") {
    CHECK_THROWS_WITH_AS(certify::certificate_from_json_string("{ not json"),
                         doctest::Contains("certificate parse"), std::runtime_error);

    std::string doc = certify::to_json_string(cert321());
    const auto pos = doc.find("\"cap\"");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 5, "\"cup\"");
    CHECK_THROWS_WITH_AS(certify::certificate_from_json_string(doc),
                         doctest::Contains("certificate parse"), std::runtime_error);

    std::string typed = certify::to_json_string(cert321());
    const auto spos = typed.find("\"subset_size\": 116424");
    REQUIRE(spos != std::string::npos);
    typed.replace(spos, 21, "\"subset_size\": \"ten\"");
    CHECK_THROWS_WITH_AS(certify::certificate_from_json_string(typed),
                         doctest::Contains("certificate parse"), std::runtime_error);
  }

  TEST_CASE("default-constructed certificates fail verification") {
    const auto r = certify::verify_certificate(certify::Certificate{});
    CHECK_FALSE(r.ok);
    CHECK(r.reasons.size() >= 3);
  }

  TEST_CASE("quick verification passes every suite") {
    const auto checks = certify::run_verification(certify::VerificationLevel::kQuick, 1);
    REQUIRE(checks.size() == 9);
    const char* expected_names[] = {
        "code.structure",     "lattice.enumeration",    "dots.rows",
        "census.totals",      "subsets.sizes",          "affine.dimensions",
        "diameter.preservation", "bounds.certificates", "heuristic.greedy"};
    for (std::size_t i = 0; i < checks.size(); ++i) {
      CAPTURE(checks[i].name);
      CAPTURE(checks[i].detail);
      CHECK(checks[i].name == expected_names[i]);
      CHECK(checks[i].ok);
      CHECK_FALSE(checks[i].detail.empty());
    }
  }

  TEST_CASE("report embeds both certificates and the check list") {
    const std::string doc = certify::report_json(certify::VerificationLevel::kQuick, 1);
    CHECK(doc.find("\"ok\": true") != std::string::npos);
    CHECK(doc.find("\"321\"") != std::string::npos);
    CHECK(doc.find("\"322\"") != std::string::npos);
    CHECK(doc.find("\"parts_lower_bound\": 333") != std::string::npos);
    CHECK(doc.find("\"parts_lower_bound\": 409") != std::string::npos);
    CHECK(doc.find("heuristic.greedy") != std::string::npos);
  }

  TEST_CASE("level names") {
    CHECK(certify::level_name(certify::VerificationLevel::kQuick) == "quick");
    CHECK(certify::level_name(certify::VerificationLevel::kFull) == "full");
  }
}
