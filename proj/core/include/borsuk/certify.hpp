#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "borsuk/census.hpp"
#include "borsuk/golay.hpp"
#include "borsuk/leech.hpp"

namespace borsuk::certify {

inline constexpr const char* kToolVersion = "borsuk 1.0.0";

// QUICK samples pairwise checks; FULL runs exhaustive pairwise scans. The
// certified counts, dimensions, and bounds are computed exactly either way.
enum class VerificationLevel { kQuick, kFull };

std::string level_name(VerificationLevel level);

struct CodeFacts {
  std::uint32_t codeword_count = 0;
  std::array<std::uint32_t, golay::kWordBits + 1> weight_distribution{};
  std::uint32_t octad_count = 0;

  bool operator==(const CodeFacts&) const = default;
};

struct CensusFacts {
  std::uint64_t shape2_count = 0;
  std::uint64_t shape3_count = 0;
  std::uint64_t shape4_count = 0;
  std::uint64_t total_triple_edges = 0;
  std::uint64_t total_pair_edges = 0;
  std::uint64_t per_triple_count = 0;
  std::uint64_t per_pair_count = 0;

  bool operator==(const CensusFacts&) const = default;
};

// Assembled verified record for one claim dimension. Valid only when
// diameter_preserved holds and affine_dimension <= claim_dimension;
// parts_lower_bound must equal ceil(subset_size / cap).
struct Certificate {
  int claim_dimension = 0;
  std::uint64_t subset_size = 0;
  std::uint64_t cap = 0;
  std::uint64_t parts_lower_bound = 0;
  int affine_dimension = 0;
  bool diameter_preserved = false;
  CensusFacts census_facts;
  CodeFacts code_facts;
  std::string tool_version;
  double elapsed = 0.0;  // seconds; excluded from equality
};

// Equality of certified content; the timing field does not participate.
bool operator==(const Certificate& a, const Certificate& b);

// ceil(size / cap). Throws std::invalid_argument when cap is zero.
std::uint64_t parts_lower_bound(std::uint64_t size, std::uint64_t cap);

// Runs the full pipeline (code, lattice, census, subset, affine dimension,
// diameter preservation, bound) for dim 321 or 322 and returns the assembled
// certificate. Any pipeline check failure throws std::runtime_error naming
// the failing stage; no partial certificates are produced.
Certificate build_certificate(int dim, VerificationLevel level);

struct VerifyResult {
  bool ok = false;
  std::vector<std::string> reasons;  // empty when ok

  explicit operator bool() const { return ok; }
};

// Re-checks the certificate's internal arithmetic (ceiling identity, claim
// validity conditions, census and code totals) without re-running the
// pipeline.
VerifyResult verify_certificate(const Certificate& cert);

std::string to_json_string(const Certificate& cert);

// Parses a certificate document; throws std::runtime_error on malformed
// input or missing fields.
Certificate certificate_from_json_string(const std::string& text);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Runs every invariant suite at the given level; seed drives the greedy
// heuristic checks. Failures are recorded, never thrown.
std::vector<CheckResult> run_verification(VerificationLevel level, std::uint64_t seed);

// Full facts dump: code, lattice, census, subsets, dimensions, diameter,
// bounds, and the check list for the given level.
std::string report_json(VerificationLevel level, std::uint64_t seed);

}  // namespace borsuk::certify
