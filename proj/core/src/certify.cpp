#include "borsuk/certify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "borsuk/diameter.hpp"
#include "borsuk/embedding.hpp"

namespace borsuk::certify {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kExpectedTripleEdges = 235642176ull;
constexpr std::uint64_t kExpectedPairEdges = 39505536ull;
constexpr std::uint64_t kExpectedTripleSubsetSize = 116424ull;
constexpr std::uint64_t kExpectedPairSubsetSize = 143136ull;

constexpr std::array<std::pair<int, std::uint32_t>, 5> kExpectedWeights = {
    {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}}};

// Per-base-point dot counts against the full minimal-vector set, the base
// point included; index order matches diameter::DotHistogram.
constexpr std::array<std::uint64_t, 7> kExpectedRowCounts = {1,     4600,  47104, 93150,
                                                             47104, 4600,  1};

constexpr std::size_t kQuickSampleRows = 128;

[[noreturn]] void stage_fail(const std::string& stage, const std::string& msg) {
  throw std::runtime_error("build_certificate: stage '" + stage + "' failed: " + msg);
}

void stage_check(bool ok, const char* stage, const std::string& msg) {
  if (!ok) stage_fail(stage, msg);
}

// want distinct indices spread evenly over [0, n).
std::vector<std::size_t> spread_indices(std::size_t n, std::size_t want) {
  want = std::min(want, n);
  std::vector<std::size_t> idx(want);
  for (std::size_t i = 0; i < want; ++i) idx[i] = i * n / want;
  return idx;
}

CodeFacts make_code_facts(const golay::GolayCode& code) {
  CodeFacts facts;
  facts.codeword_count = static_cast<std::uint32_t>(code.codewords.size());
  facts.weight_distribution = golay::weight_histogram(code);
  facts.octad_count = facts.weight_distribution[8];
  return facts;
}

bool weights_match_expected(const std::array<std::uint32_t, golay::kWordBits + 1>& wd) {
  for (int w = 0; w <= golay::kWordBits; ++w) {
    std::uint32_t expected = 0;
    for (const auto& [ew, ec] : kExpectedWeights) {
      if (ew == w) expected = ec;
    }
    if (wd[static_cast<std::size_t>(w)] != expected) return false;
  }
  return true;
}

struct ShapeCounts {
  std::uint64_t shape2 = 0, shape3 = 0, shape4 = 0;
};

ShapeCounts count_shapes(const leech::PointSet& set) {
  ShapeCounts c;
  for (const auto& p : set.points) {
    switch (leech::shape_of(p)) {
      case leech::ShapeClass::kShape2: ++c.shape2; break;
      case leech::ShapeClass::kShape3: ++c.shape3; break;
      case leech::ShapeClass::kShape4: ++c.shape4; break;
    }
  }
  return c;
}

// Common value of a uniform census table; nullopt when not uniform.
template <std::size_t N>
std::optional<std::uint32_t> uniform_value(const std::array<std::uint32_t, N>& counts) {
  for (std::size_t i = 1; i < N; ++i) {
    if (counts[i] != counts[0]) return std::nullopt;
  }
  return counts[0];
}

void check_row_against_oracle(const leech::LatticePoint& base, const leech::PointSet& set,
                              const char* stage) {
  const diameter::DotHistogram h = diameter::row_histogram(base, set);
  if (h.counts != kExpectedRowCounts) {
    stage_fail(stage, "per-point dot histogram deviates from the fixed row profile");
  }
}

std::uint64_t u64_field(const ordered_json& j, const char* name) {
  const auto& v = j.at(name);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw std::runtime_error(std::string("field '") + name + "' is not an integer");
  }
  const long long x = v.get<long long>();
  if (x < 0) throw std::runtime_error(std::string("field '") + name + "' is negative");
  return static_cast<std::uint64_t>(x);
}

int int_field(const ordered_json& j, const char* name) {
  const auto& v = j.at(name);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw std::runtime_error(std::string("field '") + name + "' is not an integer");
  }
  return v.get<int>();
}

}  // namespace

std::string level_name(VerificationLevel level) {
  return level == VerificationLevel::kQuick ? "quick" : "full";
}

bool operator==(const Certificate& a, const Certificate& b) {
  return a.claim_dimension == b.claim_dimension && a.subset_size == b.subset_size &&
         a.cap == b.cap && a.parts_lower_bound == b.parts_lower_bound &&
         a.affine_dimension == b.affine_dimension &&
         a.diameter_preserved == b.diameter_preserved && a.census_facts == b.census_facts &&
         a.code_facts == b.code_facts && a.tool_version == b.tool_version;
}

std::uint64_t parts_lower_bound(std::uint64_t size, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("parts_lower_bound: cap must be positive");
  if (size == 0) return 0;
  return 1 + (size - 1) / cap;
}

Certificate build_certificate(int dim, VerificationLevel level) {
  if (dim != 321 && dim != 322) {
    throw std::invalid_argument("build_certificate: claim dimension must be 321 or 322");
  }
  const auto t0 = std::chrono::steady_clock::now();

  Certificate cert;
  cert.claim_dimension = dim;
  cert.cap = diameter::kSmallerDiameterCap;
  cert.tool_version = kToolVersion;

  golay::GolayCode code;
  try {
    code = golay::build_code();
  } catch (const std::exception& e) {
    stage_fail("code", e.what());
  }
  cert.code_facts = make_code_facts(code);
  stage_check(cert.code_facts.codeword_count == golay::kCodewordCount, "code",
              "codeword count is not 4096");
  stage_check(weights_match_expected(cert.code_facts.weight_distribution), "code",
              "weight distribution is not {0:1, 8:759, 12:2576, 16:759, 24:1}");

  leech::PointSet set;
  try {
    set = leech::enumerate_min_vectors(code);
  } catch (const std::exception& e) {
    stage_fail("lattice", e.what());
  }
  stage_check(set.size() == leech::kMinVectorCount, "lattice",
              "minimal-vector count is not 196560");
  stage_check(set.closed_under_negation, "lattice", "set is not closed under negation");
  const ShapeCounts shapes = count_shapes(set);
  stage_check(shapes.shape2 == leech::kShape2Count && shapes.shape3 == leech::kShape3Count &&
                  shapes.shape4 == leech::kShape4Count,
              "lattice", "shape counts are not 97152 / 98304 / 1104");
  cert.census_facts.shape2_count = shapes.shape2;
  cert.census_facts.shape3_count = shapes.shape3;
  cert.census_facts.shape4_count = shapes.shape4;

  const census::IncidenceCensus cen = census::build_census(set);
  const auto per_triple = uniform_value(cen.triple_counts);
  const auto per_pair = uniform_value(cen.pair_counts);
  stage_check(per_triple.has_value(), "census", "triple counts are not uniform");
  stage_check(per_pair.has_value(), "census", "pair counts are not uniform");
  stage_check(cen.total_triple_edges ==
                  static_cast<std::uint64_t>(*per_triple) * census::kTripleCount,
              "census", "triple edge total does not match the uniform count");
  stage_check(cen.total_pair_edges == static_cast<std::uint64_t>(*per_pair) * census::kPairCount,
              "census", "pair edge total does not match the uniform count");
  cert.census_facts.total_triple_edges = cen.total_triple_edges;
  cert.census_facts.total_pair_edges = cen.total_pair_edges;
  cert.census_facts.per_triple_count = *per_triple;
  cert.census_facts.per_pair_count = *per_pair;

  leech::PointSet subset;
  std::vector<embedding::Constraint> constraints;
  if (dim == 321) {
    const census::CoordinateTriple t = census::select_best_triple(cen);
    subset = census::subset_equal_abs(set, t);
    constraints = embedding::constraints_equal_abs(t);
    stage_check(subset.size() == kExpectedTripleSubsetSize, "subset",
                "triple subset size is not 116424");
  } else {
    const census::CoordinatePair pr = census::select_best_pair(cen);
    subset = census::subset_equal_abs(set, pr);
    constraints = embedding::constraints_equal_abs(pr);
    stage_check(subset.size() == kExpectedPairSubsetSize, "subset",
                "pair subset size is not 143136");
  }
  stage_check(subset.size() == (dim == 321 ? cert.census_facts.per_triple_count
                                           : cert.census_facts.per_pair_count),
              "subset", "subset size disagrees with the census count");
  cert.subset_size = subset.size();

  try {
    cert.affine_dimension = embedding::affine_dimension(subset, constraints);
  } catch (const std::exception& e) {
    stage_fail("affine dimension", e.what());
  }
  stage_check(cert.affine_dimension <= dim, "affine dimension",
              "affine dimension exceeds the claim dimension");

  // The full-set diameter; the early exit at the admissible maximum makes
  // this exact at every level.
  std::int64_t full_diameter = 0;
  try {
    full_diameter = diameter::squared_diameter(set);
  } catch (const std::exception& e) {
    stage_fail("diameter", e.what());
  }
  stage_check(full_diameter == embedding::kMaxSquaredDistanceScaled, "diameter",
              "full-set squared diameter is not 1280/640");
  try {
    if (level == VerificationLevel::kFull) {
      const diameter::DotHistogram h = diameter::pair_histogram(subset);
      stage_check(h.total() == subset.size() * (subset.size() - 1) / 2, "diameter",
                  "pairwise scan lost pairs");
      stage_check(h.at(0) + h.at(-8) > 0, "diameter", "no diameter witness in the subset");
    } else {
      for (std::size_t idx : spread_indices(subset.size(), kQuickSampleRows)) {
        // Throws on any inadmissible dot.
        (void)diameter::row_histogram(subset.points[idx], subset);
      }
      stage_check(diameter::is_diameter_preserving(subset, full_diameter), "diameter",
                  "no diameter witness in the subset");
    }
  } catch (const std::exception& e) {
    stage_fail("diameter", e.what());
  }
  cert.diameter_preserved = true;

  cert.parts_lower_bound = parts_lower_bound(cert.subset_size, cert.cap);

  const VerifyResult check = verify_certificate(cert);
  if (!check.ok) {
    std::string joined;
    for (const auto& r : check.reasons) {
      if (!joined.empty()) joined += "; ";
      joined += r;
    }
    stage_fail("assemble", "certificate fails self-verification: " + joined);
  }

  cert.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cert;
}

VerifyResult verify_certificate(const Certificate& cert) {
  VerifyResult result;
  auto flag = [&result](const std::string& reason) { result.reasons.push_back(reason); };

  if (cert.claim_dimension != 321 && cert.claim_dimension != 322) {
    flag("unsupported claim dimension");
  }
  if (cert.cap == 0) {
    flag("cap is zero");
  } else if (parts_lower_bound(cert.subset_size, cert.cap) != cert.parts_lower_bound) {
    flag("ceiling mismatch");
  }
  if (cert.affine_dimension > cert.claim_dimension) flag("dimension exceeds claim");
  if (cert.affine_dimension < 0) flag("negative affine dimension");
  if (!cert.diameter_preserved) flag("diameter not preserved");
  if (cert.subset_size < 2) flag("subset too small to carry a diameter");

  const CensusFacts& cf = cert.census_facts;
  if (cf.shape2_count + cf.shape3_count + cf.shape4_count != leech::kMinVectorCount) {
    flag("shape counts do not sum to the minimal-vector count");
  }
  if (cf.total_triple_edges != cf.per_triple_count * census::kTripleCount) {
    flag("triple census total mismatch");
  }
  if (cf.total_pair_edges != cf.per_pair_count * census::kPairCount) {
    flag("pair census total mismatch");
  }
  if (cert.claim_dimension == 321 && cert.subset_size != cf.per_triple_count) {
    flag("subset size does not match the triple census");
  }
  if (cert.claim_dimension == 322 && cert.subset_size != cf.per_pair_count) {
    flag("subset size does not match the pair census");
  }

  const CodeFacts& kf = cert.code_facts;
  if (kf.codeword_count != golay::kCodewordCount) flag("codeword count mismatch");
  std::uint64_t weight_sum = 0;
  for (auto c : kf.weight_distribution) weight_sum += c;
  if (weight_sum != kf.codeword_count) {
    flag("weight distribution does not sum to the codeword count");
  }
  if (kf.weight_distribution[8] != kf.octad_count) flag("octad count mismatch");

  result.ok = result.reasons.empty();
  return result;
}

std::string to_json_string(const Certificate& cert) {
  ordered_json j;
  j["claim_dimension"] = cert.claim_dimension;
  j["subset_size"] = cert.subset_size;
  j["cap"] = cert.cap;
  j["parts_lower_bound"] = cert.parts_lower_bound;
  j["affine_dimension"] = cert.affine_dimension;
  j["diameter_preserved"] = cert.diameter_preserved;

  ordered_json cf;
  cf["shape2_count"] = cert.census_facts.shape2_count;
  cf["shape3_count"] = cert.census_facts.shape3_count;
  cf["shape4_count"] = cert.census_facts.shape4_count;
  cf["total_triple_edges"] = cert.census_facts.total_triple_edges;
  cf["total_pair_edges"] = cert.census_facts.total_pair_edges;
  cf["per_triple_count"] = cert.census_facts.per_triple_count;
  cf["per_pair_count"] = cert.census_facts.per_pair_count;
  j["census_facts"] = cf;

  ordered_json kf;
  kf["codeword_count"] = cert.code_facts.codeword_count;
  ordered_json wd = ordered_json::object();
  for (int w = 0; w <= golay::kWordBits; ++w) {
    const auto c = cert.code_facts.weight_distribution[static_cast<std::size_t>(w)];
    if (c != 0) wd[std::to_string(w)] = c;
  }
  kf["weight_distribution"] = wd;
  kf["octad_count"] = cert.code_facts.octad_count;
  j["code_facts"] = kf;

  j["tool_version"] = cert.tool_version;
  j["elapsed"] = cert.elapsed;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json_string(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    Certificate cert;
    cert.claim_dimension = int_field(j, "claim_dimension");
    cert.subset_size = u64_field(j, "subset_size");
    cert.cap = u64_field(j, "cap");
    cert.parts_lower_bound = u64_field(j, "parts_lower_bound");
    cert.affine_dimension = int_field(j, "affine_dimension");
    const auto& dp = j.at("diameter_preserved");
    if (!dp.is_boolean()) throw std::runtime_error("field 'diameter_preserved' is not boolean");
    cert.diameter_preserved = dp.get<bool>();

    const auto& cf = j.at("census_facts");
    cert.census_facts.shape2_count = u64_field(cf, "shape2_count");
    cert.census_facts.shape3_count = u64_field(cf, "shape3_count");
    cert.census_facts.shape4_count = u64_field(cf, "shape4_count");
    cert.census_facts.total_triple_edges = u64_field(cf, "total_triple_edges");
    cert.census_facts.total_pair_edges = u64_field(cf, "total_pair_edges");
    cert.census_facts.per_triple_count = u64_field(cf, "per_triple_count");
    cert.census_facts.per_pair_count = u64_field(cf, "per_pair_count");

    const auto& kf = j.at("code_facts");
    cert.code_facts.codeword_count =
        static_cast<std::uint32_t>(u64_field(kf, "codeword_count"));
    const auto& wd = kf.at("weight_distribution");
    if (!wd.is_object()) throw std::runtime_error("field 'weight_distribution' is not a map");
    for (const auto& [key, value] : wd.items()) {
      int w = -1;
      try {
        std::size_t used = 0;
        w = std::stoi(key, &used);
        if (used != key.size()) w = -1;
      } catch (...) {
        w = -1;
      }
      if (w < 0 || w > golay::kWordBits) {
        throw std::runtime_error("weight_distribution key '" + key + "' is not a weight");
      }
      if (!value.is_number_integer() && !value.is_number_unsigned()) {
        throw std::runtime_error("weight_distribution count is not an integer");
      }
      cert.code_facts.weight_distribution[static_cast<std::size_t>(w)] =
          value.get<std::uint32_t>();
    }
    cert.code_facts.octad_count = static_cast<std::uint32_t>(u64_field(kf, "octad_count"));

    const auto& tv = j.at("tool_version");
    if (!tv.is_string()) throw std::runtime_error("field 'tool_version' is not a string");
    cert.tool_version = tv.get<std::string>();

    const auto& el = j.at("elapsed");
    if (!el.is_number()) throw std::runtime_error("field 'elapsed' is not a number");
    cert.elapsed = el.get<double>();
    return cert;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("certificate parse: ") + e.what());
  }
}

namespace {

// Shared pipeline state for the verification suites; stages that failed to
// build leave empty optionals and dependent checks report the gap.
struct SuiteState {
  std::optional<golay::GolayCode> code;
  std::optional<leech::PointSet> set;
  std::optional<census::IncidenceCensus> cen;
  std::optional<leech::PointSet> triple_subset;
  std::optional<leech::PointSet> pair_subset;
  std::optional<leech::PointSet> first_pair_subset;
  census::CoordinateTriple triple;
  census::CoordinatePair pair;
};

const leech::PointSet& need_set(const SuiteState& st) {
  if (!st.set) throw std::runtime_error("skipped: lattice enumeration unavailable");
  return *st.set;
}

// Combinatorial rank of a sorted 5-subset of {0..23}.
std::size_t rank5(const std::array<int, 5>& s) {
  static const auto binom = [] {
    std::array<std::array<std::size_t, 6>, 25> b{};
    for (int n = 0; n < 25; ++n) {
      b[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= 5 && k <= n; ++k) {
        const auto nn = static_cast<std::size_t>(n);
        b[nn][static_cast<std::size_t>(k)] =
            b[nn - 1][static_cast<std::size_t>(k - 1)] +
            (k <= n - 1 ? b[nn - 1][static_cast<std::size_t>(k)] : 0);
      }
    }
    return b;
  }();
  std::size_t r = 0;
  for (int t = 0; t < 5; ++t) {
    r += binom[static_cast<std::size_t>(s[static_cast<std::size_t>(t)])]
              [static_cast<std::size_t>(t + 1)];
  }
  return r;
}

std::string check_code_structure(SuiteState& st) {
  st.code = golay::build_code();
  const auto& code = *st.code;
  if (code.codewords.size() != golay::kCodewordCount) {
    throw std::runtime_error("codeword count is not 4096");
  }
  const auto wd = golay::weight_histogram(code);
  if (!weights_match_expected(wd)) {
    throw std::runtime_error("weight distribution is not {0:1, 8:759, 12:2576, 16:759, 24:1}");
  }
  const auto oct = golay::octads(code);
  if (oct.size() != golay::kOctadCount) throw std::runtime_error("octad count is not 759");

  // Steiner coverage: the 759 octads contain each 5-subset exactly once, so
  // the 759 * 56 ranks must mark all 42504 slots without collision.
  std::vector<std::uint8_t> seen(42504, 0);
  for (golay::Mask o : oct) {
    std::array<int, 8> pos{};
    int t = 0;
    for (int i = 0; i < golay::kWordBits; ++i) {
      if (o & (1u << i)) pos[static_cast<std::size_t>(t++)] = i;
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int c = b + 1; c < 6; ++c)
          for (int d = c + 1; d < 7; ++d)
            for (int e = d + 1; e < 8; ++e) {
              const std::array<int, 5> five = {pos[static_cast<std::size_t>(a)],
                                               pos[static_cast<std::size_t>(b)],
                                               pos[static_cast<std::size_t>(c)],
                                               pos[static_cast<std::size_t>(d)],
                                               pos[static_cast<std::size_t>(e)]};
              auto& slot = seen[rank5(five)];
              if (slot) throw std::runtime_error("a 5-subset lies in two octads");
              slot = 1;
            }
  }
  for (auto s : seen) {
    if (!s) throw std::runtime_error("a 5-subset lies in no octad");
  }
  return "4096 codewords, 759 octads, S(5,8,24) coverage verified";
}

std::string check_lattice_enumeration(SuiteState& st, VerificationLevel level) {
  if (!st.code) throw std::runtime_error("skipped: code unavailable");
  st.set = leech::enumerate_min_vectors(*st.code);
  const auto& set = *st.set;
  if (set.size() != leech::kMinVectorCount) {
    throw std::runtime_error("minimal-vector count is not 196560");
  }
  const ShapeCounts shapes = count_shapes(set);
  if (shapes.shape2 != leech::kShape2Count || shapes.shape3 != leech::kShape3Count ||
      shapes.shape4 != leech::kShape4Count) {
    throw std::runtime_error("shape counts are not 97152 / 98304 / 1104");
  }
  if (!set.closed_under_negation) throw std::runtime_error("set is not closed under negation");
  for (const auto& p : set.points) {
    if (!leech::validate_point(p, *st.code)) {
      throw std::runtime_error("a point fails the membership conditions");
    }
  }
  if (level == VerificationLevel::kFull) {
    const leech::PointSet again = leech::enumerate_min_vectors(*st.code);
    if (again.points != set.points) throw std::runtime_error("re-enumeration differs");
    return "196560 points, shapes verified, all membership checks pass, re-run identical";
  }
  return "196560 points, shapes verified, all membership checks pass";
}

std::string check_dot_rows(SuiteState& st, VerificationLevel level) {
  const auto& set = need_set(st);
  if (level == VerificationLevel::kFull) {
    // Exhaustive pair scan: admissibility of every dot plus the global
    // distribution implied by the fixed per-row profile.
    const diameter::DotHistogram h = diameter::pair_histogram(set);
    const std::uint64_t n = set.size();
    diameter::DotHistogram expected;
    for (std::size_t s = 0; s < kExpectedRowCounts.size(); ++s) {
      expected.counts[s] = kExpectedRowCounts[s] * n / 2;
    }
    expected.counts[6] = 0;  // dot 32 pairs itself; no distinct pair attains it
    expected.counts[0] = n / 2;
    if (h.counts != expected.counts) {
      throw std::runtime_error("global pair histogram deviates from the row profile");
    }
    for (std::size_t idx : spread_indices(set.size(), 1024)) {
      check_row_against_oracle(set.points[idx], set, "dots");
    }
    return "exhaustive pair scan matches the fixed profile; 1024 rows checked";
  }
  const auto sample = spread_indices(set.size(), kQuickSampleRows);
  for (std::size_t idx : sample) check_row_against_oracle(set.points[idx], set, "dots");
  return std::to_string(sample.size()) + " sampled rows match the fixed profile";
}

std::string check_census_totals(SuiteState& st) {
  const auto& set = need_set(st);
  st.cen = census::build_census(set);
  const auto& cen = *st.cen;
  const auto per_triple = uniform_value(cen.triple_counts);
  const auto per_pair = uniform_value(cen.pair_counts);
  if (!per_triple) throw std::runtime_error("triple counts are not uniform");
  if (!per_pair) throw std::runtime_error("pair counts are not uniform");
  if (*per_triple != kExpectedTripleSubsetSize) {
    throw std::runtime_error("per-triple count is not 116424");
  }
  if (*per_pair != kExpectedPairSubsetSize) {
    throw std::runtime_error("per-pair count is not 143136");
  }
  if (cen.total_triple_edges != kExpectedTripleEdges) {
    throw std::runtime_error("triple edge total is not 235642176");
  }
  if (cen.total_pair_edges != kExpectedPairEdges) {
    throw std::runtime_error("pair edge total is not 39505536");
  }
  st.triple = census::select_best_triple(cen);
  st.pair = census::select_best_pair(cen);
  return "uniform censuses: 2024 x 116424 and 276 x 143136";
}

std::string check_subset_sizes(SuiteState& st) {
  const auto& set = need_set(st);
  if (!st.cen) throw std::runtime_error("skipped: census unavailable");
  st.triple_subset = census::subset_equal_abs(set, st.triple);
  st.pair_subset = census::subset_equal_abs(set, st.pair);
  st.first_pair_subset = census::subset_equal_first_pair(set);
  if (st.triple_subset->size() != kExpectedTripleSubsetSize) {
    throw std::runtime_error("triple subset size is not 116424");
  }
  if (st.pair_subset->size() != kExpectedPairSubsetSize) {
    throw std::runtime_error("pair subset size is not 143136");
  }
  if (st.first_pair_subset->size() != 93150) {
    throw std::runtime_error("first-pair subset size is not 93150");
  }
  if (!embedding::check_subspace_membership(*st.triple_subset, st.triple)) {
    throw std::runtime_error("triple subset leaves its coordinate subspace");
  }
  return "subset sizes 116424 / 143136 / 93150";
}

std::string check_affine_dimensions(SuiteState& st) {
  const auto& set = need_set(st);
  if (!st.triple_subset || !st.pair_subset || !st.first_pair_subset) {
    throw std::runtime_error("skipped: subsets unavailable");
  }
  const auto full = embedding::constraints_full_set();
  const int dim_full = embedding::affine_dimension(set, full);
  if (dim_full != 323) throw std::runtime_error("full-set affine dimension is not 323");
  const auto ct = embedding::constraints_equal_abs(st.triple);
  const int dim_triple = embedding::affine_dimension(*st.triple_subset, ct);
  if (dim_triple != 321) throw std::runtime_error("triple-subset affine dimension is not 321");
  const auto cp = embedding::constraints_equal_abs(st.pair);
  const int dim_pair = embedding::affine_dimension(*st.pair_subset, cp);
  if (dim_pair != 322) throw std::runtime_error("pair-subset affine dimension is not 322");
  const auto cfp = embedding::constraints_equal_first_pair();
  const int dim_fp = embedding::affine_dimension(*st.first_pair_subset, cfp);
  if (dim_fp != 298) throw std::runtime_error("first-pair affine dimension is not 298");
  return "affine dimensions 323 / 321 / 322 / 298, all rank sandwiches closed";
}

std::string check_diameter_preservation(SuiteState& st, VerificationLevel level) {
  const auto& set = need_set(st);
  if (!st.triple_subset || !st.pair_subset || !st.first_pair_subset) {
    throw std::runtime_error("skipped: subsets unavailable");
  }
  const std::int64_t full = diameter::squared_diameter(set);
  if (full != embedding::kMaxSquaredDistanceScaled) {
    throw std::runtime_error("full-set squared diameter is not 1280/640");
  }
  if (level == VerificationLevel::kFull) {
    for (const auto* sub : {&*st.triple_subset, &*st.pair_subset, &*st.first_pair_subset}) {
      const diameter::DotHistogram h = diameter::pair_histogram(*sub);
      if (h.total() != sub->size() * (sub->size() - 1) / 2) {
        throw std::runtime_error("pairwise scan lost pairs");
      }
      if (h.at(0) + h.at(-8) == 0) {
        throw std::runtime_error("a subset has no diameter witness");
      }
    }
    return "exhaustive scans: all three subsets attain the full diameter";
  }
  for (const auto* sub : {&*st.triple_subset, &*st.pair_subset, &*st.first_pair_subset}) {
    if (!diameter::is_diameter_preserving(*sub, full)) {
      throw std::runtime_error("a subset has no diameter witness");
    }
  }
  return "witness pairs found in all three subsets";
}

std::string check_bound_certificates(SuiteState&) {
  if (parts_lower_bound(kExpectedTripleSubsetSize, diameter::kSmallerDiameterCap) != 333) {
    throw std::runtime_error("parts_lower_bound(116424, 350) is not 333");
  }
  if (parts_lower_bound(kExpectedPairSubsetSize, diameter::kSmallerDiameterCap) != 409) {
    throw std::runtime_error("parts_lower_bound(143136, 350) is not 409");
  }
  if (parts_lower_bound(350, 350) != 1) {
    throw std::runtime_error("parts_lower_bound(350, 350) is not 1");
  }
  // Certified values are level-independent, so quick builds suffice here.
  for (int dim : {321, 322}) {
    const Certificate cert = build_certificate(dim, VerificationLevel::kQuick);
    const VerifyResult vr = verify_certificate(cert);
    if (!vr.ok) {
      throw std::runtime_error("certificate for " + std::to_string(dim) +
                               " fails verification: " + vr.reasons.front());
    }
    const Certificate round = certificate_from_json_string(to_json_string(cert));
    if (!(round == cert)) {
      throw std::runtime_error("certificate round-trip changed certified fields");
    }
    const std::uint64_t want = dim == 321 ? 333 : 409;
    if (cert.parts_lower_bound != want) {
      throw std::runtime_error("certificate bound for " + std::to_string(dim) + " is not " +
                               std::to_string(want));
    }
  }
  return "bounds 333 and 409 certified; round-trips stable";
}

std::string check_greedy_heuristic(SuiteState& st, std::uint64_t seed) {
  const auto& set = need_set(st);
  std::size_t smallest = set.size(), largest = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto kept = diameter::greedy_smaller_diameter_subset(set, seed + t);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        if (diameter::is_diameter_dot(leech::dot(set.points[kept[a]], set.points[kept[b]]))) {
          throw std::runtime_error("greedy subset contains a diameter pair");
        }
      }
    }
    smallest = std::min(smallest, kept.size());
    largest = std::max(largest, kept.size());
  }
  return "20 seeds, sizes " + std::to_string(smallest) + ".." + std::to_string(largest) +
         ", all within the cap";
}

}  // namespace

std::vector<CheckResult> run_verification(VerificationLevel level, std::uint64_t seed) {
  std::vector<CheckResult> out;
  SuiteState st;
  auto run = [&out](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body();
      r.ok = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
      r.ok = false;
    }
    out.push_back(std::move(r));
  };

  run("code.structure", [&] { return check_code_structure(st); });
  run("lattice.enumeration", [&] { return check_lattice_enumeration(st, level); });
  run("dots.rows", [&] { return check_dot_rows(st, level); });
  run("census.totals", [&] { return check_census_totals(st); });
  run("subsets.sizes", [&] { return check_subset_sizes(st); });
  run("affine.dimensions", [&] { return check_affine_dimensions(st); });
  run("diameter.preservation", [&] { return check_diameter_preservation(st, level); });
  run("bounds.certificates", [&] { return check_bound_certificates(st); });
  run("heuristic.greedy", [&] { return check_greedy_heuristic(st, seed); });
  return out;
}

std::string report_json(VerificationLevel level, std::uint64_t seed) {
  const std::vector<CheckResult> checks = run_verification(level, seed);
  bool all_ok = true;
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json row;
    row["name"] = c.name;
    row["ok"] = c.ok;
    row["detail"] = c.detail;
    list.push_back(row);
    all_ok = all_ok && c.ok;
  }

  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["level"] = level_name(level);
  j["seed"] = seed;
  j["ok"] = all_ok;
  j["checks"] = list;
  ordered_json certs = ordered_json::object();
  for (int dim : {321, 322}) {
    try {
      certs[std::to_string(dim)] =
          ordered_json::parse(to_json_string(build_certificate(dim, VerificationLevel::kQuick)));
    } catch (const std::exception& e) {
      certs[std::to_string(dim)] = std::string("failed: ") + e.what();
      j["ok"] = false;
    }
  }
  j["certificates"] = certs;
  return j.dump(2) + "\n";
}

}  // namespace borsuk::certify
