// Acceptance harness: one line per criterion, exit code = number of failures.
// argv[1] is the path to the command-line tool; the library criteria run in
// process, the tool criteria spawn it.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "borsuk/census.hpp"
#include "borsuk/certify.hpp"
#include "borsuk/diameter.hpp"
#include "borsuk/embedding.hpp"
#include "borsuk/golay.hpp"
#include "borsuk/leech.hpp"

using namespace borsuk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string tool_path;

// Runs the tool with the given arguments, discarding its output.
// Returns the exit status, or -1 when it did not exit normally.
int run_tool(const std::string& args) {
  const std::string cmd = "'" + tool_path + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

struct Pipeline {
  golay::GolayCode code;
  double code_seconds = 0.0;
  leech::PointSet points;
  double enumerate_seconds = 0.0;
  census::IncidenceCensus counts;
  census::CoordinateTriple best_triple;
  census::CoordinatePair best_pair;
  leech::PointSet triple_subset;
  leech::PointSet pair_subset;
  leech::PointSet first_pair_subset;
};

Pipeline& pipeline() {
  static Pipeline p = [] {
    Pipeline r;
    auto start = Clock::now();
    r.code = golay::build_code();
    r.code_seconds = seconds_since(start);
    start = Clock::now();
    r.points = leech::enumerate_min_vectors(r.code);
    r.enumerate_seconds = seconds_since(start);
    r.counts = census::build_census(r.points);
    r.best_triple = census::select_best_triple(r.counts);
    r.best_pair = census::select_best_pair(r.counts);
    r.triple_subset = census::subset_equal_abs(r.points, r.best_triple);
    r.pair_subset = census::subset_equal_abs(r.points, r.best_pair);
    r.first_pair_subset = census::subset_equal_first_pair(r.points);
    return r;
  }();
  return p;
}

std::string fail(const std::string& detail) { return detail; }

std::string check_golay() {
  const auto& p = pipeline();
  if (p.code_seconds >= 5.0)
    return fail("build took " + std::to_string(p.code_seconds) + "s");
  if (p.code.codewords.size() != 4096)
    return fail("codeword count " + std::to_string(p.code.codewords.size()));
  const auto hist = golay::weight_histogram(p.code);
  const std::pair<int, std::uint32_t> expected[] = {
      {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  std::uint64_t covered = 0;
  for (const auto& [w, n] : expected) {
    if (hist[w] != n)
      return fail("weight " + std::to_string(w) + " count " + std::to_string(hist[w]));
    covered += n;
  }
  if (covered != 4096) return fail("weight histogram misses codewords");
  const auto eights = golay::octads(p.code);
  if (eights.size() != golay::kOctadCount)
    return fail("octad count " + std::to_string(eights.size()));

  // Steiner property: every 5-subset of coordinates lies in exactly one octad.
  for (int a = 0; a < 24; ++a)
    for (int b = a + 1; b < 24; ++b)
      for (int c = b + 1; c < 24; ++c)
        for (int d = c + 1; d < 24; ++d)
          for (int e = d + 1; e < 24; ++e) {
            const golay::Mask five = (golay::Mask{1} << a) | (golay::Mask{1} << b) |
                                     (golay::Mask{1} << c) | (golay::Mask{1} << d) |
                                     (golay::Mask{1} << e);
            int containing = 0;
            for (const auto oct : eights)
              if ((oct & five) == five) ++containing;
            if (containing != 1)
              return fail("a 5-subset lies in " + std::to_string(containing) + " octads");
          }
  return {};
}

std::string check_lattice() {
  const auto& p = pipeline();
  if (p.enumerate_seconds >= 10.0)
    return fail("enumeration took " + std::to_string(p.enumerate_seconds) + "s");
  if (p.points.size() != leech::kMinVectorCount)
    return fail("vector count " + std::to_string(p.points.size()));
  if (!p.points.closed_under_negation) return fail("set not closed under negation");

  // A second enumeration must serialize to the identical byte sequence.
  std::ostringstream first, second;
  leech::write_points_csv(first, p.points);
  const auto again = leech::enumerate_min_vectors(p.code);
  leech::write_points_csv(second, again);
  if (first.str() != second.str()) return fail("two enumerations serialize differently");
  return {};
}

std::string check_dot_rows() {
  const auto& p = pipeline();
  const std::pair<int, std::uint64_t> profile[] = {{-32, 1},    {-16, 4600}, {-8, 47104},
                                                   {0, 93150},  {8, 47104},  {16, 4600},
                                                   {32, 1}};
  const std::size_t n = p.points.size();
  const std::size_t samples = 128;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = s * n / samples;
    const auto h = diameter::row_histogram(p.points.points[i], p.points);
    for (const auto& [d, expected] : profile) {
      if (h.at(d) != expected)
        return fail("row " + std::to_string(i) + " dot " + std::to_string(d) + " count " +
                    std::to_string(h.at(d)));
    }
    if (h.total() != n) return fail("row histogram total mismatch");
  }
  return {};
}

std::string check_census() {
  const auto& p = pipeline();
  if (p.counts.total_triple_edges != 235642176ull)
    return fail("triple total " + std::to_string(p.counts.total_triple_edges));
  if (p.counts.total_pair_edges != 39505536ull)
    return fail("pair total " + std::to_string(p.counts.total_pair_edges));
  for (const auto c : p.counts.triple_counts)
    if (c != 116424) return fail("nonuniform triple count " + std::to_string(c));
  for (const auto c : p.counts.pair_counts)
    if (c != 143136) return fail("nonuniform pair count " + std::to_string(c));
  return {};
}

std::string check_subsets() {
  const auto& p = pipeline();
  if (p.triple_subset.size() != 116424)
    return fail("triple subset size " + std::to_string(p.triple_subset.size()));
  if (p.pair_subset.size() != 143136)
    return fail("pair subset size " + std::to_string(p.pair_subset.size()));
  if (p.first_pair_subset.size() != 93150)
    return fail("signed-pair subset size " + std::to_string(p.first_pair_subset.size()));

  // Independent count of points with X_0 = X_1, split by coordinate shape:
  //   supports avoiding both positions, octads or pairs containing both with
  //   equal signs, and codewords with equal bits at positions 0 and 1.
  const auto eights = golay::octads(p.code);
  std::uint64_t avoiding = 0, containing = 0;
  for (const auto oct : eights) {
    const bool has0 = (oct >> 0) & 1u, has1 = (oct >> 1) & 1u;
    if (!has0 && !has1) ++avoiding;
    if (has0 && has1) ++containing;
  }
  std::uint64_t equal_bits = 0;
  for (const auto w : p.code.codewords)
    if (((w >> 0) & 1u) == ((w >> 1) & 1u)) ++equal_bits;
  const std::uint64_t expected =
      128 * avoiding + 64 * containing + 22 * equal_bits + 4 * (22 * 21 / 2) + 2;
  if (expected != 93150)
    return fail("independent signed-pair count " + std::to_string(expected));
  if (!embedding::check_subspace_membership(p.triple_subset, p.best_triple))
    return fail("triple subset leaves its affine subspace");
  return {};
}

std::string check_affine_dimensions() {
  const auto& p = pipeline();
  const struct {
    const char* label;
    const leech::PointSet* set;
    std::vector<embedding::Constraint> constraints;
    int expected;
  } cases[] = {
      {"full set", &p.points, embedding::constraints_full_set(), 323},
      {"triple subset", &p.triple_subset, embedding::constraints_equal_abs(p.best_triple),
       321},
      {"pair subset", &p.pair_subset, embedding::constraints_equal_abs(p.best_pair), 322},
      {"signed-pair subset", &p.first_pair_subset, embedding::constraints_equal_first_pair(),
       298},
  };
  for (const auto& c : cases) {
    const int dim = embedding::affine_dimension(*c.set, c.constraints);
    if (dim != c.expected)
      return fail(std::string(c.label) + " dimension " + std::to_string(dim) +
                  ", expected " + std::to_string(c.expected));
  }
  return {};
}

std::string check_diameter() {
  const auto& p = pipeline();
  const auto full = diameter::squared_diameter(p.points);
  if (full != embedding::kMaxSquaredDistanceScaled)
    return fail("full squared diameter " + std::to_string(full));
  for (const int d : embedding::kAdmissibleDots) {
    const bool attains = embedding::squared_distance_scaled(d) == full;
    if (attains != diameter::is_diameter_dot(d))
      return fail("diameter attained at dot " + std::to_string(d));
  }
  for (const auto* sub : {&p.triple_subset, &p.pair_subset, &p.first_pair_subset}) {
    if (!diameter::is_diameter_preserving(*sub, full))
      return fail("a subset of size " + std::to_string(sub->size()) +
                  " loses the diameter");
  }
  return {};
}

std::string check_bounds_and_cli() {
  if (certify::parts_lower_bound(116424, 350) != 333) return fail("333 bound wrong");
  if (certify::parts_lower_bound(143136, 350) != 409) return fail("409 bound wrong");

  const auto dir = std::filesystem::temp_directory_path();
  const std::pair<int, std::uint64_t> dims[] = {{321, 333}, {322, 409}};
  for (const auto& [dim, bound] : dims) {
    const auto out = dir / ("acceptance-cert-" + std::to_string(dim) + ".json");
    const int status = run_tool("certify --dim " + std::to_string(dim) +
                                " --level quick --out '" + out.string() + "'");
    if (status != 0)
      return fail("certify --dim " + std::to_string(dim) + " exited " +
                  std::to_string(status));
    std::ifstream in(out);
    std::ostringstream doc;
    doc << in.rdbuf();
    certify::Certificate cert;
    try {
      cert = certify::certificate_from_json_string(doc.str());
    } catch (const std::exception& e) {
      return fail("certificate unreadable: " + std::string(e.what()));
    }
    const auto verdict = certify::verify_certificate(cert);
    if (!verdict.ok)
      return fail("certificate for " + std::to_string(dim) + " fails verification: " +
                  verdict.reasons.front());
    if (cert.parts_lower_bound != bound)
      return fail("certified bound " + std::to_string(cert.parts_lower_bound));
    std::filesystem::remove(out);
  }
  if (run_tool("certify --dim 320 --level quick") != 2)
    return fail("unsupported dimension not rejected with exit 2");
  return {};
}

std::string check_greedy() {
  const auto& p = pipeline();
  const auto full = diameter::squared_diameter(p.points);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<std::size_t> kept;
    try {
      kept = diameter::greedy_smaller_diameter_subset(p.points, seed);
    } catch (const std::exception& e) {
      return fail("seed " + std::to_string(seed) + ": " + e.what());
    }
    if (kept.empty() || kept.size() > diameter::kSmallerDiameterCap)
      return fail("seed " + std::to_string(seed) + " kept " + std::to_string(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        const int d = leech::dot(p.points.points[kept[a]], p.points.points[kept[b]]);
        if (embedding::squared_distance_scaled(d) == full)
          return fail("seed " + std::to_string(seed) + " keeps a diameter pair");
      }
  }
  return {};
}

std::string check_quick_verification() {
  const auto start = Clock::now();
  const int status = run_tool("verify --level quick");
  const double elapsed = seconds_since(start);
  if (status != 0) return fail("verify exited " + std::to_string(status));
  if (elapsed >= 180.0) return fail("verify took " + std::to_string(elapsed) + "s");
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli-tool>\n", argv[0]);
    return 2;
  }
  tool_path = argv[1];

  const std::pair<const char*, std::function<std::string()>> criteria[] = {
      {"golay code structure", check_golay},
      {"lattice enumeration", check_lattice},
      {"dot structure", check_dot_rows},
      {"incidence census", check_census},
      {"subset sizes", check_subsets},
      {"affine dimensions", check_affine_dimensions},
      {"diameter preservation", check_diameter},
      {"partition bounds and CLI certificates", check_bounds_and_cli},
      {"greedy heuristic", check_greedy},
      {"quick verification end to end", check_quick_verification},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    std::string detail;
    try {
      detail = run();
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    if (detail.empty()) {
      std::printf("[PASS] %s\n", name);
    } else {
      std::printf("[FAIL] %s (%s)\n", name, detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
