#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "borsuk/embedding.hpp"
#include "borsuk/leech.hpp"

namespace borsuk::diameter {

// Counts of lattice dot products, indexed by the seven admissible values
// -32, -16, -8, 0, 8, 16, 32 in that order.
struct DotHistogram {
  std::array<std::uint64_t, 7> counts{};

  // Count for dot value d; throws std::invalid_argument on inadmissible d.
  std::uint64_t& at(int d);
  std::uint64_t at(int d) const;

  std::uint64_t total() const;

  bool operator==(const DotHistogram&) const = default;
};

// Histogram of dot(base, q) over all q in the set, including q == base.
DotHistogram row_histogram(const leech::LatticePoint& base, const leech::PointSet& set);

// Histogram of dot(p, q) over unordered pairs p != q.
DotHistogram pair_histogram(const leech::PointSet& set);

// Two points realize the diameter of the embedded set exactly when their
// lattice dot product lies in {0, -8}.
bool is_diameter_dot(int d);

// Largest squared_distance_scaled over unordered pairs. Requires >= 2 points.
std::int64_t squared_diameter(const leech::PointSet& set);

// True when the subset attains the same maximal scaled squared distance as
// the full set (both must have >= 2 points).
bool is_diameter_preserving(const leech::PointSet& subset, std::int64_t full_diameter);

// Hard cap on the greedy subset size; certificates divide by this value, so
// exceeding it invalidates the bound and aborts.
inline constexpr std::size_t kSmallerDiameterCap = 350;

// Seeded greedy pass over a random permutation of the set: keeps a point when
// it realizes the diameter with no already-kept point, so the kept points form
// a subset of strictly smaller diameter. Throws std::runtime_error (message
// contains "external-bound violation") if the kept set would exceed the cap.
std::vector<std::size_t> greedy_smaller_diameter_subset(const leech::PointSet& set,
                                                        std::uint64_t seed);

// CSV rows "dot,count" for the seven admissible values, ascending.
void write_histogram_csv(std::ostream& out, const DotHistogram& h);

}  // namespace borsuk::diameter
