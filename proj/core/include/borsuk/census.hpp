#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>

#include "borsuk/leech.hpp"

namespace borsuk::census {

inline constexpr int kTripleCount = 2024;  // C(24,3)
inline constexpr int kPairCount = 276;     // C(24,2)

struct CoordinateTriple {
  int k = 0, l = 1, m = 2;  // 0 <= k < l < m < 24
  auto operator<=>(const CoordinateTriple&) const = default;
};

struct CoordinatePair {
  int k = 0, l = 1;  // 0 <= k < l < 24
  auto operator<=>(const CoordinatePair&) const = default;
};

// Lexicographic ranks; throw std::invalid_argument on out-of-order indices.
int triple_index(const CoordinateTriple& t);
CoordinateTriple triple_at(int index);
int pair_index(const CoordinatePair& p);
CoordinatePair pair_at(int index);

// Neighbor counts of the bipartite incidence structure between a point set
// and the coordinate triples/pairs: a point is incident to {k,l,m} when
// |x_k| = |x_l| = |x_m| (and to {k,l} when |x_k| = |x_l|).
struct IncidenceCensus {
  std::array<std::uint32_t, kTripleCount> triple_counts{};
  std::array<std::uint32_t, kPairCount> pair_counts{};
  std::uint64_t total_triple_edges = 0;
  std::uint64_t total_pair_edges = 0;
};

// Per-point accumulation: group coordinates by |value| and add C(s,3)/C(s,2)
// incidences per group of size s. Parallelized over point ranges with
// per-worker local tables; the result is independent of the worker count.
IncidenceCensus build_census(const leech::PointSet& set);

// Lexicographically smallest triple/pair attaining the maximum count.
CoordinateTriple select_best_triple(const IncidenceCensus& census);
CoordinatePair select_best_pair(const IncidenceCensus& census);

// Points whose coordinates have equal absolute value on the given positions.
leech::PointSet subset_equal_abs(const leech::PointSet& set, const CoordinateTriple& t);
leech::PointSet subset_equal_abs(const leech::PointSet& set, const CoordinatePair& pr);

// Points whose first two coordinates are equal as signed values.
leech::PointSet subset_equal_first_pair(const leech::PointSet& set);

// CSV tables: "k,l,m,count" rows and "k,l,count" rows.
void write_triple_census_csv(std::ostream& out, const IncidenceCensus& census);
void write_pair_census_csv(std::ostream& out, const IncidenceCensus& census);

}  // namespace borsuk::census
