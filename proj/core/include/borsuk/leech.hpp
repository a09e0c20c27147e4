#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "borsuk/golay.hpp"

namespace borsuk::leech {

inline constexpr int kCoords = 24;
inline constexpr int kSquaredNorm = 32;
inline constexpr std::size_t kMinVectorCount = 196560;
inline constexpr std::size_t kShape2Count = 97152;  // 759 octads * 2^7 sign patterns
inline constexpr std::size_t kShape3Count = 98304;  // 4096 codewords * 24 positions
inline constexpr std::size_t kShape4Count = 1104;   // 276 pairs * 4 sign pairs

// A minimal vector of the Leech lattice, stored as X = 4*sqrt(2) * x for the
// unit vector x, so every coordinate is a small signed integer and the
// squared norm is exactly 32. Unit-sphere dot products are recovered as
// dot(X, Y) / 32.
struct LatticePoint {
  std::array<std::int8_t, kCoords> coords{};
  auto operator<=>(const LatticePoint&) const = default;
};

LatticePoint negate(const LatticePoint& p);

// Coordinate-shape class, determined by the multiset of |coordinate| values.
enum class ShapeClass {
  kShape2,  // (+-2)^8 on an octad support, 0^16
  kShape3,  // one +-3, (+-1)^23
  kShape4,  // (+-4)^2, 0^22
};

// An immutable set of lattice points, lexicographically sorted and distinct.
struct PointSet {
  std::vector<LatticePoint> points;
  bool closed_under_negation = false;

  std::size_t size() const { return points.size(); }
  bool contains(const LatticePoint& p) const;
  // Position of p in points, or -1 when absent.
  std::ptrdiff_t index_of(const LatticePoint& p) const;
};

// Sorts, rejects duplicates, and computes the negation-closure flag.
PointSet make_point_set(std::vector<LatticePoint> points);

// Enumerates all 196560 minimal vectors:
//   (a) +-2 on each octad support, even number of minus signs;
//   (b) for each codeword c and position j, coords_i = 1 - 2 c_i with
//       coords_j moved to the +-3 value in the same residue class mod 4;
//   (c) +-4 at each coordinate pair, all four sign choices.
// Every constructed point is checked with validate_point; a failure means a
// construction bug and throws std::runtime_error. Output is sorted.
PointSet enumerate_min_vectors(const golay::GolayCode& code);

// Classifies by |coordinate| multiset; throws std::invalid_argument for a
// vector that matches no minimal-vector shape.
ShapeClass shape_of(const LatticePoint& p);

// The standard integer-coordinate membership conditions: squared norm 32, all
// coordinates congruent to a common parity m mod 2, the support of
// {i : coords_i = m + 2 (mod 4)} a Golay codeword, and sum of coordinates
// congruent to 4m mod 8.
bool validate_point(const LatticePoint& p, const golay::GolayCode& code);

// Exact integer dot product; lies in {0, +-8, +-16, +-32} for two minimal
// vectors.
inline int dot(const LatticePoint& a, const LatticePoint& b) {
  int s = 0;
  for (int i = 0; i < kCoords; ++i) {
    s += static_cast<int>(a.coords[i]) * static_cast<int>(b.coords[i]);
  }
  return s;
}

// One point per line, 24 comma-separated signed decimal integers,
// lexicographic order, no header.
void write_points_csv(std::ostream& out, const PointSet& set);
PointSet read_points_csv(std::istream& in);

}  // namespace borsuk::leech
