#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "borsuk/census.hpp"
#include "borsuk/leech.hpp"

namespace borsuk::embedding {

inline constexpr int kFeatureLength = 324;  // 24 + 24 + 276
inline constexpr int kEOffset = 0;
inline constexpr int kFOffset = 24;
inline constexpr int kGOffset = 48;

// Lexicographic rank of the coordinate pair (i, j), 0 <= i < j < 24.
int g_index(int i, int j);

// Integer feature map of a lattice point X: the e block holds X_i^2, the f
// block X_i, the g block X_i * X_j for i < j. This equals the quadratic
// sphere embedding up to an invertible per-block diagonal scaling
// (1/(16*sqrt(5)), 1/(4*sqrt(10)), 1/(8*sqrt(10))), so affine ranks,
// coordinate equalities and distance comparisons computed on features are
// exact statements about the embedded set.
struct FeatureVector {
  std::array<std::int32_t, kFeatureLength> v{};

  std::int32_t e(int i) const { return v[kEOffset + i]; }
  std::int32_t f(int i) const { return v[kFOffset + i]; }
  std::int32_t g(int i, int j) const { return v[kGOffset + g_index(i, j)]; }

  auto operator<=>(const FeatureVector&) const = default;
};

FeatureVector feature(const leech::LatticePoint& p);

// The literal unit-sphere embedding of x = X / (4*sqrt(2)), block
// coefficients 2/sqrt(5), 1/sqrt(5), 2*sqrt(2)/sqrt(5). Euclidean norm 1.
// Used only as a floating cross-check oracle for the integer path.
std::array<double, kFeatureLength> phi_real(const leech::LatticePoint& p);

// Exact embedded inner product as a rational with fixed denominator 1280:
// for lattice dot d, the numerator is d^2 + 8d.
struct PhiInnerProduct {
  std::int64_t numerator = 0;
  static constexpr std::int64_t kDenominator = 1280;
};

// Admissible lattice dot values between minimal vectors.
inline constexpr std::array<int, 7> kAdmissibleDots = {-32, -16, -8, 0, 8, 16, 32};
bool is_admissible_dot(int d);

// Throws std::invalid_argument for d outside the admissible set.
PhiInnerProduct phi_inner(int d);

// 640 * (squared Euclidean distance between embedded images) = 1280 - d^2 - 8d.
// Maximum 1280, attained exactly at d in {0, -8}.
std::int64_t squared_distance_scaled(int d);
inline constexpr std::int64_t kMaxSquaredDistanceScaled = 1280;

// Sparse integer linear functional on feature vectors, used as an exact
// affine-hull constraint: it must take the same value on every feature
// vector of the set it certifies.
struct Constraint {
  std::string name;
  std::vector<std::pair<int, std::int64_t>> terms;  // (feature index, coefficient)
};

// Constraint lists for the sets this project certifies. Every constraint is
// constant on the corresponding feature set; independence is certified at
// rank time.
std::vector<Constraint> constraints_full_set();                                // sum(e) = 32
std::vector<Constraint> constraints_equal_abs(const census::CoordinateTriple&);  // + e_k = e_l = e_m
std::vector<Constraint> constraints_equal_abs(const census::CoordinatePair&);   // + e_k = e_l
std::vector<Constraint> constraints_equal_first_pair();                        // 26 relations forced by X_0 = X_1

using FeatureProvider = std::function<FeatureVector(std::size_t)>;

// Dimension of the affine hull, computed as a certified sandwich:
//   lower bound  = rank of the difference vectors modulo a large prime
//                  (two fixed documented primes, then deterministic random
//                  retries), always <= the rational rank;
//   upper bound  = 324 minus the number of constraints, after verifying with
//                  exact integer arithmetic that every constraint is constant
//                  on the set and that the constraint rows are independent.
// Returns the common value when the bounds meet; throws std::runtime_error
// ("rank undetermined") when they do not, and std::invalid_argument on an
// empty sequence or a non-constant constraint. A single point yields 0.
int affine_dimension(std::size_t count, const FeatureProvider& row,
                     std::span<const Constraint> constraints);
int affine_dimension(const leech::PointSet& set, std::span<const Constraint> constraints);

// True iff every feature vector satisfies e_k = e_l = e_m and sum(e) = 32,
// the integer-coordinate form of the affine subspace containing the
// equal-|coordinate| subsets. Vacuously true on an empty sequence.
bool check_subspace_membership(std::span<const FeatureVector> features,
                               const census::CoordinateTriple& t);
bool check_subspace_membership(const leech::PointSet& set, const census::CoordinateTriple& t);

// 324 comma-separated integers per line, block order e(24), f(24), g(276).
void write_features_csv(std::ostream& out, const leech::PointSet& set);

}  // namespace borsuk::embedding
