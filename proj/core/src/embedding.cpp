#include "borsuk/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace borsuk::embedding {

namespace {

// Fixed primes for the modular rank lower bound, both just below 2^31 so that
// products of residues fit in 64 bits.
constexpr std::uint64_t kRankPrimes[2] = {2147483647ull, 2147483629ull};
constexpr int kRandomPrimeRetries = 2;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Incremental Gaussian elimination over GF(p) with one stored row per pivot
// column; rows are pivot-normalized on insert.
class ModEchelon {
 public:
  explicit ModEchelon(std::uint64_t p) : p_(p) { pivot_row_.fill(-1); }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces row in place and stores it when a pivot survives.
  bool insert(std::array<std::uint64_t, kFeatureLength>& row) {
    for (int col = 0; col < kFeatureLength; ++col) {
      const std::uint64_t a = row[col];
      if (a == 0) continue;
      const int r = pivot_row_[col];
      if (r < 0) {
        const std::uint64_t inv = powmod(a, p_ - 2, p_);
        for (int j = col; j < kFeatureLength; ++j) row[j] = mulmod(row[j], inv, p_);
        pivot_row_[col] = static_cast<int>(rows_.size());
        rows_.push_back(row);
        return true;
      }
      const auto& pivot = rows_[r];
      const std::uint64_t pp = p_ * p_;
      for (int j = col; j < kFeatureLength; ++j) {
        row[j] = (row[j] + pp - a * pivot[j]) % p_;
      }
    }
    return false;
  }

 private:
  std::uint64_t p_;
  std::vector<std::array<std::uint64_t, kFeatureLength>> rows_;
  std::array<int, kFeatureLength> pivot_row_;
};

std::array<std::uint64_t, kFeatureLength> difference_residues(const FeatureVector& a,
                                                              const FeatureVector& b,
                                                              std::uint64_t p) {
  std::array<std::uint64_t, kFeatureLength> row;
  for (int i = 0; i < kFeatureLength; ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a.v[i]) - b.v[i];
    row[i] = static_cast<std::uint64_t>((d % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p))) % p;
  }
  return row;
}

std::int64_t eval_constraint(const Constraint& c, const FeatureVector& f) {
  std::int64_t acc = 0;
  for (const auto& [idx, coeff] : c.terms) acc += coeff * f.v[idx];
  return acc;
}

// Certifies that the constraint rows are linearly independent over the
// rationals via full rank modulo one of the fixed primes.
int certified_constraint_count(std::span<const Constraint> constraints) {
  const int r = static_cast<int>(constraints.size());
  for (std::uint64_t p : kRankPrimes) {
    ModEchelon ech(p);
    for (const auto& c : constraints) {
      std::array<std::uint64_t, kFeatureLength> row{};
      for (const auto& [idx, coeff] : c.terms) {
        const std::int64_t v = coeff % static_cast<std::int64_t>(p);
        row[idx] = static_cast<std::uint64_t>(v + static_cast<std::int64_t>(p)) % p;
      }
      ech.insert(row);
    }
    if (ech.rank() == r) return r;
  }
  throw std::invalid_argument("affine_dimension: constraint rows not certified independent");
}

// Visits 1..count-1 in a fixed stride order so rank-increasing rows of all
// coordinate shapes appear early; the result does not depend on the order.
std::size_t strided_index(std::size_t t, std::size_t nrows, std::size_t stride) {
  return 1 + (t * stride) % nrows;
}

std::size_t pick_stride(std::size_t nrows) {
  std::size_t s = nrows / 2 + 1;
  if (s % 2 == 0) ++s;
  while (std::gcd(s, nrows) != 1) s += 2;
  return s;
}

int rank_mod_p(std::size_t count, const FeatureProvider& row_of, std::uint64_t p,
               int early_stop) {
  const FeatureVector base = row_of(0);
  ModEchelon ech(p);
  const std::size_t nrows = count - 1;
  const std::size_t stride = pick_stride(nrows);
  for (std::size_t t = 0; t < nrows; ++t) {
    const std::size_t i = strided_index(t, nrows, stride);
    auto row = difference_residues(row_of(i), base, p);
    ech.insert(row);
    if (ech.rank() >= early_stop) break;
  }
  return ech.rank();
}

}  // namespace

int g_index(int i, int j) {
  if (!(0 <= i && i < j && j < leech::kCoords)) {
    throw std::invalid_argument("g_index: need 0 <= i < j < 24");
  }
  return 23 * i - i * (i - 1) / 2 + (j - i - 1);
}

FeatureVector feature(const leech::LatticePoint& p) {
  FeatureVector f;
  for (int i = 0; i < leech::kCoords; ++i) {
    const std::int32_t x = p.coords[i];
    f.v[kEOffset + i] = x * x;
    f.v[kFOffset + i] = x;
  }
  int idx = kGOffset;
  for (int i = 0; i < leech::kCoords; ++i) {
    for (int j = i + 1; j < leech::kCoords; ++j) {
      f.v[idx++] = static_cast<std::int32_t>(p.coords[i]) * p.coords[j];
    }
  }
  return f;
}

std::array<double, kFeatureLength> phi_real(const leech::LatticePoint& p) {
  static const double kInvScale = 1.0 / (4.0 * std::sqrt(2.0));
  static const double kE = 2.0 / std::sqrt(5.0);
  static const double kF = 1.0 / std::sqrt(5.0);
  static const double kG = 2.0 * std::sqrt(2.0) / std::sqrt(5.0);

  std::array<double, leech::kCoords> x;
  for (int i = 0; i < leech::kCoords; ++i) x[i] = p.coords[i] * kInvScale;

  std::array<double, kFeatureLength> out;
  for (int i = 0; i < leech::kCoords; ++i) {
    out[kEOffset + i] = kE * x[i] * x[i];
    out[kFOffset + i] = kF * x[i];
  }
  int idx = kGOffset;
  for (int i = 0; i < leech::kCoords; ++i) {
    for (int j = i + 1; j < leech::kCoords; ++j) {
      out[idx++] = kG * x[i] * x[j];
    }
  }
  return out;
}

bool is_admissible_dot(int d) {
  return d == 0 || d == 8 || d == -8 || d == 16 || d == -16 || d == 32 || d == -32;
}

PhiInnerProduct phi_inner(int d) {
  if (!is_admissible_dot(d)) {
    throw std::invalid_argument("phi_inner: dot value " + std::to_string(d) +
                                " is not admissible");
  }
  return PhiInnerProduct{static_cast<std::int64_t>(d) * d + 8 * d};
}

std::int64_t squared_distance_scaled(int d) {
  return PhiInnerProduct::kDenominator - phi_inner(d).numerator;
}

std::vector<Constraint> constraints_full_set() {
  Constraint sum_e{"sum_e", {}};
  for (int i = 0; i < leech::kCoords; ++i) sum_e.terms.emplace_back(kEOffset + i, 1);
  return {std::move(sum_e)};
}

std::vector<Constraint> constraints_equal_abs(const census::CoordinateTriple& t) {
  census::triple_index(t);  // validate
  std::vector<Constraint> cs;
  cs.push_back({"e" + std::to_string(t.k) + "-e" + std::to_string(t.l),
                {{kEOffset + t.k, 1}, {kEOffset + t.l, -1}}});
  cs.push_back({"e" + std::to_string(t.l) + "-e" + std::to_string(t.m),
                {{kEOffset + t.l, 1}, {kEOffset + t.m, -1}}});
  auto rest = constraints_full_set();
  cs.push_back(std::move(rest.front()));
  return cs;
}

std::vector<Constraint> constraints_equal_abs(const census::CoordinatePair& pr) {
  census::pair_index(pr);  // validate
  std::vector<Constraint> cs;
  cs.push_back({"e" + std::to_string(pr.k) + "-e" + std::to_string(pr.l),
                {{kEOffset + pr.k, 1}, {kEOffset + pr.l, -1}}});
  auto rest = constraints_full_set();
  cs.push_back(std::move(rest.front()));
  return cs;
}

std::vector<Constraint> constraints_equal_first_pair() {
  std::vector<Constraint> cs;
  cs.push_back({"e0-e1", {{kEOffset + 0, 1}, {kEOffset + 1, -1}}});
  cs.push_back({"f0-f1", {{kFOffset + 0, 1}, {kFOffset + 1, -1}}});
  for (int j = 2; j < leech::kCoords; ++j) {
    cs.push_back({"g0" + std::to_string(j) + "-g1" + std::to_string(j),
                  {{kGOffset + g_index(0, j), 1}, {kGOffset + g_index(1, j), -1}}});
  }
  // X_0 * X_1 = X_0^2 whenever X_0 = X_1
  cs.push_back({"g01-e0", {{kGOffset + g_index(0, 1), 1}, {kEOffset + 0, -1}}});
  auto rest = constraints_full_set();
  cs.push_back(std::move(rest.front()));
  return cs;
}

int affine_dimension(std::size_t count, const FeatureProvider& row,
                     std::span<const Constraint> constraints) {
  if (count == 0) throw std::invalid_argument("affine_dimension: empty point sequence");
  if (count == 1) return 0;

  const FeatureVector base = row(0);
  std::vector<std::int64_t> base_values;
  base_values.reserve(constraints.size());
  for (const auto& c : constraints) base_values.push_back(eval_constraint(c, base));
  for (std::size_t i = 1; i < count; ++i) {
    const FeatureVector f = row(i);
    for (std::size_t j = 0; j < constraints.size(); ++j) {
      if (eval_constraint(constraints[j], f) != base_values[j]) {
        throw std::invalid_argument("affine_dimension: constraint '" + constraints[j].name +
                                    "' is not constant on the point set");
      }
    }
  }

  const int upper = kFeatureLength - certified_constraint_count(constraints);

  int best_lower = 0;
  std::uint64_t rng_state = 0xB0B5C0DE5EEDull;
  std::uint64_t prev_prime = 0;
  for (int attempt = 0; attempt < 2 + kRandomPrimeRetries; ++attempt) {
    std::uint64_t p;
    if (attempt < 2) {
      p = kRankPrimes[attempt];
    } else {
      do {
        p = (1ull << 30) | (splitmix64(rng_state) & ((1ull << 30) - 1)) | 1ull;
      } while (!is_prime(p) || p == prev_prime || p == kRankPrimes[0] || p == kRankPrimes[1]);
    }
    prev_prime = p;
    const int lower = rank_mod_p(count, row, p, upper);
    best_lower = std::max(best_lower, lower);
    if (best_lower == upper) return upper;
  }
  throw std::runtime_error("affine_dimension: rank undetermined (lower bound " +
                           std::to_string(best_lower) + " below upper bound " +
                           std::to_string(upper) + "); retry with fresh primes");
}

int affine_dimension(const leech::PointSet& set, std::span<const Constraint> constraints) {
  return affine_dimension(
      set.size(), [&set](std::size_t i) { return feature(set.points[i]); }, constraints);
}

bool check_subspace_membership(std::span<const FeatureVector> features,
                               const census::CoordinateTriple& t) {
  census::triple_index(t);  // validate
  for (const auto& f : features) {
    const auto ek = f.e(t.k);
    if (ek != f.e(t.l) || ek != f.e(t.m)) return false;
    std::int64_t sum = 0;
    for (int i = 0; i < leech::kCoords; ++i) sum += f.e(i);
    if (sum != leech::kSquaredNorm) return false;
  }
  return true;
}

bool check_subspace_membership(const leech::PointSet& set, const census::CoordinateTriple& t) {
  census::triple_index(t);  // validate
  for (const auto& p : set.points) {
    const int a = static_cast<int>(p.coords[t.k]) * p.coords[t.k];
    if (a != p.coords[t.l] * p.coords[t.l] || a != p.coords[t.m] * p.coords[t.m]) return false;
    int norm = 0;
    for (int i = 0; i < leech::kCoords; ++i) norm += static_cast<int>(p.coords[i]) * p.coords[i];
    if (norm != leech::kSquaredNorm) return false;
  }
  return true;
}

void write_features_csv(std::ostream& out, const leech::PointSet& set) {
  std::string line;
  line.reserve(kFeatureLength * 5);
  for (const auto& p : set.points) {
    const FeatureVector f = feature(p);
    line.clear();
    char buf[16];
    for (int i = 0; i < kFeatureLength; ++i) {
      if (i) line.push_back(',');
      auto res = std::to_chars(buf, buf + sizeof buf, f.v[i]);
      line.append(buf, res.ptr);
    }
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

}  // namespace borsuk::embedding
