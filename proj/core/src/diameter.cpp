#include "borsuk/diameter.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <string>

#include "borsuk/parallel.hpp"

namespace borsuk::diameter {

namespace {

constexpr std::array<int, 7> kDotValues = {-32, -16, -8, 0, 8, 16, 32};

int dot_slot(int d) {
  switch (d) {
    case -32: return 0;
    case -16: return 1;
    case -8: return 2;
    case 0: return 3;
    case 8: return 4;
    case 16: return 5;
    case 32: return 6;
    default:
      throw std::invalid_argument("dot histogram: inadmissible dot value " + std::to_string(d));
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform draw from [0, n) by rejection, so permutations are unbiased.
std::uint64_t bounded_draw(std::uint64_t& state, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = splitmix64(state);
  } while (x >= limit);
  return x % n;
}

}  // namespace

std::uint64_t& DotHistogram::at(int d) { return counts[dot_slot(d)]; }

std::uint64_t DotHistogram::at(int d) const { return counts[dot_slot(d)]; }

std::uint64_t DotHistogram::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

DotHistogram row_histogram(const leech::LatticePoint& base, const leech::PointSet& set) {
  DotHistogram h;
  for (const auto& q : set.points) {
    ++h.counts[dot_slot(leech::dot(base, q))];
  }
  return h;
}

DotHistogram pair_histogram(const leech::PointSet& set) {
  const std::size_t n = set.size();
  const int workers = worker_count();

  // Widened contiguous copy of the coordinates; the 24-term int16 dot product
  // vectorizes where the int8 struct walk does not.
  std::vector<std::int16_t> flat(n * leech::kCoords);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < leech::kCoords; ++k) {
      flat[i * leech::kCoords + static_cast<std::size_t>(k)] = set.points[i].coords[k];
    }
  }

  // Dots are tallied by (d + 32) / 8 into nine raw buckets; buckets 1 and 7
  // (d = -24, +24) and any non-multiple of 8 mark inadmissible dots.
  std::vector<std::array<std::uint64_t, 9>> raw(
      static_cast<std::size_t>(workers > 0 ? workers : 1));
  std::atomic<bool> bad{false};
  parallel_chunks(n, [&](std::size_t begin, std::size_t end, int worker) {
    auto& local = raw[static_cast<std::size_t>(worker)];
    for (std::size_t i = begin; i < end; ++i) {
      const std::int16_t* pi = &flat[i * leech::kCoords];
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::int16_t* pj = &flat[j * leech::kCoords];
        int s = 0;
        for (int k = 0; k < leech::kCoords; ++k) {
          s += static_cast<int>(pi[k]) * pj[k];
        }
        const unsigned u = static_cast<unsigned>(s + 32);
        if (u > 64 || (u & 7u)) {
          bad.store(true, std::memory_order_relaxed);
          continue;
        }
        ++local[u >> 3];
      }
    }
  });
  if (bad.load()) {
    throw std::invalid_argument("pair_histogram: inadmissible dot value encountered");
  }

  std::array<std::uint64_t, 9> merged{};
  for (const auto& part : raw) {
    for (std::size_t s = 0; s < merged.size(); ++s) merged[s] += part[s];
  }
  if (merged[1] != 0 || merged[7] != 0) {
    throw std::invalid_argument("pair_histogram: inadmissible dot value encountered");
  }
  DotHistogram h;
  constexpr std::array<std::size_t, 7> kRawSlot = {0, 2, 3, 4, 5, 6, 8};
  for (std::size_t s = 0; s < kRawSlot.size(); ++s) h.counts[s] = merged[kRawSlot[s]];
  return h;
}

bool is_diameter_dot(int d) { return d == 0 || d == -8; }

std::int64_t squared_diameter(const leech::PointSet& set) {
  if (set.size() < 2) {
    throw std::invalid_argument("squared_diameter: need at least 2 points");
  }
  const std::size_t n = set.size();
  std::int64_t best = -1;
  for (std::size_t i = 0; i < n && best < embedding::kMaxSquaredDistanceScaled; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t sds =
          embedding::squared_distance_scaled(leech::dot(set.points[i], set.points[j]));
      if (sds > best) {
        best = sds;
        if (best == embedding::kMaxSquaredDistanceScaled) break;
      }
    }
  }
  return best;
}

bool is_diameter_preserving(const leech::PointSet& subset, std::int64_t full_diameter) {
  if (subset.size() < 2) {
    throw std::invalid_argument("is_diameter_preserving: need at least 2 points");
  }
  const std::size_t n = subset.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t sds =
          embedding::squared_distance_scaled(leech::dot(subset.points[i], subset.points[j]));
      if (sds > full_diameter) return false;
      if (sds == full_diameter) return true;
    }
  }
  return false;
}

std::vector<std::size_t> greedy_smaller_diameter_subset(const leech::PointSet& set,
                                                        std::uint64_t seed) {
  const std::size_t n = set.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::uint64_t state = seed ^ 0x42D31F56C0FFEEull;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_draw(state, i));
    std::swap(order[i - 1], order[j]);
  }

  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    const auto& p = set.points[idx];
    bool clashes = false;
    for (std::size_t k : kept) {
      if (is_diameter_dot(leech::dot(p, set.points[k]))) {
        clashes = true;
        break;
      }
    }
    if (clashes) continue;
    kept.push_back(idx);
    if (kept.size() > kSmallerDiameterCap) {
      throw std::runtime_error(
          "greedy_smaller_diameter_subset: external-bound violation (subset of smaller "
          "diameter exceeds " +
          std::to_string(kSmallerDiameterCap) + " points)");
    }
  }
  return kept;
}

void write_histogram_csv(std::ostream& out, const DotHistogram& h) {
  out << "dot,count\n";
  for (std::size_t s = 0; s < kDotValues.size(); ++s) {
    out << kDotValues[s] << ',' << h.counts[s] << '\n';
  }
}

}  // namespace borsuk::diameter
