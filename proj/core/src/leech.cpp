#include "borsuk/leech.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace borsuk::leech {

LatticePoint negate(const LatticePoint& p) {
  LatticePoint q;
  for (int i = 0; i < kCoords; ++i) q.coords[i] = static_cast<std::int8_t>(-p.coords[i]);
  return q;
}

bool PointSet::contains(const LatticePoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

std::ptrdiff_t PointSet::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return -1;
  return it - points.begin();
}

PointSet make_point_set(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::runtime_error("point set contains duplicates");
  }
  PointSet set;
  set.points = std::move(points);
  set.closed_under_negation = true;
  for (const auto& p : set.points) {
    if (!set.contains(negate(p))) {
      set.closed_under_negation = false;
      break;
    }
  }
  return set;
}

PointSet enumerate_min_vectors(const golay::GolayCode& code) {
  std::vector<LatticePoint> out;
  out.reserve(kMinVectorCount);

  // (a) +-2 on each octad support, even number of minus signs.
  for (golay::Mask octad : octads(code)) {
    int positions[8];
    int n = 0;
    for (int i = 0; i < kCoords; ++i) {
      if (octad >> i & 1) positions[n++] = i;
    }
    for (unsigned signs = 0; signs < 256; ++signs) {
      if (std::popcount(signs) % 2 != 0) continue;
      LatticePoint p;
      for (int t = 0; t < 8; ++t) {
        p.coords[positions[t]] = (signs >> t & 1) ? -2 : 2;
      }
      out.push_back(p);
    }
  }

  // (b) coords_i = 1 - 2 c_i, then coords_j -> coords_j - 4*sign(coords_j).
  for (golay::Mask c : code.codewords) {
    LatticePoint base;
    for (int i = 0; i < kCoords; ++i) {
      base.coords[i] = (c >> i & 1) ? -1 : 1;
    }
    for (int j = 0; j < kCoords; ++j) {
      LatticePoint p = base;
      p.coords[j] = static_cast<std::int8_t>(p.coords[j] - 4 * (p.coords[j] > 0 ? 1 : -1));
      out.push_back(p);
    }
  }

  // (c) +-4 on each coordinate pair.
  for (int i = 0; i < kCoords; ++i) {
    for (int j = i + 1; j < kCoords; ++j) {
      for (int si = 0; si < 2; ++si) {
        for (int sj = 0; sj < 2; ++sj) {
          LatticePoint p;
          p.coords[i] = si ? -4 : 4;
          p.coords[j] = sj ? -4 : 4;
          out.push_back(p);
        }
      }
    }
  }

  for (const auto& p : out) {
    if (!validate_point(p, code)) {
      throw std::runtime_error("leech: constructed point fails validation (construction bug)");
    }
  }
  PointSet set = make_point_set(std::move(out));
  if (set.size() != kMinVectorCount) {
    throw std::runtime_error("leech: enumeration produced " + std::to_string(set.size()) +
                             " points, expected 196560");
  }
  return set;
}

ShapeClass shape_of(const LatticePoint& p) {
  std::array<int, 5> abs_counts{};  // |coordinate| in 0..4
  for (int i = 0; i < kCoords; ++i) {
    int a = std::abs(static_cast<int>(p.coords[i]));
    if (a > 4) throw std::invalid_argument("shape_of: coordinate out of range");
    ++abs_counts[a];
  }
  if (abs_counts[2] == 8 && abs_counts[0] == 16) return ShapeClass::kShape2;
  if (abs_counts[3] == 1 && abs_counts[1] == 23) return ShapeClass::kShape3;
  if (abs_counts[4] == 2 && abs_counts[0] == 22) return ShapeClass::kShape4;
  throw std::invalid_argument("shape_of: not a minimal-vector shape");
}

bool validate_point(const LatticePoint& p, const golay::GolayCode& code) {
  int norm = 0;
  int sum = 0;
  const int parity = p.coords[0] & 1;
  golay::Mask pattern = 0;
  for (int i = 0; i < kCoords; ++i) {
    const int v = p.coords[i];
    norm += v * v;
    sum += v;
    if ((v & 1) != parity) return false;
    const int r = ((v % 4) + 4) % 4;  // residue of v mod 4, in {m, m+2}
    if (r == parity + 2) pattern |= golay::Mask{1} << i;
  }
  if (norm != kSquaredNorm) return false;
  if (!is_codeword(code, pattern)) return false;
  return ((sum - 4 * parity) % 8 + 8) % 8 == 0;
}

void write_points_csv(std::ostream& out, const PointSet& set) {
  for (const auto& p : set.points) {
    char buf[kCoords * 4 + 2];
    char* cur = buf;
    for (int i = 0; i < kCoords; ++i) {
      if (i) *cur++ = ',';
      auto res = std::to_chars(cur, buf + sizeof buf, static_cast<int>(p.coords[i]));
      cur = res.ptr;
    }
    *cur++ = '\n';
    out.write(buf, cur - buf);
  }
}

PointSet read_points_csv(std::istream& in) {
  std::vector<LatticePoint> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    LatticePoint p;
    const char* cur = line.data();
    const char* end = line.data() + line.size();
    for (int i = 0; i < kCoords; ++i) {
      if (i) {
        if (cur >= end || *cur != ',') {
          throw std::runtime_error("points csv: bad field separator at line " +
                                   std::to_string(lineno));
        }
        ++cur;
      }
      int value = 0;
      auto res = std::from_chars(cur, end, value);
      if (res.ec != std::errc{} || value < -4 || value > 4) {
        throw std::runtime_error("points csv: bad coordinate at line " + std::to_string(lineno));
      }
      p.coords[i] = static_cast<std::int8_t>(value);
      cur = res.ptr;
    }
    if (cur != end) {
      throw std::runtime_error("points csv: trailing characters at line " + std::to_string(lineno));
    }
    points.push_back(p);
  }
  return make_point_set(std::move(points));
}

}  // namespace borsuk::leech
