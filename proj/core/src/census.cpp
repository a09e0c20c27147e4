#include "borsuk/census.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "borsuk/parallel.hpp"

namespace borsuk::census {

namespace {

struct RankTables {
  std::array<std::array<std::uint16_t, 24>, 24> pair{};
  std::array<std::array<std::array<std::uint16_t, 24>, 24>, 24> triple{};
  std::array<CoordinatePair, kPairCount> pair_inv{};
  std::array<CoordinateTriple, kTripleCount> triple_inv{};

  RankTables() {
    int pr = 0;
    for (int k = 0; k < 24; ++k) {
      for (int l = k + 1; l < 24; ++l) {
        pair[k][l] = static_cast<std::uint16_t>(pr);
        pair_inv[pr] = {k, l};
        ++pr;
      }
    }
    int tr = 0;
    for (int k = 0; k < 24; ++k) {
      for (int l = k + 1; l < 24; ++l) {
        for (int m = l + 1; m < 24; ++m) {
          triple[k][l][m] = static_cast<std::uint16_t>(tr);
          triple_inv[tr] = {k, l, m};
          ++tr;
        }
      }
    }
  }
};

const RankTables& tables() {
  static const RankTables t;
  return t;
}

}  // namespace

int triple_index(const CoordinateTriple& t) {
  if (!(0 <= t.k && t.k < t.l && t.l < t.m && t.m < 24)) {
    throw std::invalid_argument("triple_index: indices must be strictly increasing in 0..23");
  }
  return tables().triple[t.k][t.l][t.m];
}

CoordinateTriple triple_at(int index) {
  if (index < 0 || index >= kTripleCount) {
    throw std::invalid_argument("triple_at: index out of range");
  }
  return tables().triple_inv[index];
}

int pair_index(const CoordinatePair& p) {
  if (!(0 <= p.k && p.k < p.l && p.l < 24)) {
    throw std::invalid_argument("pair_index: indices must be strictly increasing in 0..23");
  }
  return tables().pair[p.k][p.l];
}

CoordinatePair pair_at(int index) {
  if (index < 0 || index >= kPairCount) {
    throw std::invalid_argument("pair_at: index out of range");
  }
  return tables().pair_inv[index];
}

IncidenceCensus build_census(const leech::PointSet& set) {
  const auto& tab = tables();
  const int workers = worker_count();
  std::vector<std::array<std::uint32_t, kTripleCount>> triple_local(workers);
  std::vector<std::array<std::uint32_t, kPairCount>> pair_local(workers);

  parallel_chunks(set.size(), [&](std::size_t begin, std::size_t end, int w) {
    auto& triples = triple_local[w];
    auto& pairs = pair_local[w];
    triples.fill(0);
    pairs.fill(0);
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto& p = set.points[idx];
      // positions grouped by |coordinate|, ascending within each group
      std::array<std::array<std::uint8_t, 24>, 5> group{};
      std::array<int, 5> group_size{};
      for (int i = 0; i < leech::kCoords; ++i) {
        const int a = std::abs(static_cast<int>(p.coords[i]));
        group[a][group_size[a]++] = static_cast<std::uint8_t>(i);
      }
      for (int a = 0; a <= 4; ++a) {
        const int s = group_size[a];
        const auto& g = group[a];
        for (int x = 0; x < s; ++x) {
          for (int y = x + 1; y < s; ++y) {
            ++pairs[tab.pair[g[x]][g[y]]];
            for (int z = y + 1; z < s; ++z) {
              ++triples[tab.triple[g[x]][g[y]][g[z]]];
            }
          }
        }
      }
    }
  });

  IncidenceCensus census;
  for (int w = 0; w < workers; ++w) {
    for (int i = 0; i < kTripleCount; ++i) census.triple_counts[i] += triple_local[w][i];
    for (int i = 0; i < kPairCount; ++i) census.pair_counts[i] += pair_local[w][i];
  }
  for (int i = 0; i < kTripleCount; ++i) census.total_triple_edges += census.triple_counts[i];
  for (int i = 0; i < kPairCount; ++i) census.total_pair_edges += census.pair_counts[i];
  return census;
}

CoordinateTriple select_best_triple(const IncidenceCensus& census) {
  int best = 0;
  for (int i = 1; i < kTripleCount; ++i) {
    if (census.triple_counts[i] > census.triple_counts[best]) best = i;
  }
  return triple_at(best);
}

CoordinatePair select_best_pair(const IncidenceCensus& census) {
  int best = 0;
  for (int i = 1; i < kPairCount; ++i) {
    if (census.pair_counts[i] > census.pair_counts[best]) best = i;
  }
  return pair_at(best);
}

leech::PointSet subset_equal_abs(const leech::PointSet& set, const CoordinateTriple& t) {
  triple_index(t);  // validate
  std::vector<leech::LatticePoint> out;
  for (const auto& p : set.points) {
    const int a = std::abs(static_cast<int>(p.coords[t.k]));
    if (a == std::abs(static_cast<int>(p.coords[t.l])) &&
        a == std::abs(static_cast<int>(p.coords[t.m]))) {
      out.push_back(p);
    }
  }
  return leech::make_point_set(std::move(out));
}

leech::PointSet subset_equal_abs(const leech::PointSet& set, const CoordinatePair& pr) {
  pair_index(pr);  // validate
  std::vector<leech::LatticePoint> out;
  for (const auto& p : set.points) {
    if (std::abs(static_cast<int>(p.coords[pr.k])) == std::abs(static_cast<int>(p.coords[pr.l]))) {
      out.push_back(p);
    }
  }
  return leech::make_point_set(std::move(out));
}

leech::PointSet subset_equal_first_pair(const leech::PointSet& set) {
  std::vector<leech::LatticePoint> out;
  for (const auto& p : set.points) {
    if (p.coords[0] == p.coords[1]) out.push_back(p);
  }
  return leech::make_point_set(std::move(out));
}

void write_triple_census_csv(std::ostream& out, const IncidenceCensus& census) {
  for (int i = 0; i < kTripleCount; ++i) {
    const auto t = triple_at(i);
    out << t.k << ',' << t.l << ',' << t.m << ',' << census.triple_counts[i] << '\n';
  }
}

void write_pair_census_csv(std::ostream& out, const IncidenceCensus& census) {
  for (int i = 0; i < kPairCount; ++i) {
    const auto p = pair_at(i);
    out << p.k << ',' << p.l << ',' << census.pair_counts[i] << '\n';
  }
}

}  // namespace borsuk::census
