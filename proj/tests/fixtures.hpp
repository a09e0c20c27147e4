#pragma once

#include <cstdint>

#include "borsuk/census.hpp"
#include "borsuk/golay.hpp"
#include "borsuk/leech.hpp"

// Shared pipeline fixtures, built lazily once per test binary run.
const borsuk::golay::GolayCode& test_code();
const borsuk::leech::PointSet& test_points();
const borsuk::census::IncidenceCensus& test_census();
const borsuk::leech::PointSet& test_triple_subset();      // |x_0|=|x_1|=|x_2|
const borsuk::leech::PointSet& test_pair_subset();        // |x_0|=|x_1|
const borsuk::leech::PointSet& test_first_pair_subset();  // x_0=x_1

// Deterministic splitmix64 stream for sampling inside tests.
struct TestRng {
  std::uint64_t state;

  explicit TestRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};
