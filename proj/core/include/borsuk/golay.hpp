#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace borsuk::golay {

// A codeword is a 24-bit mask, bit i = coordinate i (i in 0..23).
using Mask = std::uint32_t;

inline constexpr int kWordBits = 24;
inline constexpr int kDimension = 12;
inline constexpr std::size_t kCodewordCount = 4096;
inline constexpr std::size_t kOctadCount = 759;

// Generator polynomial of the cyclic [23,12,7] binary Golay code,
// g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, coefficient of x^i at
// bit i. The extended [24,12,8] code is obtained by appending an overall
// parity bit at coordinate 23 to every codeword.
inline constexpr Mask kGeneratorPolynomial = 0xC75;

// The extended binary Golay code. Weight distribution
// {0:1, 8:759, 12:2576, 16:759, 24:1}; the weight-8 words (octads) form the
// Steiner system S(5,8,24). The code is self-dual, so the generator rows
// double as parity checks.
struct GolayCode {
  std::vector<Mask> codewords;             // all 4096, ascending mask order
  std::array<Mask, kDimension> generator;  // 12 basis masks
  std::array<Mask, kDimension> parity_check;
};

// Builds the canonical code from kGeneratorPolynomial. Deterministic; throws
// std::runtime_error if the fixed generator fails its rank-12 consistency
// check (a build bug, not an input condition).
GolayCode build_code();

// Syndrome-based membership test: mask is a codeword iff it is orthogonal to
// every parity-check row.
bool is_codeword(const GolayCode& code, Mask mask);

// The 759 weight-8 codewords, ascending.
std::vector<Mask> octads(const GolayCode& code);

// weight -> number of codewords of that weight, tallied over all 4096.
std::array<std::uint32_t, kWordBits + 1> weight_histogram(const GolayCode& code);

// 4096 lines of 24 '0'/'1' characters, coordinate 0 leftmost.
void write_codewords(std::ostream& out, const GolayCode& code);

}  // namespace borsuk::golay
