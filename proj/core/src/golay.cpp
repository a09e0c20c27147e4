#include "borsuk/golay.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace borsuk::golay {

namespace {

constexpr Mask kWordMask = (Mask{1} << kWordBits) - 1;

Mask extend_with_parity(Mask w23) {
  Mask w = w23;
  if (std::popcount(w23) % 2 != 0) w |= Mask{1} << 23;
  return w;
}

}  // namespace

GolayCode build_code() {
  GolayCode code;
  for (int i = 0; i < kDimension; ++i) {
    // x^i * g(x) has degree <= 22, so the shift stays inside 23 bits.
    code.generator[i] = extend_with_parity(kGeneratorPolynomial << i);
  }
  code.parity_check = code.generator;  // self-dual code

  code.codewords.resize(kCodewordCount);
  for (std::uint32_t k = 0; k < kCodewordCount; ++k) {
    Mask w = 0;
    for (int i = 0; i < kDimension; ++i) {
      if (k & (1u << i)) w ^= code.generator[i];
    }
    code.codewords[k] = w;
  }
  std::sort(code.codewords.begin(), code.codewords.end());
  if (std::adjacent_find(code.codewords.begin(), code.codewords.end()) !=
      code.codewords.end()) {
    throw std::runtime_error("golay: generator matrix is not rank 12");
  }
  if ((code.codewords.back() & ~kWordMask) != 0) {
    throw std::runtime_error("golay: codeword exceeds 24 bits");
  }
  return code;
}

bool is_codeword(const GolayCode& code, Mask mask) {
  if (mask & ~kWordMask) return false;
  for (Mask row : code.parity_check) {
    if (std::popcount(mask & row) % 2 != 0) return false;
  }
  return true;
}

std::vector<Mask> octads(const GolayCode& code) {
  std::vector<Mask> result;
  result.reserve(kOctadCount);
  for (Mask w : code.codewords) {
    if (std::popcount(w) == 8) result.push_back(w);
  }
  return result;
}

std::array<std::uint32_t, kWordBits + 1> weight_histogram(const GolayCode& code) {
  std::array<std::uint32_t, kWordBits + 1> hist{};
  for (Mask w : code.codewords) ++hist[std::popcount(w)];
  return hist;
}

void write_codewords(std::ostream& out, const GolayCode& code) {
  for (Mask w : code.codewords) {
    char line[kWordBits + 1];
    for (int i = 0; i < kWordBits; ++i) line[i] = (w >> i & 1) ? '1' : '0';
    line[kWordBits] = '\n';
    out.write(line, kWordBits + 1);
  }
}

}  // namespace borsuk::golay
