#pragma once

#include <random>
#include <vector>

#include "amalgam/bitword.hpp"
#include "amalgam/portrait.hpp"

namespace testsupport {

using amalgam::BitWord;
using amalgam::Portrait;

using Rng = std::mt19937_64;

inline BitWord random_address(Rng& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  int len = len_dist(rng);
  std::uniform_int_distribution<uint32_t> bit_dist(0, len ? (1u << len) - 1 : 0);
  return BitWord(bit_dist(rng), len);
}

// Product of `factors` random generators with addresses of length 1..max_depth.
inline Portrait random_portrait(Rng& rng, int max_depth, int factors) {
  Portrait p;
  for (int i = 0; i < factors; ++i) p = p * Portrait::swap_at(random_address(rng, 1, max_depth));
  return p;
}

inline std::vector<BitWord> all_addresses(int min_len, int max_len) {
  std::vector<BitWord> out;
  for (int len = min_len; len <= max_len; ++len)
    for (uint32_t bits = 0; bits < (1u << len); ++bits) out.push_back(BitWord(bits, len));
  return out;
}

}  // namespace testsupport
