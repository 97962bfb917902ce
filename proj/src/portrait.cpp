#include "amalgam/portrait.hpp"

#include <stdexcept>

namespace amalgam {

Portrait Portrait::parse(const std::string& text) {
  if (text.empty() || text == "e") return Portrait();
  std::vector<uint64_t> keys;
  size_t start = 0;
  for (;;) {
    size_t end = text.find(';', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (piece.empty()) throw std::invalid_argument("empty address in portrait literal");
    keys.push_back(BitWord::parse(piece).key());
    if (end == std::string::npos) break;
    start = end + 1;
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::invalid_argument("duplicate address in portrait literal");
  Portrait p;
  p.supp_ = std::move(keys);
  return p;
}

std::vector<Portrait> Portrait::enumerate_truncation(int d) {
  if (d < 0 || d > 3)
    throw std::invalid_argument("enumerate_truncation: exhaustive mode supports depth 0..3");
  std::vector<uint64_t> addrs;
  for (int len = 1; len <= d; ++len)
    for (uint32_t bits = 0; bits < (1u << len); ++bits)
      addrs.push_back(BitWord(bits, len).key());
  std::vector<Portrait> out;
  out.reserve(size_t(1) << addrs.size());
  for (uint64_t mask = 0; mask < (uint64_t(1) << addrs.size()); ++mask) {
    Portrait p;
    for (size_t i = 0; i < addrs.size(); ++i)
      if (mask & (uint64_t(1) << i)) p.supp_.push_back(addrs[i]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace amalgam
