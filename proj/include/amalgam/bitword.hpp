#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amalgam {

// Address of a vertex in the rooted binary tree, at most kMaxLen bits deep.
// Bits are packed with the first (root-side) bit in the most significant
// position, so (len, bits) compares in breadth-first order: all addresses of
// length L precede those of length L+1, and within a length the patterns run
// in binary counting order.
class BitWord {
public:
  static constexpr int kMaxLen = 24;

  constexpr BitWord() = default;
  constexpr BitWord(uint32_t bits, int len) : bits_(bits), len_(len) {}

  static BitWord parse(const std::string& s) {
    if (s.size() > kMaxLen) throw std::invalid_argument("address too long: " + s);
    BitWord w;
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("bad address bit: " + s);
      w = w.append(c - '0');
    }
    return w;
  }

  constexpr int size() const { return len_; }
  constexpr bool empty() const { return len_ == 0; }
  constexpr uint32_t bits() const { return bits_; }

  // 1-based position from the root.
  constexpr int bit(int pos) const { return (bits_ >> (len_ - pos)) & 1u; }
  constexpr int first() const { return bit(1); }
  constexpr int last() const { return bits_ & 1u; }

  constexpr BitWord append(int b) const { return BitWord((bits_ << 1) | uint32_t(b), len_ + 1); }
  constexpr BitWord prefix(int len) const { return BitWord(bits_ >> (len_ - len), len); }
  constexpr BitWord flip(int pos) const {
    return BitWord(bits_ ^ (1u << (len_ - pos)), len_);
  }
  // Bitwise complement of every position; preserves breadth-first length.
  constexpr BitWord mirrored() const {
    return BitWord(~bits_ & ((1u << len_) - 1u), len_);
  }

  constexpr bool has_prefix(const BitWord& p) const {
    return p.len_ <= len_ && (bits_ >> (len_ - p.len_)) == p.bits_;
  }
  constexpr bool comparable(const BitWord& o) const {
    return has_prefix(o) || o.has_prefix(*this);
  }

  // Remainder after removing the prefix p; caller guarantees has_prefix(p).
  constexpr BitWord strip_prefix(const BitWord& p) const {
    return BitWord(bits_ & ((1u << (len_ - p.len_)) - 1u), len_ - p.len_);
  }
  constexpr BitWord with_prefix(const BitWord& p) const {
    return BitWord((p.bits_ << len_) | bits_, len_ + p.len_);
  }

  // Packs into a single integer whose natural order is breadth-first order.
  constexpr uint64_t key() const { return (uint64_t(len_) << 32) | bits_; }

  friend constexpr bool operator==(const BitWord& a, const BitWord& b) {
    return a.len_ == b.len_ && a.bits_ == b.bits_;
  }
  friend constexpr bool operator<(const BitWord& a, const BitWord& b) {
    return a.key() < b.key();
  }

  std::string str() const {
    std::string s;
    s.reserve(len_);
    for (int i = 1; i <= len_; ++i) s.push_back(char('0' + bit(i)));
    return s;
  }

private:
  uint32_t bits_ = 0;
  int len_ = 0;
};

}  // namespace amalgam
