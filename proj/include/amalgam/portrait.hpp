#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/bitword.hpp"

namespace amalgam {

// Finitary automorphism of the rooted binary tree, stored as the sparse set
// of vertices whose two subtrees it swaps. Addresses are kept sorted in
// breadth-first order and the set is canonical, so structural equality is
// group equality. The stored bit at address u refers to the image tree:
// when computing the image of a word, the bit at depth d+1 flips iff the
// already-permuted depth-d prefix is stored.
class Portrait {
public:
  Portrait() = default;

  static Portrait identity() { return Portrait(); }
  static Portrait swap_at(const BitWord& w) {
    Portrait p;
    p.supp_.push_back(w.key());
    return p;
  }

  bool is_identity() const { return supp_.empty(); }
  int depth() const {
    return supp_.empty() ? 0 : int(supp_.back() >> 32);
  }
  size_t support_size() const { return supp_.size(); }
  bool stores(const BitWord& w) const {
    return std::binary_search(supp_.begin(), supp_.end(), w.key());
  }
  std::vector<BitWord> support() const {
    std::vector<BitWord> out;
    out.reserve(supp_.size());
    for (uint64_t k : supp_) out.push_back(unkey(k));
    return out;
  }

  BitWord apply(const BitWord& w) const {
    BitWord r;
    for (int i = 1; i <= w.size(); ++i) r = r.append(w.bit(i) ^ int(stores(r)));
    return r;
  }
  BitWord apply_inverse(const BitWord& w) const {
    BitWord r;
    for (int i = 1; i <= w.size(); ++i) r = r.append(w.bit(i) ^ int(stores(w.prefix(i - 1))));
    return r;
  }

  // (p*q) acts as first q then p: (p*q)(w) = p(q(w)).
  friend Portrait operator*(const Portrait& p, const Portrait& q) {
    std::vector<uint64_t> moved;
    moved.reserve(q.supp_.size());
    for (uint64_t k : q.supp_) moved.push_back(p.apply(unkey(k)).key());
    std::sort(moved.begin(), moved.end());
    Portrait r;
    r.supp_.reserve(p.supp_.size() + moved.size());
    std::set_symmetric_difference(p.supp_.begin(), p.supp_.end(), moved.begin(),
                                  moved.end(), std::back_inserter(r.supp_));
    return r;
  }

  Portrait inverse() const {
    Portrait r;
    r.supp_.reserve(supp_.size());
    for (uint64_t k : supp_) r.supp_.push_back(apply_inverse(unkey(k)).key());
    std::sort(r.supp_.begin(), r.supp_.end());
    return r;
  }

  // Restriction to the subtree below w, re-rooted at w. Only meaningful when
  // the automorphism fixes w.
  Portrait section(const BitWord& w) const {
    if (!(apply(w) == w)) throw std::invalid_argument("section: address " + w.str() + " is moved");
    Portrait r;
    for (uint64_t k : supp_) {
      BitWord u = unkey(k);
      if (u.has_prefix(w)) r.supp_.push_back(u.strip_prefix(w).key());
    }
    std::sort(r.supp_.begin(), r.supp_.end());
    return r;
  }

  // Relabels every stored address by replacing the prefix `from` with `to`.
  // Every stored address must carry the prefix `from`.
  Portrait shift_prefix(const BitWord& from, const BitWord& to) const {
    Portrait r;
    for (uint64_t k : supp_) {
      if (!unkey(k).has_prefix(from))
        throw std::invalid_argument("shift_prefix: address " + unkey(k).str() +
                                    " lacks prefix " + from.str());
      r.supp_.push_back(unkey(k).strip_prefix(from).with_prefix(to).key());
    }
    std::sort(r.supp_.begin(), r.supp_.end());
    return r;
  }

  // 0 <-> 1 swap on every address bit.
  Portrait mirrored() const {
    Portrait r;
    r.supp_.reserve(supp_.size());
    for (uint64_t k : supp_) r.supp_.push_back(unkey(k).mirrored().key());
    std::sort(r.supp_.begin(), r.supp_.end());
    return r;
  }

  // Fixes level one of the tree: no root swap and no empty stored address.
  bool in_h() const { return supp_.empty() || (supp_.front() >> 32) != 0; }

  bool in_prefix_subgroup(const BitWord& w, int min_depth = 0) const {
    for (uint64_t k : supp_) {
      BitWord u = unkey(k);
      if (!u.has_prefix(w) || u.size() < min_depth) return false;
    }
    return true;
  }

  struct PrefixClass {
    BitWord prefix;
    int min_depth = 0;
  };
  // Membership in the internal direct product of prefix subgroups; the
  // classes must be pairwise incomparable so the factors commute.
  bool in_product_subgroup(const std::vector<PrefixClass>& classes) const {
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j)
        if (classes[i].prefix.comparable(classes[j].prefix))
          throw std::invalid_argument("product classes must have incomparable prefixes");
    for (uint64_t k : supp_) {
      BitWord u = unkey(k);
      bool ok = false;
      for (const auto& c : classes)
        if (u.has_prefix(c.prefix) && u.size() >= c.min_depth) { ok = true; break; }
      if (!ok) return false;
    }
    return true;
  }

  // The component with all stored addresses in the given prefix class,
  // i.e. the projection onto one factor of a product subgroup.
  Portrait restricted_to_prefix(const BitWord& w) const {
    Portrait r;
    for (uint64_t k : supp_)
      if (unkey(k).has_prefix(w)) r.supp_.push_back(k);
    return r;
  }

  friend bool operator==(const Portrait& a, const Portrait& b) { return a.supp_ == b.supp_; }
  friend bool operator!=(const Portrait& a, const Portrait& b) { return !(a == b); }
  friend bool operator<(const Portrait& a, const Portrait& b) { return a.supp_ < b.supp_; }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t k : supp_) h = (h ^ k) * 0xff51afd7ed558ccdull;
    return size_t(h);
  }

  // Semicolon-separated list of the stored addresses, e.g. "0;101";
  // "e" denotes the identity.
  std::string str() const {
    if (supp_.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < supp_.size(); ++i) {
      if (i) s.push_back(';');
      s += unkey(supp_[i]).str();
    }
    return s;
  }
  static Portrait parse(const std::string& text);

  // All portraits with stored addresses of length 1..d, i.e. the truncation
  // of the level-one-fixing subgroup. Order is deterministic: the address
  // list is breadth-first and subset masks count up in binary.
  static std::vector<Portrait> enumerate_truncation(int d);

private:
  static BitWord unkey(uint64_t k) { return BitWord(uint32_t(k), int(k >> 32)); }

  std::vector<uint64_t> supp_;
};

struct PortraitHash {
  size_t operator()(const Portrait& p) const { return p.hash(); }
};

}  // namespace amalgam
