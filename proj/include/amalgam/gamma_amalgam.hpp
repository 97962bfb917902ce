#pragma once

#include <string>

#include "amalgam/gamma.hpp"
#include "amalgam/nf.hpp"

namespace amalgam::gamma {

// Factor contract presenting G0 and G1 over their common subgroup H of
// portraits; plugs the coset-tag arithmetic into the normal-form engine.
struct GammaContext {
  using HElem = Portrait;
  using FElem = GammaFactorElement;

  int index_of_h(int) const { return 3; }
  HElem h_identity() const { return Portrait(); }
  bool h_is_identity(const HElem& h) const { return h.is_identity(); }
  bool h_equal(const HElem& a, const HElem& b) const { return a == b; }
  HElem h_mul(const HElem& a, const HElem& b) const { return a * b; }
  HElem h_inv(const HElem& a) const { return a.inverse(); }

  FElem transversal(int factor, int idx) const {
    return idx == 0 ? fe_identity(factor) : fe_transversal(factor, idx);
  }
  FElem embed(int factor, const HElem& h) const { return fe_embed(factor, h); }
  int factor_of(const FElem& x) const { return x.factor; }
  std::pair<int, HElem> decompose(const FElem& x) const { return {int(x.tag), x.h}; }
  FElem f_mul(const FElem& a, const FElem& b) const { return factor_mul(a, b); }
  FElem f_inv(const FElem& a) const { return factor_inv(a); }
};

using GammaNF = NormalForm<GammaContext>;

inline GammaNF normalize_word(const GammaContext& ctx, const Word& w) {
  return normalize(ctx, w);
}

inline GammaNF mirror_nf(const GammaNF& x) {
  GammaNF r;
  r.syl.reserve(x.syl.size());
  for (const Syllable& s : x.syl) r.syl.push_back(Syllable{1 - s.factor, s.index});
  r.tail = x.tail.mirrored();
  return r;
}

// Renders in generator tokens; coset reps expand as g0 / h:1 g0 (factor 0)
// and g1 / h:0 g1 (factor 1), the tail as peeled h:<bits> generators.
inline std::string nf_to_string(const GammaNF& x) {
  std::string s;
  auto emit = [&s](const std::string& tok) {
    if (!s.empty()) s.push_back(' ');
    s += tok;
  };
  for (const Syllable& q : x.syl) {
    if (q.index == 2) emit(q.factor == 0 ? "h:1" : "h:0");
    emit(q.factor == 0 ? "g0" : "g1");
  }
  for (const BitWord& u : generator_addresses(x.tail)) emit("h:" + u.str());
  return s.empty() ? "e" : s;
}

inline ThetaValue theta_word(const Word& w) {
  ThetaValue v;
  for (const GammaFactorElement& x : w) v = v * theta_factor(x);
  return v;
}

inline ThetaValue theta_nf(const GammaNF& x) {
  ThetaValue v;
  for (const Syllable& s : x.syl)
    v = v * theta_factor(GammaFactorElement{s.factor, s.index == 1 ? Tag::A : Tag::B, Portrait()});
  return v * theta_portrait(x.tail);
}

inline bool in_gamma_prime(const GammaNF& x) { return theta_nf(x).is_identity(); }

}  // namespace amalgam::gamma
