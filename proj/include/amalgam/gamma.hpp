#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/portrait.hpp"

// The group generated by the level-one-fixing tree automorphisms h(w)
// together with two extra involutions g0, g1. Elements of the two vertex
// groups G0 = <H, g0> and G1 = <H, g1> are stored in coset normal form
// tag·h relative to H; everything about G1 is obtained from G0 through the
// 0<->1 mirror symmetry of the defining relations.
namespace amalgam::gamma {

inline Portrait h_generator(const BitWord& w) {
  if (w.empty()) throw std::invalid_argument("h generator needs a nonempty address");
  return Portrait::swap_at(w);
}
inline Portrait h1() { return h_generator(BitWord(1, 1)); }
inline Portrait h0() { return h_generator(BitWord(0, 1)); }

// Left-coset tags relative to H. In factor 0: a = g0, b = h(1)g0.
// In factor 1: a = g1, b = h(0)g1.
enum class Tag : uint8_t { E = 0, A = 1, B = 2 };

// h = d0 · d10 · d11 · h(1)^eps with the three parts supported in the
// pairwise incomparable prefix classes (0), (1,0), (1,1).
struct DTriple {
  Portrait d0, d10, d11;
  int eps = 0;
};

DTriple decompose_D(const Portrait& h);
Portrait recompose_D(const DTriple& d);

// Conjugation by g0 on the eps=0 part: swaps the (0) and (1,0) coordinates
// by prefix relabeling and fixes the (1,1) coordinate.
Portrait alpha(const DTriple& d);
Portrait alpha(const Portrait& d);

// Rewrites h·g0 as tag·h' with tag in {a, b}.
std::pair<Tag, Portrait> push(const Portrait& h);

struct GammaFactorElement {
  int factor = 0;
  Tag tag = Tag::E;
  Portrait h;

  bool in_h() const { return tag == Tag::E; }
  bool is_identity() const { return tag == Tag::E && h.is_identity(); }
  friend bool operator==(const GammaFactorElement& x, const GammaFactorElement& y) {
    return x.factor == y.factor && x.tag == y.tag && x.h == y.h;
  }
};

GammaFactorElement fe_identity(int factor);
GammaFactorElement fe_embed(int factor, const Portrait& h);
// idx 1 -> tag a, idx 2 -> tag b, matching the transversal order {g_i, h(1-i)g_i}.
GammaFactorElement fe_transversal(int factor, int idx);
GammaFactorElement factor_mul(const GammaFactorElement& x, const GammaFactorElement& y);
GammaFactorElement factor_inv(const GammaFactorElement& x);

GammaFactorElement mirror(const GammaFactorElement& x);

struct ThetaValue {
  int s0 = 1, s1 = 1;  // signs

  friend ThetaValue operator*(const ThetaValue& x, const ThetaValue& y) {
    return {x.s0 * y.s0, x.s1 * y.s1};
  }
  friend bool operator==(const ThetaValue& x, const ThetaValue& y) {
    return x.s0 == y.s0 && x.s1 == y.s1;
  }
  bool is_identity() const { return s0 == 1 && s1 == 1; }
  std::string str() const {
    auto sgn = [](int s) { return s == 1 ? std::string("1") : std::string("-1"); };
    return "(" + sgn(s0) + "," + sgn(s1) + ")";
  }
};

// theta(h(w)) depends only on the parity of |w| + w1.
ThetaValue theta_h(const BitWord& w);
ThetaValue theta_g(int factor);
ThetaValue theta_portrait(const Portrait& h);  // h in H
ThetaValue theta_factor(const GammaFactorElement& x);

// Rewrites a portrait in H as a product of generators h(u), peeling the
// breadth-first smallest stored address first. The returned addresses are
// strictly increasing and multiply back to h.
std::vector<BitWord> generator_addresses(const Portrait& h);

// Letters of a word over {g0, g1, h(w)}; h letters are carried in factor 0.
using Word = std::vector<GammaFactorElement>;

// Tokens: "g0", "g1", "h:<bits>". Throws std::invalid_argument mentioning
// the 1-based token position on malformed input.
Word parse_word(const std::string& text);

struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

// Exhaustive truncated verification of the displayed subgroup identities
// (conjugation of prefix subgroups by g0/g1 and the intersection formulas).
// depth <= 3.
std::vector<IdentityCheck> remark_identity_suite(int depth);

}  // namespace amalgam::gamma
