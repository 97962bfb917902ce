#include "amalgam/gamma.hpp"

#include <optional>
#include <stdexcept>

namespace amalgam::gamma {

namespace {

const BitWord kP0(0, 1);     // (0)
const BitWord kP1(1, 1);     // (1)
const BitWord kP10(2, 2);    // (1,0)
const BitWord kP11(3, 2);    // (1,1)

void require_in_h(const Portrait& h, const char* who) {
  if (!h.in_h()) throw std::invalid_argument(std::string(who) + ": element is not in H");
}

}  // namespace

DTriple decompose_D(const Portrait& h) {
  require_in_h(h, "decompose_D");
  DTriple d;
  d.eps = h.stores(kP1) ? 1 : 0;
  Portrait rest = d.eps ? h * h1() : h;  // right-cancel h(1)
  d.d0 = rest.restricted_to_prefix(kP0);
  d.d10 = rest.restricted_to_prefix(kP10);
  d.d11 = rest.restricted_to_prefix(kP11);
  return d;
}

Portrait recompose_D(const DTriple& d) {
  Portrait p = d.d0 * d.d10 * d.d11;
  if (d.eps) p = p * h1();
  return p;
}

Portrait alpha(const DTriple& d) {
  if (d.eps) throw std::invalid_argument("alpha: eps must be 0");
  return d.d10.shift_prefix(kP10, kP0) * d.d0.shift_prefix(kP0, kP10) * d.d11;
}

Portrait alpha(const Portrait& d) { return alpha(decompose_D(d)); }

std::pair<Tag, Portrait> push(const Portrait& h) {
  require_in_h(h, "push");
  DTriple d = decompose_D(h);
  if (d.eps == 0) return {Tag::A, alpha(d)};
  d.eps = 0;
  return {Tag::B, alpha(h1() * recompose_D(d) * h1())};
}

namespace {

// tag_x · t = T · h'' with t in {a, b}; consequence of g0² = e and
// (g0 h(1))³ = e, cross-checked against the rewriting oracle in tests.
std::pair<Tag, Portrait> tag_mul(Tag x, Tag t) {
  if (x == Tag::E) return {t, Portrait()};
  if (x == Tag::A) {
    if (t == Tag::A) return {Tag::E, Portrait()};
    return {Tag::B, h1()};  // g0 · h(1)g0 = h(1)g0 · h(1)
  }
  if (t == Tag::A) return {Tag::E, h1()};  // h(1)g0 · g0 = h(1)
  return {Tag::A, h1()};                   // (h(1)g0)² = g0 · h(1)
}

GammaFactorElement factor_mul_0(const GammaFactorElement& x, const GammaFactorElement& y) {
  if (y.tag == Tag::E) return {0, x.tag, x.h * y.h};
  Portrait lead = (y.tag == Tag::B) ? x.h * h1() : x.h;
  auto [t, hp] = push(lead);
  auto [tag, hpp] = tag_mul(x.tag, t);
  return {0, tag, hpp * hp * y.h};
}

GammaFactorElement factor_inv_0(const GammaFactorElement& x) {
  if (x.tag == Tag::E) return {0, Tag::E, x.h.inverse()};
  auto [t, hp] = push(x.h.inverse());
  if (x.tag == Tag::A) return {0, t, hp};
  return {0, t, hp * h1()};  // b⁻¹ = g0·h(1), so h⁻¹·b⁻¹ = push(h⁻¹)·h(1)
}

}  // namespace

GammaFactorElement fe_identity(int factor) { return {factor, Tag::E, Portrait()}; }

GammaFactorElement fe_embed(int factor, const Portrait& h) {
  require_in_h(h, "fe_embed");
  return {factor, Tag::E, h};
}

GammaFactorElement fe_transversal(int factor, int idx) {
  if (idx != 1 && idx != 2) throw std::invalid_argument("transversal index must be 1 or 2");
  return {factor, idx == 1 ? Tag::A : Tag::B, Portrait()};
}

GammaFactorElement mirror(const GammaFactorElement& x) {
  return {1 - x.factor, x.tag, x.h.mirrored()};
}

GammaFactorElement factor_mul(const GammaFactorElement& x, const GammaFactorElement& y) {
  if (x.factor != y.factor) throw std::invalid_argument("factor_mul: mixed factors");
  if (x.factor == 0) return factor_mul_0(x, y);
  return mirror(factor_mul_0(mirror(x), mirror(y)));
}

GammaFactorElement factor_inv(const GammaFactorElement& x) {
  if (x.factor == 0) return factor_inv_0(x);
  return mirror(factor_inv_0(mirror(x)));
}

ThetaValue theta_h(const BitWord& w) {
  if (w.empty()) throw std::invalid_argument("theta_h: empty address");
  bool odd = ((w.size() + w.first()) & 1) != 0;
  return odd ? ThetaValue{-1, 1} : ThetaValue{1, -1};
}

ThetaValue theta_g(int factor) { return factor == 0 ? ThetaValue{1, -1} : ThetaValue{-1, 1}; }

ThetaValue theta_portrait(const Portrait& h) {
  require_in_h(h, "theta_portrait");
  ThetaValue v;
  for (const BitWord& u : h.support()) v = v * theta_h(u);
  return v;
}

ThetaValue theta_factor(const GammaFactorElement& x) {
  ThetaValue v = theta_portrait(x.h);
  if (x.tag == Tag::A) v = v * theta_g(x.factor);
  if (x.tag == Tag::B)
    v = v * theta_h(BitWord(uint32_t(1 - x.factor), 1)) * theta_g(x.factor);
  return v;
}

std::vector<BitWord> generator_addresses(const Portrait& h) {
  std::vector<BitWord> out;
  Portrait rest = h;
  while (!rest.is_identity()) {
    BitWord u = rest.support().front();
    out.push_back(u);
    rest = Portrait::swap_at(u) * rest;  // left-cancel h(u)
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word letters;
  size_t pos = 0, index = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    std::string tok = text.substr(pos, end - pos);
    ++index;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("token " + std::to_string(index) + " ('" + tok + "'): " + why);
    };
    if (tok == "g0") {
      letters.push_back(fe_transversal(0, 1));
    } else if (tok == "g1") {
      letters.push_back(fe_transversal(1, 1));
    } else if (tok.rfind("h:", 0) == 0) {
      std::string bits = tok.substr(2);
      if (bits.empty()) fail("missing address bits");
      for (char c : bits)
        if (c != '0' && c != '1') fail("address bits must be 0/1");
      if (bits.size() > size_t(BitWord::kMaxLen)) fail("address too long");
      letters.push_back(fe_embed(0, h_generator(BitWord::parse(bits))));
    } else {
      fail("expected g0, g1, or h:<bits>");
    }
    pos = end;
  }
  return letters;
}

namespace {

// Conjugation x -> r·x·r⁻¹ inside one factor, with r given by its tag.
// The b representative is not an involution, so the reverse direction
// conjugates by r⁻¹ explicitly.
GammaFactorElement conj_by_tag(int factor, Tag t, const GammaFactorElement& x) {
  GammaFactorElement r{factor, t, Portrait()};
  return factor_mul(factor_mul(r, x), factor_inv(r));
}

GammaFactorElement conj_by_tag_inv(int factor, Tag t, const GammaFactorElement& x) {
  GammaFactorElement r{factor, t, Portrait()};
  return factor_mul(factor_mul(factor_inv(r), x), r);
}

struct SuiteBuilder {
  std::vector<IdentityCheck> out;
  std::vector<Portrait> ball;

  void check(const std::string& name, bool pass, const std::string& cex) {
    out.push_back({name, pass, pass ? std::string() : cex});
  }

  // Exhaustive: x in B_depth lies in r·S·r⁻¹ iff pred_rhs(x), where membership
  // in r·S·r⁻¹ is tested as r⁻¹·x·r in S.
  template <typename LhsPred, typename RhsPred>
  void sweep(const std::string& name, LhsPred lhs, RhsPred rhs) {
    for (const Portrait& x : ball) {
      if (lhs(x) != rhs(x)) {
        check(name, false, x.str());
        return;
      }
    }
    check(name, true, "");
  }
};

}  // namespace

std::vector<IdentityCheck> remark_identity_suite(int depth) {
  if (depth < 0 || depth > 3)
    throw std::invalid_argument("remark_identity_suite: depth must be in 0..3");
  SuiteBuilder sb;
  sb.ball = Portrait::enumerate_truncation(depth);

  // Generator-wise: conjugation by the two transversal reps relabels the
  // prefix-(j) generators onto depth-shifted prefix classes.
  for (int factor : {0, 1}) {
    BitWord from = factor == 0 ? kP0 : kP1;                   // H(j)
    BitWord to_a = factor == 0 ? kP10 : BitWord(1, 2);        // g_j-conjugate class
    BitWord to_b = factor == 0 ? kP11 : BitWord(0, 2);        // h(1-j)g_j-conjugate class
    for (auto [t, to] : {std::pair{Tag::A, to_a}, std::pair{Tag::B, to_b}}) {
      std::string nm = std::string(t == Tag::A ? "g" : "hg") + std::to_string(factor) +
                       "-conj: H_k(" + from.str() + ") -> H_{k+1}(" + to.str() + ")";
      bool ok = true;
      std::string cex;
      for (int len = 1; len <= depth && ok; ++len)
        for (uint32_t bits = 0; bits < (1u << len) && ok; ++bits) {
          BitWord w(bits, len);
          if (!w.has_prefix(from)) continue;
          BitWord img = w.strip_prefix(from).with_prefix(to);
          GammaFactorElement got = conj_by_tag(factor, t, fe_embed(factor, h_generator(w)));
          GammaFactorElement back =
              conj_by_tag_inv(factor, t, fe_embed(factor, h_generator(img)));
          if (!(got == fe_embed(factor, h_generator(img))) ||
              !(back == fe_embed(factor, h_generator(w)))) {
            ok = false;
            cex = "h(" + w.str() + ")";
          }
        }
      sb.check(nm, ok, cex);
    }
  }

  // Intersection identities, exhaustive over B_depth. Membership of x in
  // r·S·r⁻¹ is decided as r⁻¹·x·r in S; with the displayed representatives
  // r in {g_j, h(1-j)g_j} the left sides read H ^ r H r⁻¹ etc.
  auto conj_down = [](int factor, Tag t, const Portrait& x) {
    GammaFactorElement y = conj_by_tag_inv(factor, t, fe_embed(factor, x));
    return y.in_h() ? std::optional<Portrait>(y.h) : std::nullopt;
  };
  {
    using PC = Portrait::PrefixClass;
    const BitWord kP00(0, 2), kP01(1, 2);
    const std::vector<PC> h0_h21 = {{kP0, 1}, {kP1, 2}};
    const std::vector<PC> h1_h20 = {{kP1, 1}, {kP0, 2}};
    sb.sweep(
        "H ^ g0 H g0 = H(0)H_2(1)",
        [&](const Portrait& x) { return bool(conj_down(0, Tag::A, x)); },
        [&](const Portrait& x) { return x.in_product_subgroup(h0_h21); });
    sb.sweep(
        "H ^ h(1)g0 H g0 h(1) = H(0)H_2(1)",
        [&](const Portrait& x) { return bool(conj_down(0, Tag::B, x)); },
        [&](const Portrait& x) { return x.in_product_subgroup(h0_h21); });
    sb.sweep(
        "H ^ g1 H g1 = H(1)H_2(0)",
        [&](const Portrait& x) { return bool(conj_down(1, Tag::A, x)); },
        [&](const Portrait& x) { return x.in_product_subgroup(h1_h20); });
    sb.sweep(
        "H ^ h(0)g1 H g1 h(0) = H(1)H_2(0)",
        [&](const Portrait& x) { return bool(conj_down(1, Tag::B, x)); },
        [&](const Portrait& x) { return x.in_product_subgroup(h1_h20); });

    // Product forms with a depth floor on the moving class, both factors.
    for (int k = 1; k + 1 <= depth; ++k) {
      const std::string ks = std::to_string(k), k1s = std::to_string(k + 1);
      auto src0 = [&, k](Tag t, const Portrait& x) {
        auto y = conj_down(0, t, x);
        return y && y->in_product_subgroup({{kP0, k}, {kP1, 1}});
      };
      auto src1 = [&, k](Tag t, const Portrait& x) {
        auto y = conj_down(1, t, x);
        return y && y->in_product_subgroup({{kP0, 1}, {kP1, k}});
      };
      sb.sweep("H ^ g0 H_" + ks + "(0)H(1) g0 = H_" + k1s + "(1,0)H(0)H(1,1)",
               [&](const Portrait& x) { return src0(Tag::A, x); },
               [&, k](const Portrait& x) {
                 return x.in_product_subgroup({{kP10, k + 1}, {kP0, 1}, {kP11, 2}});
               });
      sb.sweep("H ^ h(1)g0 H_" + ks + "(0)H(1) g0 h(1) = H_" + k1s + "(1,1)H(0)H(1,0)",
               [&](const Portrait& x) { return src0(Tag::B, x); },
               [&, k](const Portrait& x) {
                 return x.in_product_subgroup({{kP11, k + 1}, {kP0, 1}, {kP10, 2}});
               });
      sb.sweep("H ^ g1 H(0)H_" + ks + "(1) g1 = H_" + k1s + "(0,1)H(1)H(0,0)",
               [&](const Portrait& x) { return src1(Tag::A, x); },
               [&, k](const Portrait& x) {
                 return x.in_product_subgroup({{kP01, k + 1}, {kP1, 1}, {kP00, 2}});
               });
      sb.sweep("H ^ h(0)g1 H(0)H_" + ks + "(1) g1 h(0) = H_" + k1s + "(0,0)H(1)H(0,1)",
               [&](const Portrait& x) { return src1(Tag::B, x); },
               [&, k](const Portrait& x) {
                 return x.in_product_subgroup({{kP00, k + 1}, {kP1, 1}, {kP01, 2}});
               });
    }
  }
  return sb.out;
}

}  // namespace amalgam::gamma
