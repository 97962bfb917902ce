#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace amalgam {

// One reduced letter of a normal form: a nontrivial left-coset representative
// of H in the given factor. transversal_index counts from 1; index 0 would be
// the trivial coset and never appears in a reduced word.
struct Syllable {
  int factor = 0;
  int index = 1;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.factor == b.factor && a.index == b.index;
  }
  friend auto operator<=>(const Syllable& a, const Syllable& b) = default;
};

// Canonical form s_1 s_2 ... s_n · tail with strictly alternating factors and
// tail in H. Equality of group elements is structural equality here.
//
// A context Ctx supplies exact arithmetic for the two factor groups and H:
//   types   HElem, FElem
//   int     index_of_h(factor)           [G_factor : H], or -1 if unknown
//   HElem   h_identity(); h_mul(a,b); h_inv(a)
//   bool    h_is_identity(h); h_equal(a,b)
//   FElem   transversal(factor, idx)     idx 0 gives the identity
//   FElem   embed(factor, h)
//   int     factor_of(f)
//   pair<int,HElem> decompose(f)         f = transversal(factor, idx)·embed(h)
//   FElem   f_mul(a,b); f_inv(a)         within one factor
template <typename Ctx>
struct NormalForm {
  std::vector<Syllable> syl;
  typename Ctx::HElem tail;
};

template <typename Ctx>
NormalForm<Ctx> nf_identity(const Ctx& ctx) {
  return {{}, ctx.h_identity()};
}

template <typename Ctx>
bool nf_is_identity(const Ctx& ctx, const NormalForm<Ctx>& x) {
  return x.syl.empty() && ctx.h_is_identity(x.tail);
}

template <typename Ctx>
bool nf_in_h(const NormalForm<Ctx>& x) {
  return x.syl.empty();
}

template <typename Ctx>
bool nf_equal(const Ctx& ctx, const NormalForm<Ctx>& x, const NormalForm<Ctx>& y) {
  return x.syl == y.syl && ctx.h_equal(x.tail, y.tail);
}

// h · (s_1 ... s_n t): cycles h through every syllable, updating coset
// representatives as it goes, and merges the remainder into the tail.
template <typename Ctx>
NormalForm<Ctx> prepend_h(const Ctx& ctx, typename Ctx::HElem h, NormalForm<Ctx> x) {
  if (ctx.h_is_identity(h)) return x;
  for (Syllable& s : x.syl) {
    auto prod = ctx.f_mul(ctx.embed(s.factor, h), ctx.transversal(s.factor, s.index));
    auto [idx, rest] = ctx.decompose(prod);
    if (idx == 0) throw std::logic_error("prepend_h: H letter collapsed a syllable");
    s.index = idx;
    h = rest;
  }
  x.tail = ctx.h_mul(h, x.tail);
  return x;
}

// g · (s_1 ... s_n t) for a letter g of either factor.
template <typename Ctx>
NormalForm<Ctx> prepend_letter(const Ctx& ctx, const typename Ctx::FElem& g, NormalForm<Ctx> x) {
  auto [gidx, gh] = ctx.decompose(g);
  if (gidx == 0) return prepend_h(ctx, gh, std::move(x));
  int factor = ctx.factor_of(g);
  if (!x.syl.empty() && x.syl.front().factor == factor) {
    auto prod = ctx.f_mul(g, ctx.transversal(factor, x.syl.front().index));
    auto [idx, rest] = ctx.decompose(prod);
    NormalForm<Ctx> deeper{{x.syl.begin() + 1, x.syl.end()}, std::move(x.tail)};
    deeper = prepend_h(ctx, rest, std::move(deeper));
    if (idx != 0) deeper.syl.insert(deeper.syl.begin(), Syllable{factor, idx});
    return deeper;
  }
  x = prepend_h(ctx, gh, std::move(x));
  x.syl.insert(x.syl.begin(), Syllable{factor, gidx});
  return x;
}

// Right-to-left normalization of a letter sequence.
template <typename Ctx>
NormalForm<Ctx> normalize(const Ctx& ctx, const std::vector<typename Ctx::FElem>& word) {
  NormalForm<Ctx> x = nf_identity(ctx);
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = prepend_letter(ctx, *it, x);
  return x;
}

template <typename Ctx>
NormalForm<Ctx> nf_mul(const Ctx& ctx, const NormalForm<Ctx>& x, NormalForm<Ctx> y) {
  y = prepend_h(ctx, x.tail, std::move(y));
  for (auto it = x.syl.rbegin(); it != x.syl.rend(); ++it)
    y = prepend_letter(ctx, ctx.transversal(it->factor, it->index), std::move(y));
  return y;
}

template <typename Ctx>
NormalForm<Ctx> nf_inv(const Ctx& ctx, const NormalForm<Ctx>& x) {
  NormalForm<Ctx> r = nf_identity(ctx);
  for (const Syllable& s : x.syl)
    r = prepend_letter(ctx, ctx.f_inv(ctx.transversal(s.factor, s.index)), std::move(r));
  return prepend_h(ctx, ctx.h_inv(x.tail), std::move(r));
}

template <typename Ctx>
NormalForm<Ctx> nf_embed_h(const Ctx&, typename Ctx::HElem h) {
  return {{}, std::move(h)};
}

// g' with g·h = h·g'; cycling preserves membership in G_i \ H.
template <typename Ctx>
typename Ctx::FElem cycle(const Ctx& ctx, const typename Ctx::HElem& h,
                          const typename Ctx::FElem& g) {
  if (ctx.decompose(g).first == 0) throw std::invalid_argument("cycle: letter lies in H");
  int factor = ctx.factor_of(g);
  auto hf = ctx.embed(factor, h);
  auto r = ctx.f_mul(ctx.f_mul(ctx.f_inv(hf), g), hf);
  if (ctx.decompose(r).first == 0) throw std::logic_error("cycle: conjugate fell into H");
  return r;
}

// (factor of the first syllable, syllable count); H elements report (0, 0).
template <typename Ctx>
std::pair<int, int> word_type(const NormalForm<Ctx>& x) {
  if (x.syl.empty()) return {0, 0};
  return {x.syl.front().factor, int(x.syl.size())};
}

// All alternating transversal-index sequences of length k starting in factor
// j, with trivial tails, in lexicographic index order.
template <typename Ctx>
std::vector<NormalForm<Ctx>> transversal_words(const Ctx& ctx, int j, int k) {
  for (int f : {0, 1})
    if (ctx.index_of_h(f) < 0) throw std::invalid_argument("transversal_words: unknown index");
  std::vector<NormalForm<Ctx>> out;
  std::vector<int> idx(k, 1);
  for (;;) {
    NormalForm<Ctx> w = nf_identity(ctx);
    for (int i = 0; i < k; ++i) w.syl.push_back(Syllable{(j + i) % 2, idx[i]});
    out.push_back(std::move(w));
    int pos = k - 1;
    while (pos >= 0) {
      int limit = ctx.index_of_h((j + pos) % 2) - 1;
      if (++idx[pos] <= limit) break;
      idx[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// ([G0:H]-1)([G1:H]-1) >= 2; nullopt when an index is unknown.
template <typename Ctx>
std::optional<bool> nondegeneracy_check(const Ctx& ctx) {
  int i0 = ctx.index_of_h(0), i1 = ctx.index_of_h(1);
  if (i0 < 0 || i1 < 0) return std::nullopt;
  return (i0 - 1) * (i1 - 1) >= 2;
}

}  // namespace amalgam
