#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "amalgam/nf.hpp"

namespace amalgam {

// h lies in the intersection of gHg^-1 over all words g of type (j,k).
// Conjugation by g and by g*h' answer the H-membership question identically,
// so sweeping coset-representative words covers the full set of such g.
template <typename Ctx>
bool c_jk_membership(const Ctx& ctx, const typename Ctx::HElem& h, int j, int k) {
  NormalForm<Ctx> x = nf_embed_h(ctx, h);
  for (const NormalForm<Ctx>& g : transversal_words(ctx, j, k)) {
    NormalForm<Ctx> c = nf_mul(ctx, nf_mul(ctx, nf_inv(ctx, g), x), g);
    if (!nf_in_h(c)) return false;
  }
  return true;
}

// One conjugation pass of the extraction loop below: x -> r^-1 x r.
template <typename Ctx>
NormalForm<Ctx> conjugate_nf(const Ctx& ctx, const NormalForm<Ctx>& r,
                             const NormalForm<Ctx>& x) {
  return nf_mul(ctx, nf_mul(ctx, nf_inv(ctx, r), x), r);
}

template <typename Ctx>
struct ConjugateOutResult {
  bool success = false;
  NormalForm<Ctx> conjugator;             // g with gFg^-1 disjoint from H
  std::vector<NormalForm<Ctx>> steps;     // the r_i, in application order
  int stuck_index = -1;                   // index into F on failure
  int bound = 0;
};

// Conjugates the elements of F out of H one at a time. Each step searches
// even-length words starting in factor 0 (membership in H is unchanged under
// H-translation of the conjugator, so transversal words suffice) for an r
// that moves the stuck element out while keeping every already-out element
// out; that invariant makes the loop terminate after at most |F| steps.
template <typename Ctx>
ConjugateOutResult<Ctx> conjugate_out(const Ctx& ctx, const std::vector<NormalForm<Ctx>>& F,
                                      int max_len) {
  for (const NormalForm<Ctx>& f : F)
    if (nf_is_identity(ctx, f))
      throw std::invalid_argument("conjugate_out: identity cannot leave the subgroup");

  ConjugateOutResult<Ctx> res;
  res.bound = max_len;
  std::vector<NormalForm<Ctx>> cur = F;
  NormalForm<Ctx> total = nf_identity(ctx);

  std::vector<NormalForm<Ctx>> candidates;
  for (int len = 2; len <= max_len; len += 2)
    for (NormalForm<Ctx>& w : transversal_words(ctx, 0, len))
      candidates.push_back(std::move(w));

  for (;;) {
    int stuck = -1;
    for (size_t i = 0; i < cur.size(); ++i)
      if (nf_in_h(cur[i])) {
        stuck = int(i);
        break;
      }
    if (stuck < 0) break;

    const NormalForm<Ctx>* found = nullptr;
    for (const NormalForm<Ctx>& r : candidates) {
      if (nf_in_h(conjugate_nf(ctx, r, cur[size_t(stuck)]))) continue;
      bool keeps = true;
      for (size_t i = 0; i < cur.size() && keeps; ++i)
        if (!nf_in_h(cur[i]) && nf_in_h(conjugate_nf(ctx, r, cur[i]))) keeps = false;
      if (keeps) {
        found = &r;
        break;
      }
    }
    if (!found) {
      res.stuck_index = stuck;
      return res;
    }
    for (NormalForm<Ctx>& x : cur) x = conjugate_nf(ctx, *found, x);
    total = nf_mul(ctx, total, *found);
    res.steps.push_back(*found);
  }

  res.success = true;
  res.conjugator = nf_inv(ctx, total);
  for (const NormalForm<Ctx>& f : F) {
    NormalForm<Ctx> moved =
        nf_mul(ctx, nf_mul(ctx, res.conjugator, f), nf_inv(ctx, res.conjugator));
    if (nf_in_h(moved)) throw std::logic_error("conjugate_out: verification failed");
  }
  return res;
}

// s_1 = e and s_i = g_1^-1 g_i f g_i^-1 g_1; every s_i past the first is a
// single conjugate of f, so membership in any normal subgroup containing f
// is preserved.
template <typename Ctx>
std::vector<NormalForm<Ctx>> powers_witness_transform(const Ctx& ctx,
                                                      const NormalForm<Ctx>& f,
                                                      const std::vector<NormalForm<Ctx>>& gs) {
  if (gs.empty()) throw std::invalid_argument("powers_witness_transform: empty word list");
  std::vector<NormalForm<Ctx>> out;
  out.push_back(nf_identity(ctx));
  for (size_t i = 1; i < gs.size(); ++i) {
    NormalForm<Ctx> t = nf_mul(ctx, nf_inv(ctx, gs[0]), gs[i]);
    out.push_back(nf_mul(ctx, nf_mul(ctx, t, f), nf_inv(ctx, t)));
  }
  return out;
}

template <typename Ctx, typename Pred>
std::vector<NormalForm<Ctx>> powers_witness_transform(const Ctx& ctx,
                                                      const NormalForm<Ctx>& f,
                                                      const std::vector<NormalForm<Ctx>>& gs,
                                                      Pred in_normal_subgroup) {
  auto out = powers_witness_transform(ctx, f, gs);
  if (in_normal_subgroup(f))
    for (const NormalForm<Ctx>& s : out)
      if (!in_normal_subgroup(s))
        throw std::logic_error("powers_witness_transform: conjugate left the subgroup");
  return out;
}

// All distinct normal forms reachable as products of at most `radius` letters,
// in first-discovery order.
template <typename Ctx>
std::vector<NormalForm<Ctx>> word_ball(const Ctx& ctx,
                                       const std::vector<typename Ctx::FElem>& letters,
                                       int radius) {
  std::vector<NormalForm<Ctx>> ball{nf_identity(ctx)};
  size_t layer_begin = 0;
  for (int r = 0; r < radius; ++r) {
    size_t layer_end = ball.size();
    for (size_t i = layer_begin; i < layer_end; ++i)
      for (const auto& letter : letters) {
        NormalForm<Ctx> next = nf_mul(ctx, ball[i], normalize(ctx, {letter}));
        bool seen = false;
        for (const NormalForm<Ctx>& old : ball)
          if (nf_equal(ctx, old, next)) {
            seen = true;
            break;
          }
        if (!seen) ball.push_back(std::move(next));
      }
    layer_begin = layer_end;
    if (layer_begin == ball.size()) break;
  }
  return ball;
}

enum class PartitionViolation { None, DFamily, EFamily };

struct PartitionReport {
  PartitionViolation kind = PartitionViolation::None;
  int ball_index = -1;                         // witness element
  std::pair<int, int> colliding_pair{-1, -1};  // (i, j) for the E family
  bool ok() const { return kind == PartitionViolation::None; }
};

// Checks the two disjointness families f*D # D and g_i*E # g_j*E restricted
// to the given ball. A ball-level check only: it can refute but not certify
// the global property. The predicates must partition the ball.
template <typename Ctx, typename PredD, typename PredE>
PartitionReport powers_partition_ball_check(const Ctx& ctx,
                                            const std::vector<NormalForm<Ctx>>& ball,
                                            PredD in_d, PredE in_e,
                                            const NormalForm<Ctx>& f,
                                            const std::vector<NormalForm<Ctx>>& gs) {
  for (const NormalForm<Ctx>& x : ball) {
    bool d = in_d(x), e = in_e(x);
    if (d == e)
      throw std::invalid_argument("powers_partition_ball_check: predicates do not "
                                  "partition the ball");
  }
  PartitionReport rep;
  for (size_t idx = 0; idx < ball.size(); ++idx) {
    if (!in_d(ball[idx])) continue;
    if (in_d(nf_mul(ctx, f, ball[idx]))) {
      rep.kind = PartitionViolation::DFamily;
      rep.ball_index = int(idx);
      return rep;
    }
  }
  // g_i E meets g_j E iff some e in E has g_j^-1 g_i e in E.
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) {
      NormalForm<Ctx> shift = nf_mul(ctx, nf_inv(ctx, gs[j]), gs[i]);
      for (size_t idx = 0; idx < ball.size(); ++idx) {
        if (!in_e(ball[idx])) continue;
        if (in_e(nf_mul(ctx, shift, ball[idx]))) {
          rep.kind = PartitionViolation::EFamily;
          rep.ball_index = int(idx);
          rep.colliding_pair = {int(i), int(j)};
          return rep;
        }
      }
    }
  return rep;
}

// x^3 = y^3 = e and no alternating word in {x, x^2, y, y^2} of up to L blocks
// collapses: the pair generates a copy of Z3 * Z3 as far as the bound sees.
template <typename Ctx>
bool free_pair_check(const Ctx& ctx, const NormalForm<Ctx>& x, const NormalForm<Ctx>& y,
                     int L) {
  NormalForm<Ctx> pows[2][2] = {{x, nf_mul(ctx, x, x)}, {y, nf_mul(ctx, y, y)}};
  if (!nf_is_identity(ctx, nf_mul(ctx, pows[0][1], x))) return false;
  if (!nf_is_identity(ctx, nf_mul(ctx, pows[1][1], y))) return false;
  for (int start : {0, 1})
    for (int m = 1; m <= L; ++m) {
      std::vector<int> exp(size_t(m), 0);
      for (;;) {
        NormalForm<Ctx> prod = nf_identity(ctx);
        for (int i = 0; i < m; ++i)
          prod = nf_mul(ctx, prod, pows[(start + i) % 2][exp[size_t(i)]]);
        if (nf_is_identity(ctx, prod)) return false;
        int pos = m - 1;
        while (pos >= 0 && exp[size_t(pos)] == 1) exp[size_t(pos--)] = 0;
        if (pos < 0) break;
        exp[size_t(pos)] = 1;
      }
    }
  return true;
}

}  // namespace amalgam
