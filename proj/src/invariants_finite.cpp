#include "amalgam/finite_invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace amalgam::finite {
namespace {

std::vector<int> mask_to_set(const std::vector<char>& m) {
  std::vector<int> out;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(int(i));
  return out;
}

bool subset_of(const std::vector<char>& a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

KernelReport k0k1_fixed_point(const AmalgamSpec& spec) {
  FiniteContext ctx(spec);
  const int n = spec.h_order();

  auto refine = [&](int factor, const std::vector<char>& other) {
    std::vector<char> out(size_t(n), 0);
    const int m = ctx.index_of_h(factor);
    for (int h = 0; h < n; ++h) {
      bool ok = true;
      // conjugation by s and by s*h' land in the same H-coset picture, so
      // the nontrivial representatives cover every element outside H
      for (int idx = 1; idx < m && ok; ++idx) {
        FiniteFactorElement s = ctx.transversal(factor, idx);
        FiniteFactorElement c = ctx.f_mul(ctx.f_mul(ctx.f_inv(s), ctx.embed(factor, h)), s);
        auto [ci, ch] = ctx.decompose(c);
        if (ci != 0 || !other[size_t(ch)]) ok = false;
      }
      out[size_t(h)] = ok;
    }
    return out;
  };

  std::vector<char> A(size_t(n), 1), B(size_t(n), 1);
  KernelReport rep;
  rep.chain.emplace_back(mask_to_set(A), mask_to_set(B));
  for (int k = 0;; ++k) {
    if (k > n + 1) throw std::logic_error("k0k1_fixed_point: chain failed to stabilize");
    std::vector<char> A2 = refine(0, B), B2 = refine(1, A);
    if (!subset_of(A2, A) || !subset_of(B2, B))
      throw std::logic_error("k0k1_fixed_point: chain is not decreasing");
    if (A2 == A && B2 == B) {
      rep.stabilized_at = k;
      break;
    }
    A = std::move(A2);
    B = std::move(B2);
    rep.chain.emplace_back(mask_to_set(A), mask_to_set(B));
  }

  rep.k0 = mask_to_set(A);
  rep.k1 = mask_to_set(B);
  std::vector<char> kerm(size_t(n), 0);
  for (int h = 0; h < n; ++h) kerm[size_t(h)] = A[size_t(h)] && B[size_t(h)];
  rep.ker = mask_to_set(kerm);

  for (int a : rep.ker)
    for (int b : rep.ker)
      if (!kerm[size_t(ctx.h_mul(a, b))] || !kerm[size_t(ctx.h_inv(a))])
        throw std::logic_error("k0k1_fixed_point: limit intersection is not a subgroup");
  for (int f = 0; f < 2; ++f) {
    const FiniteGroup& G = *spec.g[f];
    for (int g = 0; g < G.order(); ++g)
      for (int x : rep.ker) {
        int c = G.mul(G.mul(g, spec.h_elem(f, x)), G.inv(g));
        int hc = spec.h_of[f][size_t(c)];
        if (hc < 0 || !kerm[size_t(hc)])
          throw std::logic_error("k0k1_fixed_point: limit intersection is not normal "
                                 "in factor " + std::to_string(f));
      }
  }
  // a one-sided collapse onto the intersection forces the other side down too
  if ((rep.k0 == rep.ker) != (rep.k1 == rep.ker))
    throw std::logic_error("k0k1_fixed_point: one-sided collapse of the limit pair");
  return rep;
}

ClassifierReport classify_finite_H(const AmalgamSpec& spec, int witness_bound) {
  FiniteContext ctx(spec);
  std::optional<bool> nd = nondegeneracy_check(ctx);
  if (!nd.has_value() || !*nd)
    throw std::invalid_argument("classify_finite_H: amalgam must be nondegenerate");
  if (witness_bound < 1 || witness_bound > 8)
    throw std::invalid_argument("classify_finite_H: witness bound must be 1..8");

  ClassifierReport rep;
  rep.witness_bound = witness_bound;
  rep.kernel = k0k1_fixed_point(spec);
  rep.ker_trivial = rep.kernel.ker_trivial();

  // the level-k two-sided intersection never drops below the kernel and
  // reaches it at stabilization, so scanning the chain decides triviality
  for (size_t k = 0; k < rep.kernel.chain.size(); ++k) {
    std::vector<int> c;
    std::set_intersection(rep.kernel.chain[k].first.begin(),
                          rep.kernel.chain[k].first.end(),
                          rep.kernel.chain[k].second.begin(),
                          rep.kernel.chain[k].second.end(), std::back_inserter(c));
    if (c.size() == 1) {
      rep.c_trivial_at = int(k);
      break;
    }
  }
  if (rep.c_trivial_at.has_value() != rep.ker_trivial)
    throw std::logic_error("classify_finite_H: chain scan disagrees with the kernel");

  if (!rep.ker_trivial) {
    rep.witness_proven_absent = true;
  } else {
    for (int k = 1; k <= witness_bound && !rep.conjugator_witness; ++k)
      for (int j = 0; j < 2 && !rep.conjugator_witness; ++j)
        for (NormalForm<FiniteContext>& g : transversal_words(ctx, j, k)) {
          bool trivial = true;
          for (int h = 1; h < spec.h_order() && trivial; ++h) {
            auto c = nf_mul(ctx, nf_mul(ctx, nf_inv(ctx, g), nf_embed_h(ctx, h)), g);
            if (nf_in_h(c)) trivial = false;
          }
          if (trivial) {
            rep.conjugator_witness = std::move(g);
            break;
          }
        }
    if (!rep.conjugator_witness) rep.witness_bound_exhausted = true;
  }

  rep.fc_equals_ker = true;
  rep.all_equivalent =
      rep.ker_trivial
          ? (rep.c_trivial_at.has_value() && rep.conjugator_witness.has_value())
          : (!rep.c_trivial_at.has_value() && rep.witness_proven_absent &&
             !rep.conjugator_witness.has_value());
  return rep;
}

}  // namespace amalgam::finite
