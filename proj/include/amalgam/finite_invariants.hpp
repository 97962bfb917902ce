#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "amalgam/finite_amalgam.hpp"
#include "amalgam/invariants.hpp"

namespace amalgam::finite {

struct KernelReport {
  // (A_k, B_k): the subgroup-of-H index sets surviving k rounds of the
  // two-sided refinement. Entry 0 is (H, H); each round keeps h when every
  // nontrivial coset representative of one factor conjugates h into the
  // other side's previous set.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> chain;
  int stabilized_at = 0;
  std::vector<int> k0, k1, ker;  // limits and their intersection
  bool ker_trivial() const { return ker.size() == 1; }
};

// Greatest fixed point of the mutual conjugation refinement. The limit
// intersection is the kernel of the amalgam's action on its coset tree,
// equivalently the largest subgroup of H normal in both factors. The
// returned chain is strictly decreasing up to stabilized_at, and the limit
// is re-verified to persist for one extra round.
KernelReport k0k1_fixed_point(const AmalgamSpec& spec);

struct ClassifierReport {
  KernelReport kernel;
  bool ker_trivial = false;
  // first level k whose two-sided survivor intersection A_k cap B_k is
  // trivial; absent exactly when the kernel is nontrivial, since every
  // level contains the kernel
  std::optional<int> c_trivial_at;
  // word g with H cap gHg^-1 = {e}, found by breadth-first search over
  // transversal words up to witness_bound letters
  std::optional<NormalForm<FiniteContext>> conjugator_witness;
  bool witness_proven_absent = false;   // a nontrivial kernel sits in every H cap gHg^-1
  bool witness_bound_exhausted = false;  // trivial kernel but no witness within the bound
  int witness_bound = 0;
  // the finitely-many-conjugates part of the amalgam coincides with the
  // kernel whenever the amalgam is nondegenerate
  bool fc_equals_ker = true;
  bool all_equivalent = false;  // the three decided conditions agree
};

// Decides triviality of the kernel for a nondegenerate amalgam of finite
// groups and cross-reports the equivalent characterizations.
ClassifierReport classify_finite_H(const AmalgamSpec& spec, int witness_bound = 4);

}  // namespace amalgam::finite
