#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/finite_group.hpp"

namespace amalgam::finite {

// Two finite factor groups glued along a common subgroup. The amalgamated
// subgroup is stored as the graph of its two embeddings: pair i is the i-th
// element of H as (element of G0, element of G1), with pair 0 = (e, e) and
// pairs sorted by the G0 index.
struct AmalgamSpec {
  std::shared_ptr<const FiniteGroup> g[2];
  std::vector<std::pair<int, int>> h;
  Subgroup h_sub[2];
  std::vector<int> h_of[2];  // factor element -> h index, -1 outside H

  int h_order() const { return int(h.size()); }
  int h_elem(int factor, int hidx) const {
    return factor == 0 ? h[size_t(hidx)].first : h[size_t(hidx)].second;
  }
};

// Builds and validates a spec: the generator correspondence
// h_gens0[i] <-> h_gens1[i] must extend to an isomorphism between the
// generated subgroups. Violations name the offending generator pair.
AmalgamSpec make_amalgam(FiniteGroup g0, FiniteGroup g1, const std::vector<Perm>& h_gens0,
                         const std::vector<Perm>& h_gens1);

// JSON schema:
//   {"g0": {"perms": [[...], ...]}, "g1": {...},
//    "h_gens_in_g0": [[...], ...], "h_gens_in_g1": [[...], ...]}
AmalgamSpec load_amalgam_json_text(const std::string& text);
AmalgamSpec load_amalgam_json_file(const std::string& path);

// Built-in example specs: "s3-s3", "z4-z6", "z6-v4".
AmalgamSpec builtin_spec(const std::string& name);
std::vector<std::string> builtin_spec_names();

// Quotient of both factors by a subgroup of H that is normal in each; the
// amalgamated-subgroup indices are preserved and re-verified.
AmalgamSpec quotient_amalgam(const AmalgamSpec& spec, const std::vector<int>& n_hidx);

// Engine contract over a validated spec. H elements are pair indices; factor
// elements carry their factor id. The spec must outlive the context.
struct FiniteFactorElement {
  int factor = 0;
  int elem = 0;
  friend bool operator==(const FiniteFactorElement&, const FiniteFactorElement&) = default;
};

class FiniteContext {
 public:
  using HElem = int;
  using FElem = FiniteFactorElement;

  explicit FiniteContext(const AmalgamSpec& spec);

  int index_of_h(int factor) const { return int(ct_[factor].reps.size()); }
  HElem h_identity() const { return 0; }
  bool h_is_identity(HElem h) const { return h == 0; }
  bool h_equal(HElem a, HElem b) const { return a == b; }
  HElem h_mul(HElem a, HElem b) const;
  HElem h_inv(HElem a) const;

  FElem transversal(int factor, int idx) const {
    return FElem{factor, ct_[factor].reps[size_t(idx)]};
  }
  FElem embed(int factor, HElem h) const { return FElem{factor, spec_->h_elem(factor, h)}; }
  int factor_of(const FElem& x) const { return x.factor; }
  std::pair<int, HElem> decompose(const FElem& x) const;
  FElem f_mul(const FElem& a, const FElem& b) const;
  FElem f_inv(const FElem& a) const;

  const AmalgamSpec& spec() const { return *spec_; }
  const CosetTable& cosets(int factor) const { return ct_[factor]; }

 private:
  const AmalgamSpec* spec_;
  CosetTable ct_[2];
};

}  // namespace amalgam::finite
