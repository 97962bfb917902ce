#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace amalgam::finite {

// Permutation of {0..n-1} as its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inv(const Perm& a);
bool is_permutation(const Perm& p);
std::string perm_label(const Perm& p);  // cycle notation; identity prints "e"

// Size cap for closure enumeration; AMALGAM_MAX_CLOSURE overrides the default.
int closure_cap();

// Enumeration-backed finite group. Element 0 is the identity; indexing is the
// breadth-first discovery order from the generators, so it is reproducible.
class FiniteGroup {
 public:
  static FiniteGroup closure_from_generators(const std::vector<Perm>& gens, int cap = -1);

  int order() const { return int(elems_.size()); }
  int degree() const { return degree_; }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;
  int index_of(const Perm& p) const;  // -1 when absent
  const Perm& perm(int i) const { return elems_[size_t(i)]; }
  std::string label(int i) const { return perm_label(elems_[size_t(i)]); }

 private:
  int degree_ = 1;
  std::vector<Perm> elems_;
  std::map<Perm, int> index_;
};

// Subgroup as a sorted index set into its parent group.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elems;  // sorted, always contains 0

  int order() const { return int(elems.size()); }
  bool contains(int g) const;
};

Subgroup subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
bool is_subgroup_closed(const Subgroup& S);
bool is_normal(const FiniteGroup& G, const Subgroup& S);

Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& S);
Subgroup subgroup_intersection(const Subgroup& A, const Subgroup& B);

// Largest subgroup of H normal in G; normality and maximality are re-verified
// element by element before returning.
Subgroup normal_core(const FiniteGroup& G, const Subgroup& H);

// Left cosets gH with the smallest element index as canonical representative;
// rep 0 is the identity, so transversal index 0 always means the trivial coset.
struct CosetTable {
  const FiniteGroup* parent = nullptr;
  std::vector<int> reps;
  std::vector<int> coset_of;  // element -> position in reps

  // g = reps[c] * h; returns (c, h).
  std::pair<int, int> decompose(int g) const;
};

CosetTable coset_transversal(const FiniteGroup& G, const Subgroup& H);

// G/N via the left-translation action on cosets; proj maps parent elements to
// quotient elements.
struct Quotient {
  FiniteGroup group;
  std::vector<int> proj;
};

Quotient quotient_group(const FiniteGroup& G, const Subgroup& N);

}  // namespace amalgam::finite
