#include "amalgam/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace amalgam::finite {

Perm perm_identity(int degree) {
  auto p = Perm(size_t(degree));
  for (int i = 0; i < degree; ++i) p[size_t(i)] = i;
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("perm_mul: degree mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[size_t(b[i])];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[size_t(a[i])] = int(i);
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || size_t(v) >= p.size() || seen[size_t(v)]) return false;
    seen[size_t(v)] = true;
  }
  return true;
}

std::string perm_label(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == int(i)) continue;
    s.push_back('(');
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s.push_back(' ');
      s += std::to_string(j);
      first = false;
      j = size_t(p[j]);
    }
    s.push_back(')');
  }
  return s.empty() ? "e" : s;
}

int closure_cap() {
  if (const char* env = std::getenv("AMALGAM_MAX_CLOSURE")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10000;
}

FiniteGroup FiniteGroup::closure_from_generators(const std::vector<Perm>& gens, int cap) {
  if (cap < 0) cap = closure_cap();
  int degree = gens.empty() ? 1 : int(gens.front().size());
  for (const Perm& g : gens) {
    if (int(g.size()) != degree)
      throw std::invalid_argument("closure: generators act on different point counts");
    if (!is_permutation(g))
      throw std::invalid_argument("closure: generator is not a permutation: " +
                                  perm_label(g));
  }
  FiniteGroup G;
  G.degree_ = degree;
  G.elems_.push_back(perm_identity(degree));
  G.index_[G.elems_.front()] = 0;
  for (size_t at = 0; at < G.elems_.size(); ++at) {
    for (const Perm& g : gens) {
      Perm next = perm_mul(G.elems_[at], g);
      if (G.index_.emplace(next, int(G.elems_.size())).second) {
        if (int(G.elems_.size()) >= cap)
          throw std::runtime_error("closure: size cap " + std::to_string(cap) +
                                   " exceeded");
        G.elems_.push_back(std::move(next));
      }
    }
  }
  return G;
}

int FiniteGroup::mul(int a, int b) const {
  auto it = index_.find(perm_mul(elems_[size_t(a)], elems_[size_t(b)]));
  if (it == index_.end()) throw std::logic_error("mul: product escaped the group");
  return it->second;
}

int FiniteGroup::inv(int a) const {
  auto it = index_.find(perm_inv(elems_[size_t(a)]));
  if (it == index_.end()) throw std::logic_error("inv: inverse escaped the group");
  return it->second;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<bool> in(size_t(G.order()), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (size_t at = 0; at < queue.size(); ++at)
    for (int g : gens) {
      int next = G.mul(queue[at], g);
      if (!in[size_t(next)]) {
        in[size_t(next)] = true;
        queue.push_back(next);
      }
    }
  std::sort(queue.begin(), queue.end());
  return Subgroup{&G, std::move(queue)};
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{&G, {0}}; }

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<int> all(size_t(G.order()));
  for (int i = 0; i < G.order(); ++i) all[size_t(i)] = i;
  return Subgroup{&G, std::move(all)};
}

bool is_subgroup_closed(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  if (!S.contains(0)) return false;
  for (int a : S.elems) {
    if (!S.contains(G.inv(a))) return false;
    for (int b : S.elems)
      if (!S.contains(G.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  for (int g = 0; g < G.order(); ++g) {
    int gi = G.inv(g);
    for (int s : S.elems)
      if (!S.contains(G.mul(G.mul(g, s), gi))) return false;
  }
  return true;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& S) {
  int gi = G.inv(g);
  std::vector<int> out;
  out.reserve(S.elems.size());
  for (int s : S.elems) out.push_back(G.mul(G.mul(g, s), gi));
  std::sort(out.begin(), out.end());
  return Subgroup{&G, std::move(out)};
}

Subgroup subgroup_intersection(const Subgroup& A, const Subgroup& B) {
  if (A.parent != B.parent)
    throw std::invalid_argument("subgroup_intersection: different parent groups");
  std::vector<int> out;
  std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                        std::back_inserter(out));
  return Subgroup{A.parent, std::move(out)};
}

Subgroup normal_core(const FiniteGroup& G, const Subgroup& H) {
  Subgroup core = H;
  for (int g = 0; g < G.order() && core.order() > 1; ++g)
    core = subgroup_intersection(core, conjugate_subgroup(G, g, H));
  if (!is_subgroup_closed(core)) throw std::logic_error("normal_core: not closed");
  if (!is_normal(G, core)) throw std::logic_error("normal_core: not normal");
  // Maximality: nothing in H outside the core generates a normal subgroup of G
  // inside H, witnessed by a conjugate escaping H.
  for (int x : H.elems) {
    if (core.contains(x)) continue;
    bool escapes = false;
    for (int g = 0; g < G.order() && !escapes; ++g)
      escapes = !H.contains(G.mul(G.mul(g, x), G.inv(g)));
    if (!escapes) throw std::logic_error("normal_core: maximality violated");
  }
  return core;
}

std::pair<int, int> CosetTable::decompose(int g) const {
  int c = coset_of[size_t(g)];
  return {c, parent->mul(parent->inv(reps[size_t(c)]), g)};
}

CosetTable coset_transversal(const FiniteGroup& G, const Subgroup& H) {
  if (H.parent != &G)
    throw std::invalid_argument("coset_transversal: subgroup of a different group");
  CosetTable t;
  t.parent = &G;
  t.coset_of.assign(size_t(G.order()), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (t.coset_of[size_t(g)] != -1) continue;
    int c = int(t.reps.size());
    t.reps.push_back(g);
    for (int h : H.elems) t.coset_of[size_t(G.mul(g, h))] = c;
  }
  return t;
}

Quotient quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient_group: subgroup not normal");
  CosetTable t = coset_transversal(G, N);
  int m = int(t.reps.size());
  std::vector<Perm> images(size_t(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    auto act = Perm(size_t(m));
    for (int c = 0; c < m; ++c)
      act[size_t(c)] = t.coset_of[size_t(G.mul(g, t.reps[size_t(c)]))];
    images[size_t(g)] = std::move(act);
  }
  std::vector<Perm> gens;
  for (const Perm& p : images)
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  Quotient q;
  q.group = FiniteGroup::closure_from_generators(gens);
  q.proj.resize(size_t(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    q.proj[size_t(g)] = q.group.index_of(images[size_t(g)]);
    if (q.proj[size_t(g)] < 0) throw std::logic_error("quotient_group: image missing");
  }
  return q;
}

}  // namespace amalgam::finite
