#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/nf.hpp"

namespace amalgam {

// Vertex of the coset tree: the coset rep·G_side, named by its canonical
// representative. The rep is an alternating syllable word with no H part
// that never ends in a side-factor syllable; base vertices have empty reps.
struct TreeVertex {
  int side = 0;
  std::vector<Syllable> rep;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

// Edge rep·H joining rep·G_0 to rep·G_1.
struct TreeEdge {
  std::vector<Syllable> rep;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

inline TreeVertex edge_endpoint(const TreeEdge& e, int side) {
  TreeVertex v{side, e.rep};
  if (!v.rep.empty() && v.rep.back().factor == side) v.rep.pop_back();
  return v;
}

struct TreeBall {
  int radius = 0;
  std::vector<TreeVertex> vertices;  // breadth-first from the base edge
  std::vector<TreeEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (edge, neighbor)

  int vertex_id(const TreeVertex& v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return int(i);
    return -1;
  }
  int edge_id(const TreeEdge& e) const {
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == e) return int(i);
    return -1;
  }
};

// Fills adj from the vertex and edge lists; every endpoint must be present.
void build_adjacency(TreeBall& ball);
// Connectivity, acyclicity and the edge count of a tree, via union-find.
bool tree_check(const TreeBall& ball);
// Hop distances from the given vertex within the ball.
std::vector<int> ball_distances(const TreeBall& ball, int vid);
// Ball vertices strictly closer to the chosen endpoint of e; the two sides
// partition the whole vertex set.
std::vector<TreeVertex> half_tree(const TreeBall& ball, const TreeEdge& e, int side);

// Deterministic rendering, format "dot" or "json"; JSON round-trips through
// parse_ball_json.
std::string export_ball(const TreeBall& ball, const std::string& format);
TreeBall parse_ball_json(const std::string& text);

template <typename Ctx>
NormalForm<Ctx> seq_nf(const Ctx& ctx, const std::vector<Syllable>& rep) {
  return {rep, ctx.h_identity()};
}

// Every vertex within hop distance `radius` of the base edge's endpoints,
// breadth-first: a vertex of side s reaches its neighbors through the cosets
// rep·t·H over the transversal of H in G_s; the trivial coset is the edge
// back toward the base.
template <typename Ctx>
TreeBall build_ball(const Ctx& ctx, int radius) {
  for (int f : {0, 1})
    if (ctx.index_of_h(f) < 0)
      throw std::invalid_argument("build_ball: transversal of factor " +
                                  std::to_string(f) + " is not finite");
  if (radius < 0 || radius > 12)
    throw std::invalid_argument("build_ball: radius must be 0..12");
  TreeBall ball;
  ball.radius = radius;
  ball.vertices = {TreeVertex{0, {}}, TreeVertex{1, {}}};
  ball.edges = {TreeEdge{}};
  std::vector<int> dist{0, 0};
  for (size_t qi = 0; qi < ball.vertices.size(); ++qi) {
    if (dist[qi] == radius) continue;
    TreeVertex v = ball.vertices[qi];
    int m = ctx.index_of_h(v.side);
    for (int idx = 1; idx < m; ++idx) {
      TreeEdge e{v.rep};
      e.rep.push_back(Syllable{v.side, idx});
      ball.edges.push_back(e);
      ball.vertices.push_back(TreeVertex{1 - v.side, e.rep});
      dist.push_back(dist[qi] + 1);
    }
  }
  build_adjacency(ball);
  return ball;
}

// Left translation g·(rep·G_side) followed by re-canonicalization.
template <typename Ctx>
TreeVertex act(const Ctx& ctx, const NormalForm<Ctx>& g, const TreeVertex& v) {
  NormalForm<Ctx> m = nf_mul(ctx, g, seq_nf(ctx, v.rep));
  TreeVertex r{v.side, std::move(m.syl)};
  if (!r.rep.empty() && r.rep.back().factor == v.side) r.rep.pop_back();
  return r;
}

template <typename Ctx>
TreeEdge act(const Ctx& ctx, const NormalForm<Ctx>& g, const TreeEdge& e) {
  NormalForm<Ctx> m = nf_mul(ctx, g, seq_nf(ctx, e.rep));
  return TreeEdge{std::move(m.syl)};
}

template <typename Ctx>
bool action_preserves_adjacency(const Ctx& ctx, const NormalForm<Ctx>& g,
                                const TreeBall& ball) {
  for (const TreeEdge& e : ball.edges) {
    TreeEdge f = act(ctx, g, e);
    for (int side : {0, 1})
      if (!(edge_endpoint(f, side) == act(ctx, g, edge_endpoint(e, side)))) return false;
  }
  return true;
}

template <typename Ctx>
std::vector<TreeVertex> fixed_points(const Ctx& ctx, const NormalForm<Ctx>& g,
                                     const TreeBall& ball) {
  std::vector<TreeVertex> out;
  for (const TreeVertex& v : ball.vertices)
    if (act(ctx, g, v) == v) out.push_back(v);
  return out;
}

template <typename Ctx>
void check_cylinder_prefix(const Ctx& ctx, const std::vector<Syllable>& prefix) {
  for (size_t i = 0; i < prefix.size(); ++i) {
    const Syllable& s = prefix[i];
    if (s.factor != 0 && s.factor != 1)
      throw std::invalid_argument("cylinder prefix: factor must be 0 or 1");
    if (s.index < 1 || s.index >= ctx.index_of_h(s.factor))
      throw std::invalid_argument("cylinder prefix: transversal index out of range");
    if (i > 0 && s.factor == prefix[i - 1].factor)
      throw std::invalid_argument("cylinder prefix: factors must alternate");
  }
}

// Membership in the pointwise fixator of the boundary cylinder below
// `prefix`: that fixator is the prefix-conjugate of the limit subgroup
// opposite to the prefix's last factor, so the test conjugates x back and
// asks KPred(k, h), the membership oracle for the limit subgroups K_0/K_1.
// The empty prefix designates the whole boundary, fixed exactly by the
// kernel K_0 meet K_1.
template <typename Ctx, typename KPred>
bool fixator_membership(const Ctx& ctx, const NormalForm<Ctx>& x,
                        const std::vector<Syllable>& prefix, KPred k_member) {
  check_cylinder_prefix(ctx, prefix);
  NormalForm<Ctx> p = seq_nf(ctx, prefix);
  NormalForm<Ctx> c = nf_mul(ctx, nf_mul(ctx, nf_inv(ctx, p), x), p);
  if (!nf_in_h(c)) return false;
  if (prefix.empty()) return k_member(0, c.tail) && k_member(1, c.tail);
  return k_member(1 - prefix.back().factor, c.tail);
}

// True iff x fixes every ball vertex whose canonical rep extends `prefix`.
template <typename Ctx>
bool cylinder_fix_check(const Ctx& ctx, const NormalForm<Ctx>& x,
                        const std::vector<Syllable>& prefix, const TreeBall& ball) {
  check_cylinder_prefix(ctx, prefix);
  if (ball.radius < int(prefix.size()) + 1)
    throw std::invalid_argument("cylinder_fix_check: ball radius must exceed the prefix length");
  for (const TreeVertex& v : ball.vertices) {
    if (v.rep.size() < prefix.size()) continue;
    if (!std::equal(prefix.begin(), prefix.end(), v.rep.begin())) continue;
    if (!(act(ctx, x, v) == v)) return false;
  }
  return true;
}

// First prefix, by increasing length and lexicographic index order, whose
// cylinder x fixes pointwise. Exhausting the bound proves nothing beyond it.
template <typename Ctx, typename KPred>
std::optional<std::vector<Syllable>> interior_witness(const Ctx& ctx,
                                                      const NormalForm<Ctx>& x,
                                                      int max_prefix_len, KPred k_member) {
  if (nf_is_identity(ctx, x))
    throw std::invalid_argument("interior_witness: identity rejected");
  for (int len = 1; len <= max_prefix_len; ++len)
    for (int j = 0; j < 2; ++j)
      for (const NormalForm<Ctx>& w : transversal_words(ctx, j, len))
        if (fixator_membership(ctx, x, w.syl, k_member)) return w.syl;
  return std::nullopt;
}

}  // namespace amalgam
