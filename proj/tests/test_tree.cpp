#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "amalgam/finite_invariants.hpp"
#include "amalgam/gamma_tree.hpp"
#include "amalgam/tree.hpp"
#include "support.hpp"

using namespace amalgam;
using namespace amalgam::gamma;

namespace {

GammaNF gw(const GammaContext& ctx, const std::string& text) {
  return normalize_word(ctx, parse_word(text));
}

std::vector<Syllable> random_prefix(testsupport::Rng& rng, int len) {
  std::vector<Syllable> p;
  int f = int(rng() % 2);
  for (int i = 0; i < len; ++i) {
    p.push_back(Syllable{f, 1 + int(rng() % 2)});
    f = 1 - f;
  }
  return p;
}

finite::FiniteFactorElement random_felem(testsupport::Rng& rng,
                                         const finite::AmalgamSpec& spec) {
  int f = int(rng() % 2);
  return finite::FiniteFactorElement{f, int(rng() % uint64_t(spec.g[f]->order()))};
}

}  // namespace

TEST_SUITE("tree") {

TEST_CASE("ball construction") {
  GammaContext ctx;

  TreeBall b0 = build_ball(ctx, 0);
  REQUIRE(b0.vertices.size() == 2);
  REQUIRE(b0.edges.size() == 1);
  CHECK(b0.vertices[0] == TreeVertex{0, {}});
  CHECK(b0.vertices[1] == TreeVertex{1, {}});
  CHECK(b0.edges[0].rep.empty());
  CHECK(tree_check(b0));

  TreeBall b1 = build_ball(ctx, 1);
  CHECK(b1.vertices.size() == 6);
  CHECK(b1.edges.size() == 5);
  CHECK(tree_check(b1));

  TreeBall b4 = build_ball(ctx, 4);
  REQUIRE(b4.vertices.size() == 62);
  CHECK(b4.edges.size() == 61);
  CHECK(tree_check(b4));

  // interior vertices have full degree, leaves hang by their parent edge
  std::vector<int> d0 = ball_distances(b4, 0), d1 = ball_distances(b4, 1);
  for (size_t i = 0; i < b4.vertices.size(); ++i) {
    int edge_dist = std::min(d0[i], d1[i]);
    CHECK(b4.adj[i].size() == (edge_dist < 4 ? 3u : 1u));
  }
  // 3-regular sphere growth seen from a base vertex
  for (int r = 1; r <= 4; ++r)
    CHECK(std::count(d0.begin(), d0.end(), r) == 3 * (1 << (r - 1)));

  TreeBall b4again = build_ball(ctx, 4);
  CHECK(b4again.vertices == b4.vertices);
  CHECK(b4again.edges == b4.edges);

  auto s3 = finite::builtin_spec("s3-s3");
  finite::FiniteContext fctx(s3);
  TreeBall fs3 = build_ball(fctx, 2);
  CHECK(fs3.vertices.size() == 14);
  CHECK(fs3.edges.size() == 13);
  CHECK(tree_check(fs3));

  auto z6v4 = finite::builtin_spec("z6-v4");
  finite::FiniteContext mctx(z6v4);
  TreeBall mixed = build_ball(mctx, 2);
  CHECK(mixed.vertices.size() == 9);
  CHECK(mixed.edges.size() == 8);
  CHECK(tree_check(mixed));

  CHECK_THROWS_AS(build_ball(ctx, -1), std::invalid_argument);
  CHECK_THROWS_AS(build_ball(ctx, 13), std::invalid_argument);
}

TEST_CASE("canonical vertex reps name cosets") {
  auto spec = finite::builtin_spec("s3-s3");
  finite::FiniteContext ctx(spec);
  testsupport::Rng rng(811);
  TreeVertex base[2] = {TreeVertex{0, {}}, TreeVertex{1, {}}};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<finite::FiniteFactorElement> w1, w2;
    for (size_t i = 0; i < rng() % 5; ++i) w1.push_back(random_felem(rng, spec));
    for (size_t i = 0; i < rng() % 5; ++i) w2.push_back(random_felem(rng, spec));
    auto g1 = normalize(ctx, w1), g2 = normalize(ctx, w2);
    auto q = nf_mul(ctx, nf_inv(ctx, g1), g2);
    for (int side = 0; side < 2; ++side) {
      bool same_rep = act(ctx, g1, base[side]) == act(ctx, g2, base[side]);
      bool same_coset =
          q.syl.empty() || (q.syl.size() == 1 && q.syl[0].factor == side);
      CHECK(same_rep == same_coset);
    }
  }
}

TEST_CASE("action on vertices and edges") {
  GammaContext ctx;
  TreeBall b2 = build_ball(ctx, 2);
  GammaNF e = nf_identity(ctx);
  for (const TreeVertex& v : b2.vertices) CHECK(act(ctx, e, v) == v);

  CHECK(act(ctx, gw(ctx, "g0"), TreeVertex{1, {}}) == TreeVertex{1, {Syllable{0, 1}}});
  CHECK(act(ctx, gw(ctx, "g0"), TreeVertex{0, {}}) == TreeVertex{0, {}});

  testsupport::Rng rng(812);
  for (int i = 0; i < 20; ++i) {
    GammaNF h = nf_embed_h(ctx, testsupport::random_portrait(rng, 3, 3));
    CHECK(act(ctx, h, TreeVertex{0, {}}) == TreeVertex{0, {}});
    CHECK(act(ctx, h, TreeVertex{1, {}}) == TreeVertex{1, {}});
  }

  // act(g*g', v) = act(g, act(g', v))
  std::vector<GammaNF> words{gw(ctx, "g0"), gw(ctx, "g1 h:1"), gw(ctx, "g0 g1 h:01"),
                             gw(ctx, "h:1 g0 g1 g0"), nf_embed_h(ctx, h0())};
  for (const GammaNF& g : words)
    for (const GammaNF& g2 : words)
      for (size_t vi = 0; vi < b2.vertices.size(); vi += 3) {
        const TreeVertex& v = b2.vertices[vi];
        CHECK(act(ctx, nf_mul(ctx, g, g2), v) == act(ctx, g, act(ctx, g2, v)));
      }

  for (const GammaNF& g : words) CHECK(action_preserves_adjacency(ctx, g, b2));
}

TEST_CASE("fixed points") {
  GammaContext ctx;
  TreeBall b3 = build_ball(ctx, 3);

  auto all = fixed_points(ctx, nf_identity(ctx), b3);
  CHECK(all.size() == b3.vertices.size());

  // a portrait supported in the (0) subtree fixes every vertex below the
  // factor-0 coset directions, and both base vertices
  GammaNF x = nf_embed_h(ctx, Portrait::parse("01"));
  auto fx = fixed_points(ctx, x, b3);
  std::set<TreeVertex> fset(fx.begin(), fx.end());
  for (const TreeVertex& v : b3.vertices)
    if (v.rep.empty() || v.rep[0].factor == 0) CHECK(fset.count(v) == 1);

  auto fg = fixed_points(ctx, gw(ctx, "g0"), b3);
  std::set<TreeVertex> gset(fg.begin(), fg.end());
  CHECK(gset.count(TreeVertex{0, {}}) == 1);
  CHECK(gset.count(TreeVertex{1, {}}) == 0);
}

TEST_CASE("nontrivial interior portraits move the far side") {
  GammaContext ctx;
  TreeBall balls[2] = {build_ball(ctx, 3), build_ball(ctx, 4)};
  for (const Portrait& h : Portrait::enumerate_truncation(2)) {
    if (h.is_identity() || !h.in_prefix_subgroup(BitWord::parse("0"))) continue;
    const TreeBall& ball = balls[h.depth() - 1];
    GammaNF x = nf_embed_h(ctx, h);
    bool moved_far = false;
    for (const TreeVertex& v : ball.vertices) {
      bool fixed = act(ctx, x, v) == v;
      if (v.rep.empty() || v.rep[0].factor == 0) {
        CHECK(fixed);
      } else if (!fixed) {
        moved_far = true;
      }
    }
    CHECK(moved_far);
  }
}

TEST_CASE("half trees") {
  GammaContext ctx;
  TreeBall b0 = build_ball(ctx, 0);
  TreeEdge base{};
  auto h0side = half_tree(b0, base, 0);
  REQUIRE(h0side.size() == 1);
  CHECK(h0side[0] == TreeVertex{0, {}});

  TreeBall b1 = build_ball(ctx, 1);
  auto toward0 = half_tree(b1, base, 0);
  auto toward1 = half_tree(b1, base, 1);
  REQUIRE(toward0.size() == 3);
  CHECK(toward0[0] == TreeVertex{0, {}});
  CHECK(toward0[1] == TreeVertex{1, {Syllable{0, 1}}});
  CHECK(toward0[2] == TreeVertex{1, {Syllable{0, 2}}});
  CHECK(toward1.size() == 3);
  std::set<TreeVertex> u(toward0.begin(), toward0.end());
  for (const TreeVertex& v : toward1) CHECK(u.insert(v).second);
  CHECK(u.size() == b1.vertices.size());

  TreeBall b3 = build_ball(ctx, 3);
  for (size_t ei = 0; ei < b3.edges.size(); ei += 7) {
    auto a = half_tree(b3, b3.edges[ei], 0);
    auto b = half_tree(b3, b3.edges[ei], 1);
    CHECK(a.size() + b.size() == b3.vertices.size());
  }

  CHECK_THROWS_AS(half_tree(b0, TreeEdge{{Syllable{0, 1}}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(half_tree(b0, base, 2), std::invalid_argument);
}

TEST_CASE("fixator membership") {
  GammaContext ctx;
  std::vector<Syllable> a0{Syllable{0, 1}}, b0p{Syllable{0, 2}}, a1{Syllable{1, 1}};

  CHECK(fixator_membership(ctx, nf_embed_h(ctx, Portrait::parse("01")), a0));
  CHECK_FALSE(fixator_membership(ctx, nf_embed_h(ctx, h1()), a0));
  CHECK(fixator_membership(ctx, nf_identity(ctx), a0));
  CHECK(fixator_membership(ctx, nf_identity(ctx), {}));
  CHECK_FALSE(fixator_membership(ctx, nf_embed_h(ctx, h0()), {}));
  CHECK_FALSE(fixator_membership(ctx, gw(ctx, "g0"), a0));
  // an element conjugated into the subtree fixator need not lie in H itself
  CHECK(fixator_membership(ctx, gw(ctx, "g0 h:1 g0"), a0));

  CHECK_THROWS_AS(fixator_membership(ctx, nf_identity(ctx), {Syllable{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixator_membership(ctx, nf_identity(ctx), {Syllable{0, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fixator_membership(ctx, nf_identity(ctx), {Syllable{0, 1}, Syllable{0, 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(fixator_membership(ctx, nf_identity(ctx), {Syllable{2, 1}}),
                  std::invalid_argument);
}

TEST_CASE("cylinder fixing matches the fixator predicate") {
  GammaContext ctx;
  TreeBall b4 = build_ball(ctx, 4);

  CHECK(cylinder_fix_check(ctx, nf_identity(ctx), {Syllable{0, 1}}, b4));
  CHECK_FALSE(cylinder_fix_check(ctx, nf_embed_h(ctx, h0()), {Syllable{1, 1}}, b4));

  testsupport::Rng rng(813);
  int agreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    GammaNF x = nf_embed_h(ctx, testsupport::random_portrait(rng, 2, 3));
    std::vector<Syllable> prefix = random_prefix(rng, 1 + int(rng() % 2));
    bool cyl = cylinder_fix_check(ctx, x, prefix, b4);
    bool fix = fixator_membership(ctx, x, prefix);
    REQUIRE(cyl == fix);
    agreements += int(cyl == fix);
  }
  CHECK(agreements == 1000);

  CHECK_THROWS_AS(
      cylinder_fix_check(ctx, nf_identity(ctx),
                         {Syllable{0, 1}, Syllable{1, 1}, Syllable{0, 1}, Syllable{1, 1}},
                         b4),
      std::invalid_argument);
}

TEST_CASE("interior witnesses") {
  GammaContext ctx;
  auto w0 = interior_witness(ctx, nf_embed_h(ctx, h0()), 3);
  REQUIRE(w0.has_value());
  CHECK(*w0 == std::vector<Syllable>{Syllable{0, 1}});

  auto w1 = interior_witness(ctx, nf_embed_h(ctx, h1()), 3);
  REQUIRE(w1.has_value());
  CHECK(*w1 == std::vector<Syllable>{Syllable{1, 1}});

  // g0 = (h(1)g0) h(1) (h(1)g0)^-1, so the b-coset direction witnesses it
  auto wg = interior_witness(ctx, gw(ctx, "g0"), 3);
  REQUIRE(wg.has_value());
  CHECK(*wg == std::vector<Syllable>{Syllable{0, 2}});

  CHECK_THROWS_AS(interior_witness(ctx, nf_identity(ctx), 3), std::invalid_argument);

  // trivial limit subgroups leave nothing to witness
  auto spec = finite::builtin_spec("s3-s3");
  finite::FiniteContext fctx(spec);
  auto rep = finite::k0k1_fixed_point(spec);
  auto k_member = [&rep](int k, int h) {
    const std::vector<int>& s = k ? rep.k1 : rep.k0;
    return std::binary_search(s.begin(), s.end(), h);
  };
  std::vector<NormalForm<finite::FiniteContext>> xs{nf_embed_h(fctx, 1),
                                                    transversal_words(fctx, 0, 1)[0],
                                                    transversal_words(fctx, 1, 2)[1]};
  for (const auto& x : xs) CHECK_FALSE(interior_witness(fctx, x, 4, k_member).has_value());
}

TEST_CASE("export and parse back") {
  GammaContext ctx;
  TreeBall b0 = build_ball(ctx, 0);
  CHECK(export_ball(b0, "dot") ==
        "graph {\n  \"v:0:-\" -- \"v:1:-\" [label=\"-\"];\n}\n");

  TreeBall b1 = build_ball(ctx, 1);
  std::string dot = export_ball(b1, "dot");
  CHECK(dot.rfind("graph {\n", 0) == 0);
  size_t edges = 0;
  for (size_t pos = dot.find(" -- "); pos != std::string::npos;
       pos = dot.find(" -- ", pos + 1))
    ++edges;
  CHECK(edges == 5);
  CHECK(export_ball(b1, "dot") == dot);

  TreeBall round = parse_ball_json(export_ball(b1, "json"));
  CHECK(round.radius == b1.radius);
  CHECK(round.vertices == b1.vertices);
  CHECK(round.edges == b1.edges);
  CHECK(round.adj == b1.adj);

  auto spec = finite::builtin_spec("z6-v4");
  finite::FiniteContext fctx(spec);
  TreeBall fb = build_ball(fctx, 2);
  TreeBall fround = parse_ball_json(export_ball(fb, "json"));
  CHECK(fround.vertices == fb.vertices);
  CHECK(fround.edges == fb.edges);

  CHECK_THROWS_AS(export_ball(b1, "xml"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ball_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ball_json("{\"radius\":1}"), std::invalid_argument);
}

}  // TEST_SUITE
