#include "doctest.h"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/finite_amalgam.hpp"
#include "amalgam/finite_group.hpp"
#include "amalgam/nf.hpp"
#include "support.hpp"
#include "support_finite.hpp"

using namespace amalgam;
using namespace amalgam::finite;
using testsupport::oracle_kernel;

namespace {

FiniteFactorElement random_felem(testsupport::Rng& rng, const AmalgamSpec& spec) {
  int f = int(rng() % 2);
  return FiniteFactorElement{f, int(rng() % uint64_t(spec.g[f]->order()))};
}

std::string z4z6_json() {
  return R"({
    "g0": {"perms": [[1, 2, 3, 0]]},
    "g1": {"perms": [[1, 2, 3, 4, 5, 0]]},
    "h_gens_in_g0": [[2, 3, 0, 1]],
    "h_gens_in_g1": [[3, 4, 5, 0, 1, 2]]
  })";
}

}  // namespace

TEST_SUITE("finite") {

TEST_CASE("permutation arithmetic") {
  Perm id = perm_identity(3);
  Perm s = {1, 0, 2};
  Perm c = {1, 2, 0};
  CHECK(perm_mul(s, s) == id);
  CHECK(perm_mul(c, perm_mul(c, c)) == id);
  CHECK(perm_inv(c) == Perm{2, 0, 1});
  CHECK(perm_mul(s, c) != perm_mul(c, s));
  CHECK(perm_label(id) == "e");
  CHECK(perm_label(s) == "(0 1)");
  CHECK(perm_label(Perm{1, 0, 3, 2}) == "(0 1)(2 3)");
  CHECK(is_permutation(c));
  CHECK_FALSE(is_permutation(Perm{0, 0, 1}));
  CHECK_FALSE(is_permutation(Perm{0, 3}));
}

TEST_CASE("closure enumeration") {
  FiniteGroup z2 = FiniteGroup::closure_from_generators({{1, 0, 2}});
  CHECK(z2.order() == 2);

  FiniteGroup s3 = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK(s3.label(0) == "e");

  FiniteGroup trivial = FiniteGroup::closure_from_generators({});
  CHECK(trivial.order() == 1);

  // Group laws over the whole table.
  for (int a = 0; a < s3.order(); ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == 0);
    CHECK(s3.mul(0, a) == a);
    for (int b = 0; b < s3.order(); ++b)
      for (int c = 0; c < s3.order(); ++c)
        CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
  }

  // Deterministic indexing across rebuilds.
  FiniteGroup again = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  for (int i = 0; i < s3.order(); ++i) CHECK(s3.perm(i) == again.perm(i));

  CHECK_THROWS_AS(FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}}, 3),
                  std::runtime_error);
  CHECK_THROWS_AS(FiniteGroup::closure_from_generators({{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::closure_from_generators({{1, 0}, {1, 2, 0}}),
                  std::invalid_argument);
}

TEST_CASE("closure cap honors the environment override") {
  CHECK(closure_cap() == 10000);
  setenv("AMALGAM_MAX_CLOSURE", "5", 1);
  CHECK(closure_cap() == 5);
  CHECK_THROWS_AS(FiniteGroup::closure_from_generators({{1, 2, 3, 4, 5, 0}}),
                  std::runtime_error);
  unsetenv("AMALGAM_MAX_CLOSURE");
  CHECK(closure_cap() == 10000);
}

TEST_CASE("subgroups, conjugates, intersections") {
  FiniteGroup s3 = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  int swap01 = s3.index_of({1, 0, 2});
  int swap02 = s3.index_of({2, 1, 0});
  int swap12 = s3.index_of({0, 2, 1});
  int cyc = s3.index_of({1, 2, 0});
  REQUIRE(swap01 > 0);
  REQUIRE(cyc > 0);

  Subgroup h01 = subgroup_from_generators(s3, {swap01});
  CHECK(h01.order() == 2);
  CHECK(is_subgroup_closed(h01));
  CHECK_FALSE(is_normal(s3, h01));

  Subgroup a3 = subgroup_from_generators(s3, {cyc});
  CHECK(a3.order() == 3);
  CHECK(is_normal(s3, a3));
  CHECK(conjugate_subgroup(s3, swap01, a3).elems == a3.elems);

  // (0 1 2) <(0 1)> (0 2 1) = <(1 2)>.
  Subgroup conj = conjugate_subgroup(s3, cyc, h01);
  CHECK(conj.order() == 2);
  CHECK(conj.contains(swap12));

  Subgroup h02 = subgroup_from_generators(s3, {swap02});
  Subgroup meet = subgroup_intersection(h01, h02);
  CHECK(meet.order() == 1);
  CHECK(subgroup_intersection(h01, h01).elems == h01.elems);
  CHECK(subgroup_intersection(h01, trivial_subgroup(s3)).order() == 1);

  FiniteGroup other = FiniteGroup::closure_from_generators({{1, 0}});
  Subgroup foreign = full_subgroup(other);
  CHECK_THROWS_AS(subgroup_intersection(h01, foreign), std::invalid_argument);
}

TEST_CASE("normal core") {
  FiniteGroup s3 = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  Subgroup h01 = subgroup_from_generators(s3, {s3.index_of({1, 0, 2})});
  CHECK(normal_core(s3, h01).order() == 1);

  Subgroup a3 = subgroup_from_generators(s3, {s3.index_of({1, 2, 0})});
  CHECK(normal_core(s3, a3).elems == a3.elems);

  FiniteGroup z4 = FiniteGroup::closure_from_generators({{1, 2, 3, 0}});
  Subgroup z2 = subgroup_from_generators(z4, {z4.index_of({2, 3, 0, 1})});
  CHECK(normal_core(z4, z2).elems == z2.elems);
}

TEST_CASE("coset transversal and decomposition") {
  FiniteGroup s3 = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  Subgroup h01 = subgroup_from_generators(s3, {s3.index_of({1, 0, 2})});
  CosetTable t = coset_transversal(s3, h01);
  REQUIRE(t.reps.size() == 3);
  CHECK(t.reps[0] == 0);

  for (int g = 0; g < s3.order(); ++g) {
    auto [c, h] = t.decompose(g);
    CHECK(h01.contains(h));
    CHECK(s3.mul(t.reps[size_t(c)], h) == g);
    // Canonical rep is the smallest element index in the coset.
    CHECK(t.reps[size_t(c)] <= g);
  }

  CosetTable whole = coset_transversal(s3, full_subgroup(s3));
  CHECK(whole.reps.size() == 1);

  FiniteGroup other = FiniteGroup::closure_from_generators({{1, 0}});
  CHECK_THROWS_AS(coset_transversal(s3, full_subgroup(other)), std::invalid_argument);
}

TEST_CASE("quotient groups") {
  FiniteGroup z4 = FiniteGroup::closure_from_generators({{1, 2, 3, 0}});
  Subgroup z2 = subgroup_from_generators(z4, {z4.index_of({2, 3, 0, 1})});
  Quotient q = quotient_group(z4, z2);
  CHECK(q.group.order() == 2);

  FiniteGroup s3 = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  Subgroup a3 = subgroup_from_generators(s3, {s3.index_of({1, 2, 0})});
  Quotient qs = quotient_group(s3, a3);
  CHECK(qs.group.order() == 2);
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b)
      CHECK(qs.proj[size_t(s3.mul(a, b))] ==
            qs.group.mul(qs.proj[size_t(a)], qs.proj[size_t(b)]));

  Quotient same = quotient_group(s3, trivial_subgroup(s3));
  CHECK(same.group.order() == 6);

  Subgroup h01 = subgroup_from_generators(s3, {s3.index_of({1, 0, 2})});
  CHECK_THROWS_AS(quotient_group(s3, h01), std::invalid_argument);
}

TEST_CASE("amalgam spec validation") {
  AmalgamSpec s3s3 = builtin_spec("s3-s3");
  CHECK(s3s3.g[0]->order() == 6);
  CHECK(s3s3.g[1]->order() == 6);
  CHECK(s3s3.h_order() == 2);
  CHECK(s3s3.h[0] == std::pair{0, 0});

  // The embedding pairing is an isomorphism on both coordinates.
  FiniteContext ctx(s3s3);
  for (int a = 0; a < s3s3.h_order(); ++a)
    for (int b = 0; b < s3s3.h_order(); ++b) {
      int ab = ctx.h_mul(a, b);
      CHECK(s3s3.g[1]->mul(s3s3.h_elem(1, a), s3s3.h_elem(1, b)) == s3s3.h_elem(1, ab));
    }

  // Order-2 generator matched to an order-3 one cannot extend.
  FiniteGroup s3 = FiniteGroup::closure_from_generators({{1, 0, 2}, {1, 2, 0}});
  CHECK_THROWS_WITH_AS(
      make_amalgam(s3, s3, {{1, 0, 2}}, {{1, 2, 0}}),
      doctest::Contains("generator pair 0"), std::invalid_argument);

  // Collapsing map Z4 -> Z2 is a homomorphism but not injective.
  FiniteGroup z4 = FiniteGroup::closure_from_generators({{1, 2, 3, 0}});
  FiniteGroup z2 = FiniteGroup::closure_from_generators({{1, 0}});
  CHECK_THROWS_AS(make_amalgam(z4, z2, {{1, 2, 3, 0}}, {{1, 0}}), std::invalid_argument);

  // Generator missing from its claimed factor group.
  CHECK_THROWS_AS(make_amalgam(z4, z2, {{1, 0, 3, 2}}, {{1, 0}}), std::invalid_argument);

  CHECK_THROWS_AS(make_amalgam(z4, z2, {{2, 3, 0, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_spec("nope"), std::invalid_argument);
}

TEST_CASE("json spec loading") {
  AmalgamSpec loaded = load_amalgam_json_text(z4z6_json());
  AmalgamSpec builtin = builtin_spec("z4-z6");
  CHECK(loaded.g[0]->order() == builtin.g[0]->order());
  CHECK(loaded.g[1]->order() == builtin.g[1]->order());
  CHECK(loaded.h_order() == builtin.h_order());
  CHECK(loaded.h == builtin.h);

  CHECK_THROWS_AS(load_amalgam_json_text(R"({"g0": {"perms": []}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_amalgam_json_text(
                      R"({"g0": {"perms": [[0, 0]]}, "g1": {"perms": []},
                          "h_gens_in_g0": [], "h_gens_in_g1": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_amalgam_json_file("/nonexistent/spec.json"), std::invalid_argument);
}

TEST_CASE("builtin spec shapes") {
  AmalgamSpec s3s3 = builtin_spec("s3-s3");
  FiniteContext c0(s3s3);
  CHECK(c0.index_of_h(0) == 3);
  CHECK(c0.index_of_h(1) == 3);
  CHECK(nondegeneracy_check(c0) == std::optional<bool>(true));

  AmalgamSpec z4z6 = builtin_spec("z4-z6");
  FiniteContext c1(z4z6);
  CHECK(z4z6.g[0]->order() == 4);
  CHECK(z4z6.g[1]->order() == 6);
  CHECK(z4z6.h_order() == 2);
  CHECK(c1.index_of_h(0) == 2);
  CHECK(c1.index_of_h(1) == 3);
  CHECK(nondegeneracy_check(c1) == std::optional<bool>(true));

  AmalgamSpec z6v4 = builtin_spec("z6-v4");
  FiniteContext c2(z6v4);
  CHECK(z6v4.g[0]->order() == 6);
  CHECK(z6v4.g[1]->order() == 4);
  CHECK(z6v4.h_order() == 2);
  CHECK(c2.index_of_h(0) == 3);
  CHECK(c2.index_of_h(1) == 2);
  CHECK(nondegeneracy_check(c2) == std::optional<bool>(true));
}

TEST_CASE("engine over finite contexts") {
  testsupport::Rng rng(511);
  for (const std::string& name : builtin_spec_names()) {
    AmalgamSpec spec = builtin_spec(name);
    FiniteContext ctx(spec);

    for (int trial = 0; trial < 120; ++trial) {
      std::vector<FiniteFactorElement> wu, wv;
      for (uint64_t i = rng() % 6; i > 0; --i) wu.push_back(random_felem(rng, spec));
      for (uint64_t i = rng() % 6; i > 0; --i) wv.push_back(random_felem(rng, spec));
      auto x = normalize(ctx, wu);
      auto y = normalize(ctx, wv);
      auto xy = wu;
      xy.insert(xy.end(), wv.begin(), wv.end());
      REQUIRE(nf_equal(ctx, nf_mul(ctx, x, y), normalize(ctx, xy)));
      CHECK(nf_is_identity(ctx, nf_mul(ctx, x, nf_inv(ctx, x))));
    }

    // Single-factor words agree with the multiplication table.
    for (int f : {0, 1})
      for (int trial = 0; trial < 60; ++trial) {
        std::vector<FiniteFactorElement> w;
        int acc = 0;
        for (uint64_t i = 1 + rng() % 5; i > 0; --i) {
          int e = int(rng() % uint64_t(spec.g[f]->order()));
          w.push_back(FiniteFactorElement{f, e});
          acc = spec.g[f]->mul(acc, e);
        }
        auto nf = normalize(ctx, w);
        auto [c, h] = ctx.decompose(FiniteFactorElement{f, acc});
        if (c == 0) {
          REQUIRE(nf_in_h(nf));
          CHECK(nf.tail == h);
        } else {
          REQUIRE(nf.syl.size() == 1);
          CHECK(nf.syl[0] == Syllable{f, c});
          CHECK(nf.tail == h);
        }
      }
  }

  // Transversal word counts follow the coset indices.
  FiniteContext s3(builtin_spec("s3-s3"));
  CHECK(transversal_words(s3, 0, 2).size() == 4);
  FiniteContext z4z6(builtin_spec("z4-z6"));
  CHECK(transversal_words(z4z6, 0, 1).size() == 1);
  CHECK(transversal_words(z4z6, 0, 2).size() == 2);
  CHECK(transversal_words(z4z6, 1, 2).size() == 2);
}

TEST_CASE("kernel oracle on the builtin specs") {
  // Swapped-in S3 pair: only the identity survives conjugation both ways.
  CHECK(oracle_kernel(builtin_spec("s3-s3")) == std::vector{0});

  // Central Z2 in both Z4 and Z6: the whole subgroup is the kernel.
  AmalgamSpec z4z6 = builtin_spec("z4-z6");
  CHECK(oracle_kernel(z4z6) == std::vector{0, 1});

  // Direct-factor embedding: H normal in both factors.
  CHECK(oracle_kernel(builtin_spec("z6-v4")) == std::vector{0, 1});
}

TEST_CASE("quotient amalgam") {
  AmalgamSpec z4z6 = builtin_spec("z4-z6");
  AmalgamSpec q = quotient_amalgam(z4z6, {0, 1});
  CHECK(q.g[0]->order() == 2);
  CHECK(q.g[1]->order() == 3);
  CHECK(q.h_order() == 1);
  FiniteContext qc(q);
  CHECK(qc.index_of_h(0) == 2);
  CHECK(qc.index_of_h(1) == 3);
  CHECK(oracle_kernel(q) == std::vector{0});

  // Quotient by the trivial subgroup preserves everything.
  AmalgamSpec same = quotient_amalgam(z4z6, {0});
  CHECK(same.g[0]->order() == 4);
  CHECK(same.g[1]->order() == 6);
  CHECK(same.h_order() == 2);

  // H = <(0 1)> is not normal in S3.
  CHECK_THROWS_AS(quotient_amalgam(builtin_spec("s3-s3"), {0, 1}), std::invalid_argument);

  AmalgamSpec z6v4 = builtin_spec("z6-v4");
  AmalgamSpec q2 = quotient_amalgam(z6v4, {0, 1});
  CHECK(q2.g[0]->order() == 3);
  CHECK(q2.g[1]->order() == 2);
  CHECK(q2.h_order() == 1);
  CHECK(oracle_kernel(q2) == std::vector{0});

  CHECK_THROWS_AS(quotient_amalgam(z4z6, {1}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_amalgam(z4z6, {0, 7}), std::invalid_argument);
}

}  // TEST_SUITE
