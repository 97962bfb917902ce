#include <set>
#include <stdexcept>

#include "amalgam/portrait.hpp"
#include "doctest.h"
#include "support.hpp"

using amalgam::BitWord;
using amalgam::Portrait;
using testsupport::all_addresses;
using testsupport::random_address;
using testsupport::random_portrait;
using testsupport::Rng;

namespace {

BitWord bw(const char* s) { return BitWord::parse(s); }
Portrait h(const char* s) { return Portrait::swap_at(bw(s)); }

}  // namespace

TEST_SUITE("portraits") {

TEST_CASE("swap generators and the tree action") {
  Portrait e;
  CHECK(e.is_identity());
  CHECK(e.apply(bw("011")) == bw("011"));

  Portrait h0 = h("0");
  CHECK(h0.apply(bw("001")) == bw("011"));
  CHECK(h0.apply(bw("10")) == bw("10"));
  CHECK(h0.apply(bw("0")) == bw("0"));
  CHECK((h0 * h0).is_identity());
  CHECK(h("10") != h("01"));
  CHECK(h0.depth() == 1);
  CHECK(h("101").depth() == 3);
}

TEST_CASE("action is a bijection on each level") {
  Rng rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    Portrait p = random_portrait(rng, 4, 8);
    for (int len = 1; len <= 4; ++len) {
      std::set<BitWord> images;
      for (const BitWord& w : all_addresses(len, len)) {
        BitWord r = p.apply(w);
        CHECK(r.size() == len);
        images.insert(r);
      }
      CHECK(images.size() == size_t(1) << len);
    }
  }
}

TEST_CASE("composition matches the left action") {
  Rng rng(2027);
  std::vector<BitWord> probes = all_addresses(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Portrait p = random_portrait(rng, 4, 6);
    Portrait q = random_portrait(rng, 4, 6);
    Portrait pq = p * q;
    for (const BitWord& w : probes) CHECK(pq.apply(w) == p.apply(q.apply(w)));
  }
}

TEST_CASE("generator conjugation example") {
  CHECK(h("0") * h("00") * h("0") == h("01"));
  CHECK(h("0") * h("1") == h("1") * h("0"));
}

TEST_CASE("presentation relations over all short generator pairs") {
  std::vector<BitWord> gens = all_addresses(1, 5);
  for (const BitWord& u : gens) {
    CHECK((Portrait::swap_at(u) * Portrait::swap_at(u)).is_identity());
    for (const BitWord& w : gens) {
      if (u == w) continue;
      Portrait lhs = Portrait::swap_at(u) * Portrait::swap_at(w) * Portrait::swap_at(u);
      if (w.has_prefix(u)) {
        CHECK(lhs == Portrait::swap_at(w.flip(u.size() + 1)));
      } else if (!u.comparable(w)) {
        CHECK(lhs == Portrait::swap_at(w));
      }
    }
  }
}

TEST_CASE("inverses") {
  CHECK(Portrait().inverse().is_identity());
  CHECK(h("10").inverse() == h("10"));

  Rng rng(2028);
  for (int trial = 0; trial < 1000; ++trial) {
    Portrait p = random_portrait(rng, 5, 6);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
  for (int trial = 0; trial < 200; ++trial) {
    Portrait p = random_portrait(rng, 4, 5);
    Portrait q = random_portrait(rng, 4, 5);
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
  }
}

TEST_CASE("faithfulness at depth") {
  // A stored address moves exactly the strict descendants of its vertex, so a
  // non-identity portrait is guaranteed to move something one level below its
  // deepest stored address, and may fix everything at its own depth.
  for (const Portrait& p : Portrait::enumerate_truncation(2)) {
    bool moves = false;
    for (const BitWord& w : all_addresses(1, p.depth() + 1))
      if (p.apply(w) != w) { moves = true; break; }
    CHECK(moves == !p.is_identity());
  }
  CHECK(h("00").apply(bw("00")) == bw("00"));
  CHECK(h("00").apply(bw("001")) == bw("000"));
}

TEST_CASE("truncation enumeration") {
  auto b1 = Portrait::enumerate_truncation(1);
  REQUIRE(b1.size() == 4);
  std::set<Portrait> s1(b1.begin(), b1.end());
  CHECK(s1.size() == 4);
  CHECK(s1.count(Portrait()) == 1);
  CHECK(s1.count(h("0")) == 1);
  CHECK(s1.count(h("1")) == 1);
  CHECK(s1.count(h("0") * h("1")) == 1);

  auto b2 = Portrait::enumerate_truncation(2);
  REQUIRE(b2.size() == 64);
  std::set<Portrait> s2(b2.begin(), b2.end());
  CHECK(s2.size() == 64);
  CHECK(Portrait::enumerate_truncation(3).size() == 16384);

  SUBCASE("deterministic order") {
    CHECK(Portrait::enumerate_truncation(2) == b2);
  }
  SUBCASE("closure under product and inverse") {
    for (const Portrait& p : b2) {
      CHECK(s2.count(p.inverse()) == 1);
      for (const Portrait& q : b2) CHECK(s2.count(p * q) == 1);
    }
  }
  SUBCASE("depth bound rejected") {
    CHECK_THROWS_AS(Portrait::enumerate_truncation(4), std::invalid_argument);
  }
}

TEST_CASE("section") {
  CHECK(h("01").section(bw("0")) == h("1"));
  CHECK(h("1").section(bw("0")).is_identity());
  CHECK(h("0").section(bw("0")) == Portrait::swap_at(BitWord()));

  Rng rng(2029);
  for (int trial = 0; trial < 100; ++trial) {
    Portrait p = random_portrait(rng, 4, 6);
    CHECK(p.section(BitWord()) == p);
  }

  CHECK_THROWS_AS(h("0").section(bw("00")), std::invalid_argument);
}

TEST_CASE("shift_prefix") {
  CHECK(h("101").shift_prefix(bw("10"), bw("0")) == h("01"));
  CHECK(Portrait().shift_prefix(bw("0"), bw("11")).is_identity());

  Rng rng(2030);
  for (int trial = 0; trial < 200; ++trial) {
    // Random element of the prefix-(0) subgroup.
    Portrait p;
    for (int i = 0; i < 5; ++i)
      p = p * Portrait::swap_at(random_address(rng, 0, 3).with_prefix(bw("0")));
    Portrait q;
    for (int i = 0; i < 5; ++i)
      q = q * Portrait::swap_at(random_address(rng, 0, 3).with_prefix(bw("0")));
    CHECK(p.shift_prefix(bw("0"), bw("10")).shift_prefix(bw("10"), bw("0")) == p);
    // Homomorphism onto the image subgroup.
    CHECK((p * q).shift_prefix(bw("0"), bw("10")) ==
          p.shift_prefix(bw("0"), bw("10")) * q.shift_prefix(bw("0"), bw("10")));
  }

  CHECK_THROWS_AS(h("10").shift_prefix(bw("0"), bw("1")), std::invalid_argument);
}

TEST_CASE("prefix subgroup membership") {
  CHECK(h("01").in_prefix_subgroup(bw("0"), 1));
  CHECK_FALSE(h("1").in_prefix_subgroup(bw("1"), 2));
  CHECK(Portrait().in_prefix_subgroup(bw("1"), 3));

  Rng rng(2031);
  for (int trial = 0; trial < 100; ++trial) {
    BitWord w = random_address(rng, 1, 2);
    Portrait p;
    for (int i = 0; i < 20; ++i)
      p = p * Portrait::swap_at(random_address(rng, 0, 3).with_prefix(w));
    CHECK(p.in_prefix_subgroup(w, w.size()));
  }
}

TEST_CASE("product subgroup membership") {
  using PC = Portrait::PrefixClass;
  std::vector<PC> h0_h21 = {{bw("0"), 1}, {bw("1"), 2}};
  CHECK((h("0") * h("11")).in_product_subgroup(h0_h21));
  CHECK_FALSE(h("1").in_product_subgroup(h0_h21));
  CHECK(Portrait().in_product_subgroup(h0_h21));
  CHECK_THROWS_AS(h("0").in_product_subgroup({{bw("0"), 1}, {bw("01"), 2}}),
                  std::invalid_argument);
}

TEST_CASE("text round trip") {
  Portrait p = Portrait::parse("0;101");
  CHECK(p == h("0") * h("101"));
  CHECK(p.str() == "0;101");
  CHECK(Portrait().str() == "e");
  CHECK(Portrait::parse("e").is_identity());
  CHECK(Portrait::parse("").is_identity());

  Rng rng(2032);
  for (int trial = 0; trial < 300; ++trial) {
    Portrait q = random_portrait(rng, 5, 7);
    CHECK(Portrait::parse(q.str()) == q);
  }

  CHECK_THROWS_AS(Portrait::parse("0;;1"), std::invalid_argument);
  CHECK_THROWS_AS(Portrait::parse("2"), std::invalid_argument);
  CHECK_THROWS_AS(Portrait::parse("0;0"), std::invalid_argument);
}

}
