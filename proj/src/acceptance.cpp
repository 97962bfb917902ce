#include "amalgam/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>
#include <utility>

#include "amalgam/finite_invariants.hpp"
#include "amalgam/gamma_invariants.hpp"
#include "amalgam/gamma_tree.hpp"
#include "amalgam/invariants.hpp"
#include "amalgam/tree.hpp"

namespace amalgam {
namespace {

using namespace amalgam::gamma;

using Rng = std::mt19937_64;
using PSet = std::unordered_set<Portrait, PortraitHash>;

const BitWord kZero = BitWord(0, 1);
const BitWord kOne = BitWord(1, 1);

std::vector<BitWord> addresses_up_to(int max_len) {
  std::vector<BitWord> out;
  for (int len = 1; len <= max_len; ++len)
    for (uint32_t bits = 0; bits < (1u << len); ++bits) out.push_back(BitWord(bits, len));
  return out;
}

// All parameter words of length 0..max_len; the empty suffix instantiates the
// shortest member of each relation family.
std::vector<BitWord> suffixes_up_to(int max_len) {
  std::vector<BitWord> out{BitWord()};
  auto rest = addresses_up_to(max_len);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

BitWord random_address(Rng& rng, int max_len) {
  int len = 1 + int(rng() % uint64_t(max_len));
  return BitWord(uint32_t(rng()) & ((1u << len) - 1u), len);
}

Portrait random_portrait(Rng& rng, int max_depth, int factors) {
  Portrait p;
  for (int i = 0; i < factors; ++i) p = p * Portrait::swap_at(random_address(rng, max_depth));
  return p;
}

Word random_word(Rng& rng, int max_letters) {
  Word w;
  int n = 1 + int(rng() % uint64_t(max_letters));
  for (int i = 0; i < n; ++i) {
    switch (rng() % 3) {
      case 0: w.push_back(fe_transversal(0, 1)); break;
      case 1: w.push_back(fe_transversal(1, 1)); break;
      default: w.push_back(fe_embed(0, random_portrait(rng, 3, 2)));
    }
  }
  return w;
}

std::string counts(long instances, long failures) {
  std::ostringstream os;
  os << "instances=" << instances << " failures=" << failures;
  return os.str();
}

// 1. Every defining relation of the two vertex groups, instantiated over all
// parameter addresses of length <= 5, in portrait and coset-tag arithmetic.
CheckResult check_relations(uint64_t) {
  long instances = 0, failures = 0;
  auto addrs = addresses_up_to(5);

  for (const BitWord& w : addrs) {
    ++instances;
    if (!(Portrait::swap_at(w) * Portrait::swap_at(w)).is_identity()) ++failures;
  }
  // the pair family is oriented: the shorter address conjugates the longer;
  // only incomparable pairs commute
  for (const BitWord& u : addrs)
    for (const BitWord& w : addrs) {
      if (u.comparable(w) && !(u.size() < w.size() && w.has_prefix(u))) continue;
      ++instances;
      Portrait lhs = Portrait::swap_at(u) * Portrait::swap_at(w) * Portrait::swap_at(u);
      BitWord rhs = w.has_prefix(u) ? w.flip(u.size() + 1) : w;
      if (!(lhs == Portrait::swap_at(rhs))) ++failures;
    }

  for (int f : {0, 1}) {
    GammaFactorElement g = fe_transversal(f, 1);
    ++instances;
    if (!factor_mul(g, g).is_identity()) ++failures;
    GammaFactorElement gh = factor_mul(g, fe_embed(f, f == 0 ? h1() : h0()));
    ++instances;
    if (!factor_mul(factor_mul(gh, gh), gh).is_identity()) ++failures;
  }

  auto conj = [&](int f, const BitWord& w, const BitWord& expect) {
    GammaFactorElement g = fe_transversal(f, 1);
    ++instances;
    GammaFactorElement r = factor_mul(factor_mul(g, fe_embed(f, h_generator(w))), g);
    if (!(r == fe_embed(f, h_generator(expect)))) ++failures;
  };
  for (const BitWord& y : suffixes_up_to(4)) {
    conj(0, y.with_prefix(kZero), y.with_prefix(BitWord::parse("10")));
    conj(1, y.with_prefix(kOne), y.with_prefix(BitWord::parse("01")));
  }
  for (const BitWord& x : suffixes_up_to(3)) {
    conj(0, x.with_prefix(BitWord::parse("10")), x.with_prefix(kZero));
    conj(0, x.with_prefix(BitWord::parse("11")), x.with_prefix(BitWord::parse("11")));
    conj(1, x.with_prefix(BitWord::parse("01")), x.with_prefix(kOne));
    conj(1, x.with_prefix(BitWord::parse("00")), x.with_prefix(BitWord::parse("00")));
  }

  return {0, "defining relations over all addresses to depth 5", failures == 0,
          counts(instances, failures)};
}

// 2. Associativity, identity, and inverse laws on random triples in each
// arithmetic domain: portraits, both vertex groups, and normal forms.
CheckResult check_group_laws(uint64_t seed) {
  Rng rng(seed);
  long failures = 0;
  const int trials = 10000;

  for (int t = 0; t < trials; ++t) {
    Portrait a = random_portrait(rng, 6, 6), b = random_portrait(rng, 6, 6),
             c = random_portrait(rng, 6, 6);
    if (!((a * b) * c == a * (b * c))) ++failures;
    if (!(a * Portrait() == a) || !(Portrait() * a == a)) ++failures;
    if (!(a * a.inverse()).is_identity() || !(a.inverse() * a).is_identity()) ++failures;
  }

  for (int f : {0, 1}) {
    for (int t = 0; t < trials; ++t) {
      auto r = [&] {
        return GammaFactorElement{f, Tag(rng() % 3), random_portrait(rng, 4, 3)};
      };
      GammaFactorElement a = r(), b = r(), c = r();
      if (!(factor_mul(factor_mul(a, b), c) == factor_mul(a, factor_mul(b, c)))) ++failures;
      if (!(factor_mul(a, fe_identity(f)) == a) || !(factor_mul(fe_identity(f), a) == a))
        ++failures;
      if (!factor_mul(a, factor_inv(a)).is_identity() ||
          !factor_mul(factor_inv(a), a).is_identity())
        ++failures;
    }
  }

  GammaContext ctx;
  for (int t = 0; t < trials; ++t) {
    GammaNF a = normalize_word(ctx, random_word(rng, 6));
    GammaNF b = normalize_word(ctx, random_word(rng, 6));
    GammaNF c = normalize_word(ctx, random_word(rng, 6));
    if (!nf_equal(ctx, nf_mul(ctx, nf_mul(ctx, a, b), c), nf_mul(ctx, a, nf_mul(ctx, b, c))))
      ++failures;
    if (!nf_equal(ctx, nf_mul(ctx, a, nf_identity(ctx)), a)) ++failures;
    if (!nf_is_identity(ctx, nf_mul(ctx, a, nf_inv(ctx, a)))) ++failures;
  }

  return {0, "group laws on random triples in all four arithmetic domains", failures == 0,
          counts(4 * trials, failures)};
}

// 3. Random products in either vertex group land on one of the three coset
// tags, all tags are realized, and the tag form agrees with the normal-form
// engine's independent reduction of the same letters.
CheckResult check_coset_tags(uint64_t seed) {
  Rng rng(seed);
  GammaContext ctx;
  long failures = 0;
  long tally[2][3] = {};
  const int trials = 10000;

  for (int f : {0, 1}) {
    for (int t = 0; t < trials; ++t) {
      int n = 1 + int(rng() % 6);
      GammaFactorElement prod = fe_identity(f);
      Word letters;
      for (int i = 0; i < n; ++i) {
        GammaFactorElement letter = (rng() % 2) == 0
                                        ? fe_transversal(f, 1)
                                        : fe_embed(f, random_portrait(rng, 3, 2));
        prod = factor_mul(prod, letter);
        letters.push_back(letter);
      }
      ++tally[f][int(prod.tag)];
      GammaNF direct;
      if (prod.tag != Tag::E) direct.syl.push_back(Syllable{f, int(prod.tag)});
      direct.tail = prod.h;
      if (!nf_equal(ctx, normalize_word(ctx, letters), direct)) ++failures;
    }
  }

  bool all_realized = true;
  for (int f : {0, 1})
    for (int tag = 0; tag < 3; ++tag) all_realized = all_realized && tally[f][tag] > 0;

  std::ostringstream os;
  os << "tags e/a/b factor0=" << tally[0][0] << "/" << tally[0][1] << "/" << tally[0][2]
     << " factor1=" << tally[1][0] << "/" << tally[1][1] << "/" << tally[1][2]
     << " failures=" << failures;
  return {0, "factor words reduce onto the three coset tags", failures == 0 && all_realized,
          os.str()};
}

// 4. Depth-3 census of the first two conjugation filters, against the
// product-subgroup membership profile and the 0<->1 mirror.
CheckResult check_chain_census(uint64_t) {
  bool ok = true;
  auto chain0 = c_chain_truncated(0, 3, 2);
  auto chain1 = c_chain_truncated(1, 3, 2);
  ok = ok && chain0.size() == 3 && chain1.size() == 3;
  const size_t expect[3] = {16384, 8192, 2048};
  for (int k = 0; ok && k < 3; ++k)
    ok = chain0[size_t(k)].size() == expect[k] && chain1[size_t(k)].size() == expect[k];

  if (ok) {
    PSet lvl1(chain0[1].begin(), chain0[1].end());
    PSet lvl2(chain0[2].begin(), chain0[2].end());
    for (const Portrait& h : Portrait::enumerate_truncation(3)) {
      bool p1 = h.in_product_subgroup({{kZero, 1}, {kOne, 2}});
      bool p2 = h.in_product_subgroup({{kZero, 1}, {kOne, 3}});
      if (p1 != (lvl1.count(h) == 1) || p2 != (lvl2.count(h) == 1)) ok = false;
    }
    for (int k = 1; k < 3; ++k) {
      PSet mirrored;
      for (const Portrait& h : chain0[size_t(k)]) mirrored.insert(h.mirrored());
      PSet other(chain1[size_t(k)].begin(), chain1[size_t(k)].end());
      if (mirrored != other) ok = false;
    }
  }

  std::ostringstream os;
  os << "levels";
  for (const auto& lvl : chain0) os << " " << lvl.size();
  return {0, "depth-3 filter census matches the product-subgroup profile", ok, os.str()};
}

// 5. Depth-3 limit classification: the factor-0 limit is exactly the
// (0)-prefix subgroup slice, nothing is left undecided, and the two-sided
// intersection collapses to the identity.
CheckResult check_limits(uint64_t) {
  bool ok = true;
  auto rep = k0_truncated(3, 6);
  ok = ok && rep.entries.size() == 16384 && rep.undecided() == 0;
  auto inc = rep.included();
  ok = ok && inc.size() == 128;
  size_t slice = 0;
  for (const Portrait& h : Portrait::enumerate_truncation(3))
    if (h.in_prefix_subgroup(kZero)) ++slice;
  ok = ok && slice == 128;
  for (const Portrait& h : inc) ok = ok && h.in_prefix_subgroup(kZero);

  auto kt = kernel_truncated(3, 6);
  ok = ok && kt.undecided == 0 && kt.elements.size() == 1 && kt.elements[0].is_identity();

  std::ostringstream os;
  os << "included=" << inc.size() << " undecided=" << rep.undecided()
     << " intersection=" << kt.elements.size();
  return {0, "depth-3 limits: clean classification, trivial intersection", ok, os.str()};
}

// 6. The sign character: invariance over relation instances to depth 4, the
// displayed kernel generators all map to the identity, full four-value image.
CheckResult check_sign_character(uint64_t) {
  GammaContext ctx;
  long instances = 0, failures = 0;

  auto addrs = addresses_up_to(4);
  for (const BitWord& u : addrs)
    for (const BitWord& w : addrs) {
      if (u.comparable(w) && !(u.size() < w.size() && w.has_prefix(u))) continue;
      ++instances;
      BitWord rhs = w.has_prefix(u) ? w.flip(u.size() + 1) : w;
      if (!(theta_h(u) * theta_h(w) * theta_h(u) == theta_h(rhs))) ++failures;
    }
  auto conj = [&](int f, const BitWord& w, const BitWord& expect) {
    ++instances;
    if (!(theta_g(f) * theta_h(w) * theta_g(f) == theta_h(expect))) ++failures;
  };
  for (const BitWord& y : suffixes_up_to(3)) {
    conj(0, y.with_prefix(kZero), y.with_prefix(BitWord::parse("10")));
    conj(1, y.with_prefix(kOne), y.with_prefix(BitWord::parse("01")));
  }
  for (const BitWord& x : suffixes_up_to(2)) {
    conj(0, x.with_prefix(BitWord::parse("10")), x.with_prefix(kZero));
    conj(0, x.with_prefix(BitWord::parse("11")), x.with_prefix(BitWord::parse("11")));
    conj(1, x.with_prefix(BitWord::parse("01")), x.with_prefix(kOne));
    conj(1, x.with_prefix(BitWord::parse("00")), x.with_prefix(BitWord::parse("00")));
  }
  for (int f : {0, 1}) {
    ThetaValue g = theta_g(f), h = theta_h(f == 0 ? kOne : kZero);
    ++instances;
    if (!(g * g).is_identity()) ++failures;
    ThetaValue cube = g * h * g * h * g * h;
    ++instances;
    if (!cube.is_identity()) ++failures;
  }

  // displayed kernel generators: pair products with an address-parity shift,
  // plus the four mixed two-letter words
  std::vector<Word> kernel_gens;
  auto add_pair = [&](const Portrait& lead, const BitWord& addr) {
    kernel_gens.push_back({fe_embed(0, lead), fe_embed(0, h_generator(addr))});
  };
  for (const BitWord& y : addresses_up_to(3)) {
    bool even = y.size() % 2 == 0;
    if (even) add_pair(h0(), y.with_prefix(kZero));
    if (!even) add_pair(h0(), y.with_prefix(kOne));
    if (even) add_pair(h1(), y.with_prefix(kOne));
    if (!even) add_pair(h1(), y.with_prefix(kZero));
  }
  kernel_gens.push_back({fe_embed(0, h0()), fe_transversal(1, 1)});
  kernel_gens.push_back({fe_transversal(1, 1), fe_embed(0, h0())});
  kernel_gens.push_back({fe_embed(0, h1()), fe_transversal(0, 1)});
  kernel_gens.push_back({fe_transversal(0, 1), fe_embed(0, h1())});
  for (const Word& w : kernel_gens) {
    ++instances;
    if (!theta_word(w).is_identity()) ++failures;
    ++instances;
    if (!in_gamma_prime(normalize_word(ctx, w))) ++failures;
  }

  std::set<std::pair<int, int>> image;
  for (const Portrait& h : Portrait::enumerate_truncation(2)) {
    ThetaValue v = theta_portrait(h);
    image.insert({v.s0, v.s1});
  }
  for (int f : {0, 1}) {
    ThetaValue g = theta_g(f);
    image.insert({g.s0, g.s1});
    ThetaValue m = g * theta_h(kZero);
    image.insert({m.s0, m.s1});
  }

  std::ostringstream os;
  os << counts(instances, failures) << " image=" << image.size();
  return {0, "sign character: relation invariance, kernel generators, full image",
          failures == 0 && image.size() == 4, os.str()};
}

// 7. The finite classifier on the built-in amalgams: trivial-kernel shape
// with a verified witness, the two nontrivial-kernel shapes, and kernel
// triviality of the quotient amalgam.
CheckResult check_finite_classifier(uint64_t) {
  bool ok = true;
  std::ostringstream os;

  auto s3 = finite::builtin_spec("s3-s3");
  auto crep = finite::classify_finite_H(s3);
  ok = ok && crep.ker_trivial && crep.kernel.ker == std::vector<int>{0};
  ok = ok && crep.c_trivial_at.has_value() && crep.conjugator_witness.has_value();
  ok = ok && !crep.witness_bound_exhausted && crep.fc_equals_ker && crep.all_equivalent;
  if (crep.conjugator_witness.has_value()) {
    finite::FiniteContext ctx(s3);
    const auto& g = *crep.conjugator_witness;
    for (int h = 1; h < s3.h_order(); ++h) {
      auto moved = nf_mul(ctx, nf_mul(ctx, nf_inv(ctx, g), nf_embed_h(ctx, h)), g);
      ok = ok && !nf_in_h(moved);
    }
  }
  os << "s3-s3 ker=" << crep.kernel.ker.size();

  auto z46 = finite::builtin_spec("z4-z6");
  auto crep46 = finite::classify_finite_H(z46);
  ok = ok && !crep46.ker_trivial && crep46.kernel.ker == std::vector<int>{0, 1};
  ok = ok && !crep46.c_trivial_at.has_value() && !crep46.conjugator_witness.has_value();
  ok = ok && crep46.witness_proven_absent && !crep46.witness_bound_exhausted;
  ok = ok && crep46.fc_equals_ker && crep46.all_equivalent;
  os << " z4-z6 ker=" << crep46.kernel.ker.size();

  auto z6v4 = finite::builtin_spec("z6-v4");
  auto crep64 = finite::classify_finite_H(z6v4);
  ok = ok && !crep64.ker_trivial && int(crep64.kernel.ker.size()) == z6v4.h_order();
  ok = ok && crep64.witness_proven_absent && crep64.fc_equals_ker && crep64.all_equivalent;
  os << " z6-v4 ker=" << crep64.kernel.ker.size() << "/" << z6v4.h_order();

  auto q = finite::quotient_amalgam(z46, crep46.kernel.ker);
  auto crepq = finite::classify_finite_H(q);
  ok = ok && crepq.ker_trivial && crepq.all_equivalent;
  os << " quotient ker=" << crepq.kernel.ker.size();

  return {0, "finite classifier shapes on the builtin amalgams", ok, os.str()};
}

// 8. Conjugating a family out of the subgroup: verified success on the
// trivial-kernel amalgam, certified bounded failure on a limit element.
CheckResult check_conjugate_out(uint64_t) {
  bool ok = true;
  std::ostringstream os;

  auto s3 = finite::builtin_spec("s3-s3");
  finite::FiniteContext fctx(s3);
  std::vector<NormalForm<finite::FiniteContext>> F;
  for (int h = 1; h < s3.h_order(); ++h) F.push_back(nf_embed_h(fctx, h));
  auto res = conjugate_out(fctx, F, 6);
  ok = ok && res.success;
  if (res.success)
    for (const auto& f : F) {
      auto moved = nf_mul(fctx, nf_mul(fctx, res.conjugator, f), nf_inv(fctx, res.conjugator));
      ok = ok && !nf_in_h(moved);
    }
  os << "s3-s3 steps=" << res.steps.size();

  GammaContext gctx;
  auto stuck = conjugate_out(gctx, {nf_embed_h(gctx, h0())}, 6);
  ok = ok && !stuck.success && stuck.stuck_index == 0 && stuck.steps.empty() &&
       stuck.bound == 6;
  os << " limit-element stuck_index=" << stuck.stuck_index << " bound=" << stuck.bound;

  return {0, "conjugating families out: success and failure certificates", ok, os.str()};
}

// 9. Radius-4 coset tree: tree shape, 3-regular interior growth, subtree
// pointwise fixing by prefix-supported elements, and agreement between the
// cylinder sweep and the fixator predicate.
CheckResult check_tree_geometry(uint64_t seed) {
  Rng rng(seed);
  GammaContext ctx;
  bool ok = true;

  TreeBall b4 = build_ball(ctx, 4);
  ok = ok && tree_check(b4) && b4.edges.size() + 1 == b4.vertices.size();
  std::vector<int> d0 = ball_distances(b4, 0), d1 = ball_distances(b4, 1);
  for (size_t i = 0; i < b4.vertices.size(); ++i)
    ok = ok && b4.adj[i].size() == (std::min(d0[i], d1[i]) < 4 ? 3u : 1u);
  for (int r = 1; r <= 4; ++r) {
    long expect = 3L << (r - 1);
    ok = ok && std::count(d0.begin(), d0.end(), r) == expect &&
         std::count(d1.begin(), d1.end(), r) == expect;
  }

  std::vector<Portrait> pool;
  for (const Portrait& h : Portrait::enumerate_truncation(2))
    if (!h.is_identity() && h.in_prefix_subgroup(kZero)) pool.push_back(h);
  long moved_hits = 0;
  for (int t = 0; t < 20; ++t) {
    const Portrait& p = pool[rng() % pool.size()];
    GammaNF x = nf_embed_h(ctx, p);
    int rb = p.depth() + 2;
    bool moved = false;
    for (size_t i = 0; i < b4.vertices.size(); ++i) {
      const TreeVertex& v = b4.vertices[i];
      bool fixed = act(ctx, x, v) == v;
      if (v.rep.empty() || v.rep[0].factor == 0) {
        ok = ok && fixed;
      } else if (!fixed && std::min(d0[i], d1[i]) <= rb) {
        moved = true;
      }
    }
    ok = ok && moved;
    moved_hits += int(moved);
  }

  long agreements = 0;
  const int pairs = 1000;
  for (int t = 0; t < pairs; ++t) {
    GammaNF x = nf_embed_h(ctx, random_portrait(rng, 2, 3));
    std::vector<Syllable> prefix;
    int len = 1 + int(rng() % 2), f = int(rng() % 2);
    for (int i = 0; i < len; ++i) {
      prefix.push_back(Syllable{f, 1 + int(rng() % 2)});
      f = 1 - f;
    }
    agreements += int(cylinder_fix_check(ctx, x, prefix, b4) ==
                      gamma::fixator_membership(ctx, x, prefix));
  }
  ok = ok && agreements == pairs;

  std::ostringstream os;
  os << "vertices=" << b4.vertices.size() << " moved=" << moved_hits << "/20"
     << " agreements=" << agreements << "/" << pairs;
  return {0, "radius-4 coset tree geometry and subtree fixators", ok, os.str()};
}

// 10. Structural identities: the truncations are generated by the two limit
// slices, limit membership matches the cross-factor conjugation relation,
// and the order-3 pair stays free to the bound.
CheckResult check_structural(uint64_t) {
  GammaContext ctx;
  bool gen = interior_generation_check(1) && interior_generation_check(2) &&
             interior_generation_check(3);
  bool rel = k0k1_relation_check(2, 6);
  bool freepair = free_pair_check(ctx, normalize_word(ctx, parse_word("g0 h:1")),
                                  normalize_word(ctx, parse_word("g1 h:0")), 6);
  std::ostringstream os;
  os << "generation=" << (gen ? "yes" : "no") << " relation=" << (rel ? "yes" : "no")
     << " free-pair=" << (freepair ? "yes" : "no");
  return {0, "interior generation, limit relation, free order-3 pair", gen && rel && freepair,
          os.str()};
}

using CheckFn = CheckResult (*)(uint64_t);

constexpr CheckFn kChecks[] = {
    check_relations,      check_group_laws,  check_coset_tags,
    check_chain_census,   check_limits,      check_sign_character,
    check_finite_classifier, check_conjugate_out, check_tree_geometry,
    check_structural,
};
constexpr int kCheckCount = int(sizeof(kChecks) / sizeof(kChecks[0]));

}  // namespace

CheckResult run_check(int number, uint64_t seed) {
  if (number < 1 || number > kCheckCount)
    throw std::invalid_argument("run_check: number out of range");
  CheckResult r = kChecks[number - 1](seed * 1000003ULL + uint64_t(number));
  r.number = number;
  return r;
}

std::vector<CheckResult> run_acceptance(uint64_t seed, int jobs) {
  auto out = std::vector<CheckResult>(size_t(kCheckCount));
  // every check derives its own stream from the seed, so execution order
  // cannot affect the results
  auto run_one = [&](int i) { out[size_t(i)] = run_check(i + 1, seed); };
  if (jobs <= 1) {
    for (int i = 0; i < kCheckCount; ++i) run_one(i);
    return out;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < kCheckCount; i = next.fetch_add(1)) run_one(i);
  };
  std::vector<std::thread> threads;
  int width = std::min(jobs, kCheckCount);
  threads.reserve(size_t(width));
  for (int i = 0; i < width; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_acceptance(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const CheckResult& r : results) {
    os << (r.pass ? "[PASS]" : "[FAIL]") << " " << (r.number < 10 ? " " : "") << r.number
       << " " << r.name;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace amalgam
