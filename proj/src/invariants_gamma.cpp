#include "amalgam/gamma_invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace amalgam::gamma {

std::vector<Portrait> TruncationReport::included() const {
  std::vector<Portrait> out;
  for (const TruncEntry& e : entries)
    if (e.status == TruncStatus::Included) out.push_back(e.h);
  return out;
}

int TruncationReport::undecided() const {
  int n = 0;
  for (const TruncEntry& e : entries)
    if (e.status == TruncStatus::Undecided) ++n;
  return n;
}

TruncationReport k_truncated(int j, int depth, int max_len) {
  if (j != 0 && j != 1) throw std::invalid_argument("k_truncated: factor must be 0 or 1");
  if (max_len < 1 || max_len > 8)
    throw std::invalid_argument("k_truncated: conjugator bound must be 1..8");
  GammaContext ctx;
  TruncationReport rep;
  rep.depth = depth;
  rep.max_len = max_len;
  rep.j = j;
  BitWord jp(uint32_t(j), 1);
  for (const Portrait& h : Portrait::enumerate_truncation(depth)) {
    TruncEntry e;
    e.h = h;
    // an element of depth d that fails the limit criterion is expelled well
    // before level 2d+2, so surviving deeper sweeps adds no information
    int bound = std::min(max_len, 2 * h.depth() + 2);
    e.status = TruncStatus::Undecided;
    for (int k = 1; k <= bound; ++k)
      if (!c_jk_membership(ctx, h, j, k)) {
        e.status = TruncStatus::Excluded;
        e.excluded_at = k;
        break;
      }
    if (e.status == TruncStatus::Undecided && h.in_prefix_subgroup(jp))
      e.status = TruncStatus::Included;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

KernelTruncation kernel_truncated(int depth, int max_len) {
  TruncationReport rep = k_truncated(0, depth, max_len);
  std::unordered_map<Portrait, TruncStatus, PortraitHash> status;
  for (const TruncEntry& e : rep.entries) status.emplace(e.h, e.status);
  KernelTruncation out;
  for (const TruncEntry& e : rep.entries) {
    // membership in K_1 mirrors membership in K_0
    TruncStatus m = status.at(e.h.mirrored());
    if (e.status == TruncStatus::Excluded || m == TruncStatus::Excluded) continue;
    if (e.status == TruncStatus::Included && m == TruncStatus::Included)
      out.elements.push_back(e.h);
    else
      ++out.undecided;
  }
  return out;
}

std::vector<std::vector<Portrait>> c_chain_truncated(int j, int depth, int max_k) {
  if (j != 0 && j != 1)
    throw std::invalid_argument("c_chain_truncated: factor must be 0 or 1");
  if (max_k < 0 || max_k > 8)
    throw std::invalid_argument("c_chain_truncated: level bound must be 0..8");
  GammaContext ctx;
  std::vector<std::vector<Portrait>> levels;
  levels.push_back(Portrait::enumerate_truncation(depth));
  for (int k = 1; k <= max_k; ++k) {
    std::vector<Portrait> next;
    for (const Portrait& h : levels.back())
      if (c_jk_membership(ctx, h, j, k)) next.push_back(h);
    levels.push_back(std::move(next));
  }
  return levels;
}

bool k0k1_relation_check(int depth, int max_len) {
  if (depth < 0 || depth > 2)
    throw std::invalid_argument("k0k1_relation_check: depth must be 0..2");
  TruncationReport rep0 = k_truncated(0, depth, max_len);
  TruncationReport rep1 = k_truncated(1, depth + 1, max_len);
  if (rep0.undecided() > 0 || rep1.undecided() > 0) return false;
  std::unordered_set<Portrait, PortraitHash> s0, s1;
  for (const Portrait& h : rep0.included()) s0.insert(h);
  for (const Portrait& h : rep1.included()) s1.insert(h);
  for (const Portrait& h : Portrait::enumerate_truncation(depth)) {
    bool lhs = s0.count(h) != 0;
    bool rhs = true;
    for (int idx : {1, 2}) {
      GammaFactorElement s = fe_transversal(0, idx);
      GammaFactorElement c = factor_mul(factor_mul(factor_inv(s), fe_embed(0, h)), s);
      if (!c.in_h() || s1.count(c.h) == 0) {
        rhs = false;
        break;
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool interior_generation_check(int depth) {
  if (depth < 1 || depth > 3)
    throw std::invalid_argument("interior_generation_check: depth must be 1..3");
  std::vector<Portrait> all = Portrait::enumerate_truncation(depth);
  std::vector<Portrait> gens;
  for (const Portrait& h : all)
    if (!h.is_identity() && (h.in_prefix_subgroup(BitWord(0, 1)) ||
                             h.in_prefix_subgroup(BitWord(1, 1))))
      gens.push_back(h);
  std::unordered_set<Portrait, PortraitHash> seen;
  seen.insert(Portrait());
  std::vector<Portrait> frontier{Portrait()};
  while (!frontier.empty()) {
    std::vector<Portrait> next;
    for (const Portrait& x : frontier)
      for (const Portrait& g : gens) {
        Portrait p = x * g;  // depth never grows, so the product stays in the truncation
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size() == all.size();
}

}  // namespace amalgam::gamma
