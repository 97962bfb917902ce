#pragma once

#include <optional>
#include <vector>

#include "amalgam/gamma_amalgam.hpp"
#include "amalgam/tree.hpp"

namespace amalgam::gamma {

// The limit subgroups of the portrait amalgam are the two level-one prefix
// subgroups, so membership is a support check.
inline bool limit_subgroup_member(int k, const Portrait& h) {
  return h.in_prefix_subgroup(BitWord(uint32_t(k), 1));
}

inline bool fixator_membership(const GammaContext& ctx, const GammaNF& x,
                               const std::vector<Syllable>& prefix) {
  return amalgam::fixator_membership(ctx, x, prefix, limit_subgroup_member);
}

inline std::optional<std::vector<Syllable>> interior_witness(const GammaContext& ctx,
                                                             const GammaNF& x,
                                                             int max_prefix_len) {
  return amalgam::interior_witness(ctx, x, max_prefix_len, limit_subgroup_member);
}

}  // namespace amalgam::gamma
