#pragma once

#include <vector>

#include "amalgam/gamma_amalgam.hpp"
#include "amalgam/invariants.hpp"

namespace amalgam::gamma {

enum class TruncStatus { Included, Excluded, Undecided };

struct TruncEntry {
  Portrait h;
  TruncStatus status = TruncStatus::Undecided;
  int excluded_at = -1;  // smallest conjugator length whose sweep expelled h
};

struct TruncationReport {
  int depth = 0;
  int max_len = 0;
  int j = 0;
  std::vector<TruncEntry> entries;  // truncation enumeration order

  std::vector<Portrait> included() const;
  int undecided() const;
};

// Classifies every portrait of the depth-limited subgroup truncation against
// the limit subgroup K_j: an element either fails the conjugation-into-H sweep
// at some level k (Excluded, with the first such k recorded) or survives every
// level up to its bound. Survivors are Included when the (j)-prefix support
// criterion confirms the limit membership and Undecided otherwise, so a clean
// report never takes the criterion on faith.
TruncationReport k_truncated(int j, int depth, int max_len);
inline TruncationReport k0_truncated(int depth, int max_len) {
  return k_truncated(0, depth, max_len);
}

struct KernelTruncation {
  std::vector<Portrait> elements;
  int undecided = 0;
};

// Intersection of the two limit subgroups within the depth-limited truncation,
// computed from the factor-0 sweep and its 0<->1 mirror image.
KernelTruncation kernel_truncated(int depth, int max_len);

// Survivor sets of the cumulative conjugation filters, one per level
// 0..max_k, within the depth-limited truncation. Level 0 is the whole
// truncation; level k keeps the elements conjugated into H by every word of
// type (j,n) for all n <= k.
std::vector<std::vector<Portrait>> c_chain_truncated(int j, int depth, int max_k);

// Membership in K_0 agrees, element by element of the truncation, with both
// factor-0 coset representatives conjugating the element into K_1. The K_1
// side is swept one level deeper since conjugation can raise depth by one,
// hence depth <= 2. False as soon as either sweep leaves an element
// undecided.
bool k0k1_relation_check(int depth, int max_len);

// The depth-limited truncation is generated by its intersections with the
// two level-one prefix subgroups, taken as literal generator sets.
// depth 1..3.
bool interior_generation_check(int depth);

}  // namespace amalgam::gamma
