#ifndef HOG_VERIFY_HPP
#define HOG_VERIFY_HPP

#include <string>
#include <vector>

#include "hog/ehog.hpp"
#include "hog/hog.hpp"
#include "hog/word_set.hpp"

namespace hog {

struct CheckResult {
  std::string name;
  bool passed = true;
  // First mismatch, empty on success.
  std::string detail;
};

// Internal EHOG labels equal the brute-force set of all overlaps.
bool ehog_equivalence_check(const Ehog& ehog, const StringSet& words);

CheckResult check_ehog_labels(const Ehog& ehog, const StringSet& words);
CheckResult check_hog_labels(const Hog& hog, const StringSet& words);
CheckResult check_suffix_lists(const Ehog& ehog, const StringSet& words);
// Every rl member overlaps every leaf below the node by at least its depth.
CheckResult check_rl_overlap_bound(const Ehog& ehog, const StringSet& words);
CheckResult check_og_matrix(const Hog& hog, const StringSet& words);
CheckResult check_pair_partition(const Hog& hog, const StringSet& words);
CheckResult check_space_bound(const MarkState& marks, const StringSet& words);

// Re-runs the marking with hooks and compares every C vector against the
// overlap matrix: after the merge C[w] must be "ov(w, l) > |u| for all leaves
// l below u", after the rl pass the same with >=.
CheckResult check_mark_invariants(const Ehog& ehog, const StringSet& words);

// Everything above on one instance. The invariant check is quadratic in the
// EHOG size per node, so it is opt-in.
std::vector<CheckResult> verify_instance(const StringSet& words, bool with_invariants);

}  // namespace hog

#endif  // HOG_VERIFY_HPP
