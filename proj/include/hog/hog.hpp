#ifndef HOG_HOG_HPP
#define HOG_HOG_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hog/bit_vector.hpp"
#include "hog/ehog.hpp"
#include "hog/overlap_oracle.hpp"
#include "hog/overlap_tree.hpp"
#include "hog/types.hpp"
#include "hog/word_set.hpp"

namespace hog {

struct MarkState {
  // Indexed by EHOG id; set iff the node is a word or a maximal overlap.
  BitVector bhog;
  // Most C vectors alive at once during the traversal.
  std::size_t peak_live = 0;
  std::size_t peak_pool_bytes = 0;
};

// Observation points inside the marking traversal, internal nodes only.
// after_merge sees C once every child has been folded in; after_update sees
// C after the node's rl list was applied.
struct MarkHooks {
  std::function<void(NodeId, const BitVector&)> after_merge;
  std::function<void(NodeId, const BitVector&)> after_update;
};

// Bottom-up marking of maximal overlaps over the EHOG, children in order.
// A node's C vector is the AND of its children's; each rl entry not yet
// resolved below marks the node. Runs on an explicit stack; a child's vector
// is handed to its parent or released as soon as the child completes.
// Throws std::invalid_argument if the suffix lists were not built.
MarkState mark_hog(const Ehog& ehog, const MarkHooks* hooks = nullptr);

struct Hog {
  OverlapTree tree;
  // HOG id -> EHOG id.
  std::vector<NodeId> ehog_node;
  // EHOG id -> HOG id, kNoNode when dropped.
  std::vector<NodeId> hog_node;
  // Whether epsilon is the maximal overlap of some pair. The root is kept
  // either way so the tree stays rooted.
  bool epsilon_is_max_overlap = false;
};

// Drops unmarked internal nodes (never the root) and reattaches tree and
// suffix arcs to the nearest kept node.
Hog contract(const Ehog& ehog, const MarkState& marks);

struct HogBuild {
  Ehog ehog;
  MarkState marks;
  Hog hog;
};

HogBuild build_hog_detailed(const StringSet& words, const MarkHooks* hooks = nullptr);
Hog build_hog(const StringSet& words);

// Rebuilds the overlap graph by walking each word's suffix chain and giving
// every not-yet-assigned leaf below a visited node that node's depth.
OverlapMatrix og_from_hog(const Hog& hog, const StringSet& words);

using WordPair = std::pair<WordIndex, WordIndex>;

// HOG node -> ordered pairs whose maximal overlap it spells. Nodes that are
// the maximal overlap of no pair are absent.
std::map<NodeId, std::vector<WordPair>> pairs_per_node(const Hog& hog,
                                                       const StringSet& words);

}  // namespace hog

#endif  // HOG_HOG_HPP
