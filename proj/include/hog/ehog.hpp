#ifndef HOG_EHOG_HPP
#define HOG_EHOG_HPP

#include <cstddef>
#include <vector>

#include "hog/ac_trie.hpp"
#include "hog/overlap_tree.hpp"
#include "hog/types.hpp"
#include "hog/word_set.hpp"

namespace hog {

// Extended HOG: the trie contracted to P plus every suffix-prefix overlap.
struct Ehog {
  OverlapTree tree;
  // rl[u]: ascending indices of the words having u as a proper suffix.
  // Empty for leaves and until build_suffix_lists runs.
  std::vector<std::vector<WordIndex>> rl;
  // EHOG id -> trie id.
  std::vector<NodeId> trie_node;
  // Trie nodes touched while marking and contracting.
  std::size_t construction_visits = 0;
  bool has_suffix_lists = false;

  std::size_t rl_total() const;
  std::size_t memory_bytes() const;
};

// Keeps the root, the leaves and every node on a leaf's failure chain, then
// contracts goto arcs and failure links onto the kept nodes.
// Throws std::invalid_argument if the trie lacks failure links.
Ehog build_ehog(const Trie& trie, const StringSet& words);

// Walks each leaf's suffix chain (starting past the leaf) and appends the
// word index to every node on it, leaves in index order.
void build_suffix_lists(Ehog& ehog, const StringSet& words);

// Trie, failure links, contraction and suffix lists in one go.
Ehog build_ehog(const StringSet& words);

}  // namespace hog

#endif  // HOG_EHOG_HPP
