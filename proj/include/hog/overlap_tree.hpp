#ifndef HOG_OVERLAP_TREE_HPP
#define HOG_OVERLAP_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hog/types.hpp"
#include "hog/word_set.hpp"

namespace hog {

struct TreeNode {
  Length depth = 0;
  // Longest proper prefix that is a node (tree arc).
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  // Longest proper suffix that is a node; kNoNode on the root.
  NodeId suffix = kNoNode;
  std::optional<WordIndex> leaf_word;
  WordIndex label_word = kNoWord;
};

// Node/arc layout shared by the EHOG and the HOG. Ids are in preorder with
// children visited in symbol order, so the root is 0, children lists are
// sorted, and every subtree occupies the id range [u, subtree_end(u)).
class OverlapTree {
 public:
  static constexpr NodeId root = 0;

  OverlapTree() = default;
  OverlapTree(std::vector<TreeNode> nodes, std::size_t word_count);

  const TreeNode& node(NodeId id) const { return nodes_[id]; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  bool is_leaf(NodeId id) const { return nodes_[id].leaf_word.has_value(); }
  NodeId leaf_of(WordIndex word) const { return word_leaf_[word]; }
  NodeId subtree_end(NodeId id) const { return subtree_end_[id]; }
  std::size_t leaf_count() const { return word_leaf_.size(); }
  // Internal nodes, root included.
  std::size_t internal_count() const { return nodes_.size() - word_leaf_.size(); }

  std::string_view label(NodeId id, const StringSet& words) const {
    if (nodes_[id].label_word == kNoWord) return {};
    return std::string_view(words[nodes_[id].label_word]).substr(0, nodes_[id].depth);
  }

  // Labels of internal nodes (root included as "").
  std::vector<std::string> internal_labels(const StringSet& words) const;

  // Approximate bytes held by the node records, for space instrumentation.
  std::size_t memory_bytes() const;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<NodeId> word_leaf_;
  std::vector<NodeId> subtree_end_;
};

}  // namespace hog

#endif  // HOG_OVERLAP_TREE_HPP
