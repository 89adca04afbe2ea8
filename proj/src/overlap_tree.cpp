#include "hog/overlap_tree.hpp"

namespace hog {

OverlapTree::OverlapTree(std::vector<TreeNode> nodes, std::size_t word_count)
    : nodes_(std::move(nodes)), word_leaf_(word_count, kNoNode),
      subtree_end_(nodes_.size()) {
  for (NodeId u = 0; u < nodes_.size(); ++u) {
    subtree_end_[u] = u + 1;
    if (nodes_[u].leaf_word) word_leaf_[*nodes_[u].leaf_word] = u;
  }
  // Preorder: a node's subtree ends where its last child's subtree ends.
  for (NodeId u = static_cast<NodeId>(nodes_.size()); u-- > 0;)
    if (!nodes_[u].children.empty())
      subtree_end_[u] = subtree_end_[nodes_[u].children.back()];
}

std::vector<std::string> OverlapTree::internal_labels(const StringSet& words) const {
  std::vector<std::string> out;
  for (NodeId u = 0; u < nodes_.size(); ++u)
    if (!is_leaf(u)) out.emplace_back(label(u, words));
  return out;
}

std::size_t OverlapTree::memory_bytes() const {
  std::size_t bytes = nodes_.size() * sizeof(TreeNode);
  for (const auto& n : nodes_) bytes += n.children.size() * sizeof(NodeId);
  bytes += (word_leaf_.size() + subtree_end_.size()) * sizeof(NodeId);
  return bytes;
}

}  // namespace hog
