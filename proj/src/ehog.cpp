#include "hog/ehog.hpp"

#include <stdexcept>
#include <utility>

namespace hog {

std::size_t Ehog::rl_total() const {
  std::size_t total = 0;
  for (const auto& list : rl) total += list.size();
  return total;
}

std::size_t Ehog::memory_bytes() const {
  std::size_t bytes = tree.memory_bytes();
  bytes += rl.size() * sizeof(std::vector<WordIndex>) + rl_total() * sizeof(WordIndex);
  bytes += trie_node.size() * sizeof(NodeId);
  return bytes;
}

Ehog build_ehog(const Trie& trie, const StringSet& words) {
  if (!trie.has_failure_links())
    throw std::invalid_argument("build_ehog: trie has no failure links");

  Ehog ehog;
  std::vector<bool> keep(trie.size(), false);
  keep[Trie::root] = true;
  for (WordIndex w = 0; w < words.size(); ++w) {
    NodeId leaf = trie.leaf_of(w);
    keep[leaf] = true;
    // Chains merge; stop at the first node an earlier chain already kept.
    for (NodeId v = trie.node(leaf).failure; !keep[v]; v = trie.node(v).failure) {
      keep[v] = true;
      ++ehog.construction_visits;
    }
  }

  std::vector<NodeId> ehog_id(trie.size(), kNoNode);
  std::vector<TreeNode> nodes;
  // (trie node, nearest kept proper ancestor in EHOG ids)
  std::vector<std::pair<NodeId, NodeId>> stack{{Trie::root, kNoNode}};
  while (!stack.empty()) {
    auto [t, anchor] = stack.back();
    stack.pop_back();
    ++ehog.construction_visits;
    const TrieNode& tn = trie.node(t);
    if (keep[t]) {
      auto id = static_cast<NodeId>(nodes.size());
      ehog_id[t] = id;
      TreeNode node;
      node.depth = tn.depth;
      node.parent = anchor;
      node.leaf_word = tn.leaf_word;
      node.label_word = tn.label_word;
      nodes.push_back(std::move(node));
      ehog.trie_node.push_back(t);
      if (anchor != kNoNode) nodes[anchor].children.push_back(id);
      anchor = id;
    }
    for (auto it = tn.children.rbegin(); it != tn.children.rend(); ++it)
      stack.emplace_back(it->second, anchor);
  }

  for (NodeId u = 1; u < nodes.size(); ++u)
    nodes[u].suffix = ehog_id[trie.node(ehog.trie_node[u]).failure];

  ehog.tree = OverlapTree(std::move(nodes), words.size());
  ehog.rl.assign(ehog.tree.size(), {});
  return ehog;
}

void build_suffix_lists(Ehog& ehog, const StringSet& words) {
  ehog.rl.assign(ehog.tree.size(), {});
  for (WordIndex w = 0; w < words.size(); ++w) {
    NodeId v = ehog.tree.node(ehog.tree.leaf_of(w)).suffix;
    for (; v != kNoNode; v = ehog.tree.node(v).suffix) ehog.rl[v].push_back(w);
  }
  ehog.has_suffix_lists = true;
}

Ehog build_ehog(const StringSet& words) {
  Trie trie = build_trie(words);
  compute_failure_links(trie);
  Ehog ehog = build_ehog(trie, words);
  build_suffix_lists(ehog, words);
  return ehog;
}

}  // namespace hog
