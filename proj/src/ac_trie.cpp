#include "hog/ac_trie.hpp"

#include <algorithm>
#include <deque>

namespace hog {

Trie::Trie() { nodes_.emplace_back(); }

NodeId Trie::child(NodeId id, Symbol c) const {
  const auto& kids = nodes_[id].children;
  auto it = std::lower_bound(kids.begin(), kids.end(), c,
                             [](const auto& kv, Symbol s) { return kv.first < s; });
  return it != kids.end() && it->first == c ? it->second : kNoNode;
}

Trie build_trie(const StringSet& words) {
  Trie trie;
  trie.nodes_.reserve(words.norm() + 1);
  trie.word_leaf_.reserve(words.size());
  for (WordIndex w = 0; w < words.size(); ++w) {
    NodeId cur = Trie::root;
    for (unsigned char c : words[w]) {
      auto& kids = trie.nodes_[cur].children;
      auto it = std::lower_bound(kids.begin(), kids.end(), c,
                                 [](const auto& kv, Symbol s) { return kv.first < s; });
      if (it != kids.end() && it->first == c) {
        cur = it->second;
        continue;
      }
      auto next = static_cast<NodeId>(trie.nodes_.size());
      kids.insert(it, {c, next});
      TrieNode node;
      node.depth = trie.nodes_[cur].depth + 1;
      node.parent = cur;
      node.symbol = c;
      node.label_word = w;
      trie.nodes_.push_back(std::move(node));
      cur = next;
    }
    trie.nodes_[cur].leaf_word = w;
    trie.word_leaf_.push_back(cur);
  }
  return trie;
}

void compute_failure_links(Trie& trie) {
  auto& nodes = trie.nodes_;
  nodes[Trie::root].failure = Trie::root;
  std::deque<NodeId> queue;
  for (const auto& [c, id] : nodes[Trie::root].children) {
    nodes[id].failure = Trie::root;
    queue.push_back(id);
  }
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (const auto& [c, v] : nodes[u].children) {
      NodeId f = nodes[u].failure;
      NodeId target = trie.child(f, c);
      while (target == kNoNode && f != Trie::root) {
        f = nodes[f].failure;
        target = trie.child(f, c);
      }
      nodes[v].failure = target == kNoNode ? Trie::root : target;
      queue.push_back(v);
    }
  }
  trie.has_failure_links_ = true;
}

}  // namespace hog
