#ifndef HOG_AC_TRIE_HPP
#define HOG_AC_TRIE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hog/types.hpp"
#include "hog/word_set.hpp"

namespace hog {

struct TrieNode {
  Length depth = 0;
  NodeId parent = kNoNode;
  Symbol symbol = 0;
  // Sorted by symbol.
  std::vector<std::pair<Symbol, NodeId>> children;
  NodeId failure = kNoNode;
  std::optional<WordIndex> leaf_word;
  // Some word whose prefix of length `depth` spells this node.
  WordIndex label_word = kNoWord;
};

// Aho-Corasick goto tree plus failure links. Node 0 is the root (epsilon).
// The goto function is not completed into an automaton.
class Trie {
 public:
  static constexpr NodeId root = 0;

  Trie();

  const TrieNode& node(NodeId id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<TrieNode>& nodes() const { return nodes_; }

  NodeId child(NodeId id, Symbol c) const;
  NodeId leaf_of(WordIndex word) const { return word_leaf_[word]; }
  bool has_failure_links() const { return has_failure_links_; }

  std::string_view label(NodeId id, const StringSet& words) const {
    if (id == root) return {};
    return std::string_view(words[nodes_[id].label_word]).substr(0, nodes_[id].depth);
  }

 private:
  friend Trie build_trie(const StringSet& words);
  friend void compute_failure_links(Trie& trie);

  std::vector<TrieNode> nodes_;
  std::vector<NodeId> word_leaf_;
  bool has_failure_links_ = false;
};

// Goto arcs only; failure ids left unset.
Trie build_trie(const StringSet& words);

// Breadth-first failure assignment; failure(root) = root.
void compute_failure_links(Trie& trie);

}  // namespace hog

#endif  // HOG_AC_TRIE_HPP
