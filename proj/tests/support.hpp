#ifndef HOG_TESTS_SUPPORT_HPP
#define HOG_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hog/overlap_tree.hpp"
#include "hog/word_set.hpp"

namespace hog::testing {

inline StringSet aabaa_words() { return StringSet({"aabaa", "aacd", "cdb"}); }
inline StringSet tattatt_words() { return StringSet({"tattatt", "ctattat", "gtattat", "cctat"}); }
inline StringSet bcbcb_words() { return StringSet({"bcbcb", "baba", "abcba", "abab"}); }

// Substring-free by filtering; alphabet 2..4, 1..8 words, lengths 1..12.
class RandomInstances {
 public:
  explicit RandomInstances(std::uint32_t seed) : rng_(seed) {}

  StringSet next(std::size_t max_words = 8, std::size_t max_length = 12) {
    std::uniform_int_distribution<int> sigma_dist(2, 4);
    std::uniform_int_distribution<std::size_t> count_dist(1, max_words);
    std::uniform_int_distribution<std::size_t> len_dist(1, max_length);
    int sigma = sigma_dist(rng_);
    std::uniform_int_distribution<int> sym(0, sigma - 1);
    std::vector<std::string> raw(count_dist(rng_));
    for (auto& w : raw) {
      w.resize(len_dist(rng_));
      for (auto& c : w) c = static_cast<char>('a' + sym(rng_));
    }
    return normalize(std::move(raw), ContainmentPolicy::filter);
  }

 private:
  std::mt19937 rng_;
};

inline std::set<std::string> prefix_set(const StringSet& words) {
  std::set<std::string> out;
  for (const auto& w : words.words())
    for (std::size_t k = 1; k <= w.size(); ++k) out.insert(w.substr(0, k));
  return out;
}

// Longest proper suffix of x that is a prefix of some word ("" if none).
inline std::string naive_failure(std::string_view x, const std::set<std::string>& prefixes) {
  for (std::size_t k = x.size() - 1; k > 0; --k) {
    std::string suffix(x.substr(x.size() - k));
    if (prefixes.count(suffix)) return suffix;
  }
  return {};
}

inline NodeId find_label(const OverlapTree& tree, const StringSet& words,
                         std::string_view label) {
  for (NodeId u = 0; u < tree.size(); ++u)
    if (tree.label(u, words) == label) return u;
  return kNoNode;
}

inline std::set<std::string> internal_label_set(const OverlapTree& tree,
                                                const StringSet& words) {
  std::set<std::string> out;
  for (auto& s : tree.internal_labels(words)) out.insert(std::move(s));
  return out;
}

// 1-based pairs, as written in the figures.
inline std::vector<std::pair<WordIndex, WordIndex>> one_based(
    std::vector<std::pair<WordIndex, WordIndex>> pairs) {
  for (auto& [i, j] : pairs) {
    ++i;
    ++j;
  }
  return pairs;
}

}  // namespace hog::testing

#endif  // HOG_TESTS_SUPPORT_HPP
