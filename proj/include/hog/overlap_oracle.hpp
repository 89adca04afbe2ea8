#ifndef HOG_OVERLAP_ORACLE_HPP
#define HOG_OVERLAP_ORACLE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hog/types.hpp"
#include "hog/word_set.hpp"

namespace hog {

// n x n maximal overlap lengths, row = source word, column = target word.
class OverlapMatrix {
 public:
  OverlapMatrix() = default;
  explicit OverlapMatrix(std::size_t n) : n_(n), weights_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Length at(WordIndex from, WordIndex to) const { return weights_[from * n_ + to]; }
  Length& at(WordIndex from, WordIndex to) { return weights_[from * n_ + to]; }

  friend bool operator==(const OverlapMatrix&, const OverlapMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Length> weights_;
};

// Length of the longest proper suffix of `s` that is a proper prefix of `t`.
Length longest_overlap(std::string_view s, std::string_view t);

OverlapMatrix overlap_graph(const StringSet& words);

// Distinct maximal overlaps over all ordered pairs; "" stands for epsilon.
std::set<std::string> maximal_overlap_set(const StringSet& words);

// Every suffix-prefix overlap over all ordered pairs, maximal or not.
std::set<std::string> all_overlap_set(const StringSet& words);

}  // namespace hog

#endif  // HOG_OVERLAP_ORACLE_HPP
