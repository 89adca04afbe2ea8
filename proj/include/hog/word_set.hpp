#ifndef HOG_WORD_SET_HPP
#define HOG_WORD_SET_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hog/types.hpp"

namespace hog {

enum class InputFormat { lines, fasta };
enum class ContainmentPolicy { reject, filter };

// Ordered, duplicate-free, substring-free set of non-empty words.
// Indices are 0-based; anything user facing adds 1.
class StringSet {
 public:
  StringSet() = default;

  // Throws validation_error unless `words` already satisfies every invariant.
  explicit StringSet(std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }
  const std::string& operator[](WordIndex i) const { return words_[i]; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  // Sum of word lengths.
  std::size_t norm() const { return norm_; }
  std::size_t max_length() const { return max_length_; }
  // Distinct symbols, ascending.
  const std::vector<Symbol>& alphabet() const { return alphabet_; }

  friend bool operator==(const StringSet& a, const StringSet& b) {
    return a.words_ == b.words_;
  }

 private:
  std::vector<std::string> words_;
  std::vector<Symbol> alphabet_;
  std::size_t norm_ = 0;
  std::size_t max_length_ = 0;
};

// Decodes raw words in file order. Throws format_error.
std::vector<std::string> parse_words(std::istream& input, InputFormat format);
std::vector<std::string> parse_words(std::string_view input, InputFormat format);

// filter: drop duplicates (first kept), then drop words contained in another.
// reject: throw validation_error naming the first offending pair.
StringSet normalize(std::vector<std::string> raw, ContainmentPolicy policy);

InputFormat parse_input_format(std::string_view name);
ContainmentPolicy parse_containment_policy(std::string_view name);

}  // namespace hog

#endif  // HOG_WORD_SET_HPP
