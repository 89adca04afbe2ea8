#include "hog/overlap_oracle.hpp"

#include <algorithm>

namespace hog {

Length longest_overlap(std::string_view s, std::string_view t) {
  std::size_t k = std::min(s.size(), t.size());
  if (k == 0) return 0;
  for (--k; k > 0; --k)
    if (s.substr(s.size() - k) == t.substr(0, k)) return static_cast<Length>(k);
  return 0;
}

OverlapMatrix overlap_graph(const StringSet& words) {
  OverlapMatrix m(words.size());
  for (WordIndex i = 0; i < words.size(); ++i)
    for (WordIndex j = 0; j < words.size(); ++j)
      m.at(i, j) = longest_overlap(words[i], words[j]);
  return m;
}

std::set<std::string> maximal_overlap_set(const StringSet& words) {
  std::set<std::string> out;
  for (WordIndex i = 0; i < words.size(); ++i)
    for (WordIndex j = 0; j < words.size(); ++j)
      out.insert(words[j].substr(0, longest_overlap(words[i], words[j])));
  return out;
}

std::set<std::string> all_overlap_set(const StringSet& words) {
  std::set<std::string> out;
  for (const std::string& s : words.words()) {
    for (const std::string& t : words.words()) {
      std::size_t limit = std::min(s.size(), t.size());
      for (std::size_t k = 0; k < limit; ++k) {
        std::string_view suffix = std::string_view(s).substr(s.size() - k);
        if (t.compare(0, k, suffix) == 0) out.emplace(suffix);
      }
    }
  }
  return out;
}

}  // namespace hog
