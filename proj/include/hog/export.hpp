#ifndef HOG_EXPORT_HPP
#define HOG_EXPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hog/ac_trie.hpp"
#include "hog/ehog.hpp"
#include "hog/hog.hpp"
#include "hog/instance_gen.hpp"
#include "hog/overlap_oracle.hpp"
#include "hog/word_set.hpp"

namespace hog {

using Json = nlohmann::ordered_json;

inline constexpr int kStatsSchema = 1;

// DOT conventions: solid arcs are goto/tree arcs, dashed red arcs are
// failure/suffix links, words are doublecircles, the root is labelled ε.
void write_trie_dot(std::ostream& os, const Trie& trie, const StringSet& words);
// Internal nodes carry their rl list in brackets, 1-based.
void write_ehog_dot(std::ostream& os, const Ehog& ehog, const StringSet& words);
// A root that is not a maximal overlap is drawn dotted.
void write_hog_dot(std::ostream& os, const Hog& hog, const StringSet& words);

Json trie_stats_json(const Trie& trie, const StringSet& words);
Json ehog_stats_json(const Ehog& ehog, const StringSet& words);
Json hog_stats_json(const HogBuild& build, const StringSet& words);

// Header row and column carry 1-based word indices.
void write_matrix_tsv(std::ostream& os, const OverlapMatrix& m);
Json matrix_json(const OverlapMatrix& m);

// One row per internal EHOG node, in the order the marking completes them.
struct TraceRow {
  NodeId node = kNoNode;
  std::string label;
  std::vector<WordIndex> rl;
  std::string c_before;
  std::string c_after;
  bool bhog = false;
  std::vector<WordPair> pairs;
};

std::vector<TraceRow> trace_mark_hog(const StringSet& words);
// Columns: node, rl, c_before, c_after, bhog, pairs. Word 1 is leftmost in C.
void write_trace_tsv(std::ostream& os, const std::vector<TraceRow>& rows);

Json size_report_json(const SizeReport& r, const StringSet& words);
void write_size_report_tsv(std::ostream& os, const SizeReport& r, const StringSet& words);
// z,words,norm,ehog_noroot,hog_noroot,ratio,predicted_ratio
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// One word per line.
void write_words(std::ostream& os, const StringSet& words);

}  // namespace hog

#endif  // HOG_EXPORT_HPP
