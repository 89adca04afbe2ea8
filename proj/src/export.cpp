#include "hog/export.hpp"

#include <iomanip>
#include <sstream>

namespace hog {
namespace {

constexpr const char* kEpsilon = "ε";

std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string display(std::string_view label) {
  return label.empty() ? std::string(kEpsilon) : std::string(label);
}

std::string index_list(const std::vector<WordIndex>& list, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(list[k] + 1);
  }
  return out;
}

struct DotStyle {
  const std::vector<std::vector<WordIndex>>* rl = nullptr;
  bool dotted_root = false;
};

void write_tree_dot(std::ostream& os, const char* name, const OverlapTree& tree,
                    const StringSet& words, const DotStyle& style) {
  os << "digraph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (NodeId u = 0; u < tree.size(); ++u) {
    std::string label = display(tree.label(u, words));
    if (style.rl && !tree.is_leaf(u)) label += " [" + index_list((*style.rl)[u], ",") + "]";
    os << "  n" << u << " [label=\"" << dot_escape(label) << "\"";
    if (tree.is_leaf(u)) os << ", shape=doublecircle";
    if (u == OverlapTree::root && style.dotted_root) os << ", style=dotted";
    os << "];\n";
  }
  for (NodeId u = 0; u < tree.size(); ++u)
    for (NodeId v : tree.node(u).children) os << "  n" << u << " -> n" << v << ";\n";
  for (NodeId u = 1; u < tree.size(); ++u)
    os << "  n" << u << " -> n" << tree.node(u).suffix
       << " [style=dashed, color=red, constraint=false];\n";
  os << "}\n";
}

Json tree_counts(const OverlapTree& tree) {
  Json j;
  j["nodes_total"] = tree.size();
  j["nodes_noroot"] = tree.size() - 1;
  j["leaves"] = tree.leaf_count();
  j["internal_total"] = tree.internal_count();
  j["internal_noroot"] = tree.internal_count() - 1;
  return j;
}

Json header(const char* graph, const StringSet& words) {
  Json j;
  j["schema"] = kStatsSchema;
  j["graph"] = graph;
  j["words"] = words.size();
  j["norm"] = words.norm();
  j["max_length"] = words.max_length();
  return j;
}

std::string ratio_decimal(const Rational& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << r.value();
  return s.str();
}

}  // namespace

void write_trie_dot(std::ostream& os, const Trie& trie, const StringSet& words) {
  os << "digraph trie {\n";
  os << "  node [shape=circle];\n";
  for (NodeId u = 0; u < trie.size(); ++u) {
    os << "  n" << u << " [label=\"" << dot_escape(display(trie.label(u, words))) << "\"";
    if (trie.node(u).leaf_word) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (NodeId u = 0; u < trie.size(); ++u)
    for (const auto& [c, v] : trie.node(u).children) os << "  n" << u << " -> n" << v << ";\n";
  if (trie.has_failure_links()) {
    for (NodeId u = 1; u < trie.size(); ++u)
      os << "  n" << u << " -> n" << trie.node(u).failure
         << " [style=dashed, color=red, constraint=false];\n";
  }
  os << "}\n";
}

void write_ehog_dot(std::ostream& os, const Ehog& ehog, const StringSet& words) {
  DotStyle style;
  if (ehog.has_suffix_lists) style.rl = &ehog.rl;
  write_tree_dot(os, "ehog", ehog.tree, words, style);
}

void write_hog_dot(std::ostream& os, const Hog& hog, const StringSet& words) {
  DotStyle style;
  style.dotted_root = !hog.epsilon_is_max_overlap;
  write_tree_dot(os, "hog", hog.tree, words, style);
}

Json trie_stats_json(const Trie& trie, const StringSet& words) {
  Json j = header("trie", words);
  j["nodes_total"] = trie.size();
  j["nodes_noroot"] = trie.size() - 1;
  j["leaves"] = words.size();
  return j;
}

Json ehog_stats_json(const Ehog& ehog, const StringSet& words) {
  Json j = header("ehog", words);
  j.update(tree_counts(ehog.tree));
  j["rl_total"] = ehog.rl_total();
  return j;
}

Json hog_stats_json(const HogBuild& build, const StringSet& words) {
  Json j = header("hog", words);
  j.update(tree_counts(build.hog.tree));
  j["epsilon_max_overlap"] = build.hog.epsilon_is_max_overlap;
  j["ehog_nodes_total"] = build.ehog.tree.size();
  j["peak_live_c_vectors"] = build.marks.peak_live;
  j["peak_c_pool_bytes"] = build.marks.peak_pool_bytes;
  return j;
}

void write_matrix_tsv(std::ostream& os, const OverlapMatrix& m) {
  os << "(x,y)";
  for (std::size_t j = 0; j < m.size(); ++j) os << '\t' << j + 1;
  os << '\n';
  for (WordIndex i = 0; i < m.size(); ++i) {
    os << i + 1;
    for (WordIndex j = 0; j < m.size(); ++j) os << '\t' << m.at(i, j);
    os << '\n';
  }
}

Json matrix_json(const OverlapMatrix& m) {
  Json j;
  j["schema"] = kStatsSchema;
  j["n"] = m.size();
  Json rows = Json::array();
  for (WordIndex i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (WordIndex k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  j["weights"] = std::move(rows);
  return j;
}

std::vector<TraceRow> trace_mark_hog(const StringSet& words) {
  Ehog ehog = build_ehog(words);
  std::vector<TraceRow> rows;
  std::vector<std::size_t> row_of(ehog.tree.size(), 0);
  MarkHooks hooks;
  hooks.after_merge = [&](NodeId u, const BitVector& c) {
    TraceRow row;
    row.node = u;
    row.label = display(ehog.tree.label(u, words));
    row.rl = ehog.rl[u];
    row.c_before = c.to_string();
    row_of[u] = rows.size();
    rows.push_back(std::move(row));
  };
  hooks.after_update = [&](NodeId u, const BitVector& c) {
    rows[row_of[u]].c_after = c.to_string();
  };
  MarkState marks = mark_hog(ehog, &hooks);
  Hog hog = contract(ehog, marks);
  auto pairs = pairs_per_node(hog, words);
  for (TraceRow& row : rows) {
    row.bhog = marks.bhog.test(row.node);
    NodeId h = hog.hog_node[row.node];
    if (h == kNoNode) continue;
    if (auto it = pairs.find(h); it != pairs.end()) row.pairs = it->second;
  }
  return rows;
}

void write_trace_tsv(std::ostream& os, const std::vector<TraceRow>& rows) {
  os << "node\trl\tc_before\tc_after\tbhog\tpairs\n";
  for (const TraceRow& row : rows) {
    os << row.label << "\t{" << index_list(row.rl, ",") << "}\t" << row.c_before << '\t'
       << row.c_after << '\t' << (row.bhog ? 1 : 0) << '\t';
    for (std::size_t k = 0; k < row.pairs.size(); ++k) {
      if (k) os << ' ';
      os << '(' << row.pairs[k].first + 1 << ',' << row.pairs[k].second + 1 << ')';
    }
    os << '\n';
  }
}

Json size_report_json(const SizeReport& r, const StringSet& words) {
  Json j;
  j["schema"] = kStatsSchema;
  j["words"] = words.size();
  j["norm"] = words.norm();
  j["ehog_nodes_total"] = r.ehog_nodes_total;
  j["hog_nodes_total"] = r.hog_nodes_total;
  j["ehog_nodes_noroot"] = r.ehog_nodes_noroot;
  j["hog_nodes_noroot"] = r.hog_nodes_noroot;
  j["ratio"] = {{"num", r.ratio.num()}, {"den", r.ratio.den()}, {"value", r.ratio.value()}};
  return j;
}

void write_size_report_tsv(std::ostream& os, const SizeReport& r, const StringSet& words) {
  os << "words\tnorm\tehog_nodes_total\thog_nodes_total\tehog_nodes_noroot\t"
        "hog_nodes_noroot\tratio\n";
  os << words.size() << '\t' << words.norm() << '\t' << r.ehog_nodes_total << '\t'
     << r.hog_nodes_total << '\t' << r.ehog_nodes_noroot << '\t' << r.hog_nodes_noroot
     << '\t' << r.ratio << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "z,words,norm,ehog_noroot,hog_noroot,ratio,predicted_ratio\n";
  for (const SweepRow& row : rows) {
    os << row.z << ',' << row.words << ',' << row.norm << ',' << row.report.ehog_nodes_noroot
       << ',' << row.report.hog_nodes_noroot << ',' << ratio_decimal(row.report.ratio) << ','
       << ratio_decimal(row.predicted) << '\n';
  }
}

void write_words(std::ostream& os, const StringSet& words) {
  for (const auto& w : words.words()) os << w << '\n';
}

}  // namespace hog
