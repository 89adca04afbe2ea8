#include "hog/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hog/overlap_oracle.hpp"

namespace hog {
namespace {

std::string show(std::string_view label) {
  return label.empty() ? std::string("ε") : std::string(label);
}

std::set<std::string> non_root_internal_labels(const OverlapTree& tree,
                                               const StringSet& words) {
  std::set<std::string> out;
  for (NodeId u = 1; u < tree.size(); ++u)
    if (!tree.is_leaf(u)) out.emplace(tree.label(u, words));
  return out;
}

std::string set_difference_detail(const std::set<std::string>& got,
                                  const std::set<std::string>& want) {
  for (const auto& s : got)
    if (!want.count(s)) return "unexpected node '" + show(s) + "'";
  for (const auto& s : want)
    if (!got.count(s)) return "missing node '" + show(s) + "'";
  return {};
}

CheckResult compare_label_sets(std::string name, const OverlapTree& tree,
                               const StringSet& words, std::set<std::string> want) {
  want.erase(std::string());
  CheckResult r{std::move(name), true, {}};
  auto got = non_root_internal_labels(tree, words);
  if (got != want) {
    r.passed = false;
    r.detail = set_difference_detail(got, want);
  }
  return r;
}

std::string pair_text(WordIndex i, WordIndex j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

bool ehog_equivalence_check(const Ehog& ehog, const StringSet& words) {
  std::set<std::string> got;
  for (auto& s : ehog.tree.internal_labels(words)) got.insert(std::move(s));
  std::set<std::string> want = all_overlap_set(words);
  // The root is structural even for an empty word set.
  if (words.empty()) want.insert(std::string());
  return got == want;
}

CheckResult check_ehog_labels(const Ehog& ehog, const StringSet& words) {
  return compare_label_sets("ehog_labels", ehog.tree, words, all_overlap_set(words));
}

CheckResult check_hog_labels(const Hog& hog, const StringSet& words) {
  auto want = maximal_overlap_set(words);
  bool epsilon = want.count(std::string()) > 0;
  CheckResult r = compare_label_sets("hog_labels", hog.tree, words, std::move(want));
  if (r.passed && epsilon != hog.epsilon_is_max_overlap) {
    r.passed = false;
    r.detail = std::string("epsilon membership: hog says ") +
               (hog.epsilon_is_max_overlap ? "yes" : "no") + ", oracle says " +
               (epsilon ? "yes" : "no");
  }
  return r;
}

CheckResult check_suffix_lists(const Ehog& ehog, const StringSet& words) {
  CheckResult r{"suffix_lists", true, {}};
  const OverlapTree& tree = ehog.tree;
  for (NodeId u = 0; u < tree.size() && r.passed; ++u) {
    if (tree.is_leaf(u)) {
      if (!ehog.rl[u].empty()) {
        r.passed = false;
        r.detail = "leaf '" + show(tree.label(u, words)) + "' has a suffix list";
      }
      continue;
    }
    std::string_view label = tree.label(u, words);
    std::vector<WordIndex> want;
    for (WordIndex i = 0; i < words.size(); ++i) {
      std::string_view w = words[i];
      if (label.size() < w.size() && w.substr(w.size() - label.size()) == label)
        want.push_back(i);
    }
    if (want != ehog.rl[u]) {
      r.passed = false;
      r.detail = "rl('" + show(label) + "') differs from naive recomputation";
    }
  }
  return r;
}

CheckResult check_rl_overlap_bound(const Ehog& ehog, const StringSet& words) {
  CheckResult r{"rl_overlap_bound", true, {}};
  const OverlapTree& tree = ehog.tree;
  OverlapMatrix m = overlap_graph(words);
  for (NodeId u = 0; u < tree.size(); ++u) {
    for (WordIndex i : ehog.rl[u]) {
      for (NodeId x = u; x < tree.subtree_end(u); ++x) {
        const auto& leaf = tree.node(x).leaf_word;
        if (leaf && m.at(i, *leaf) < tree.node(u).depth) {
          r.passed = false;
          r.detail = "pair " + pair_text(i, *leaf) + " overlaps by " +
                     std::to_string(m.at(i, *leaf)) + " < |" +
                     show(tree.label(u, words)) + "|";
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult check_og_matrix(const Hog& hog, const StringSet& words) {
  CheckResult r{"og_matrix", true, {}};
  OverlapMatrix got = og_from_hog(hog, words);
  OverlapMatrix want = overlap_graph(words);
  for (WordIndex i = 0; i < words.size(); ++i) {
    for (WordIndex j = 0; j < words.size(); ++j) {
      if (got.at(i, j) != want.at(i, j)) {
        r.passed = false;
        r.detail = "pair " + pair_text(i, j) + ": hog gives " +
                   std::to_string(got.at(i, j)) + ", oracle gives " +
                   std::to_string(want.at(i, j));
        return r;
      }
    }
  }
  return r;
}

CheckResult check_pair_partition(const Hog& hog, const StringSet& words) {
  CheckResult r{"pair_partition", true, {}};
  const std::size_t n = words.size();
  std::vector<int> seen(n * n, 0);
  OverlapMatrix want = overlap_graph(words);
  for (const auto& [node, pairs] : pairs_per_node(hog, words)) {
    for (const auto& [i, j] : pairs) {
      ++seen[i * n + j];
      if (hog.tree.node(node).depth != want.at(i, j)) {
        r.passed = false;
        r.detail = "pair " + pair_text(i, j) + " attributed to '" +
                   show(hog.tree.label(node, words)) + "'";
        return r;
      }
    }
  }
  for (WordIndex i = 0; i < n; ++i) {
    for (WordIndex j = 0; j < n; ++j) {
      if (seen[i * n + j] != 1) {
        r.passed = false;
        r.detail = "pair " + pair_text(i, j) + " attributed " +
                   std::to_string(seen[i * n + j]) + " times";
        return r;
      }
    }
  }
  return r;
}

CheckResult check_space_bound(const MarkState& marks, const StringSet& words) {
  CheckResult r{"space_bound", true, {}};
  std::size_t bound = std::min(words.size(), words.max_length());
  if (marks.peak_live > bound) {
    r.passed = false;
    r.detail = "peak live C vectors " + std::to_string(marks.peak_live) +
               " exceeds min(|P|, max length) = " + std::to_string(bound);
  }
  return r;
}

CheckResult check_mark_invariants(const Ehog& ehog, const StringSet& words) {
  CheckResult r{"mark_invariants", true, {}};
  const OverlapTree& tree = ehog.tree;
  OverlapMatrix m = overlap_graph(words);

  auto check = [&](NodeId u, const BitVector& c, bool strict, const char* which) {
    if (!r.passed) return;
    Length depth = tree.node(u).depth;
    for (WordIndex w = 0; w < words.size(); ++w) {
      bool want = true;
      for (NodeId x = u; x < tree.subtree_end(u) && want; ++x) {
        const auto& leaf = tree.node(x).leaf_word;
        if (leaf) want = strict ? m.at(w, *leaf) > depth : m.at(w, *leaf) >= depth;
      }
      if (c.test(w) != want) {
        r.passed = false;
        r.detail = std::string(which) + " violated at '" + show(tree.label(u, words)) +
                   "' for word " + std::to_string(w + 1);
        return;
      }
    }
  };

  MarkHooks hooks;
  hooks.after_merge = [&](NodeId u, const BitVector& c) { check(u, c, true, "invariant 1"); };
  hooks.after_update = [&](NodeId u, const BitVector& c) { check(u, c, false, "invariant 2"); };
  mark_hog(ehog, &hooks);
  return r;
}

std::vector<CheckResult> verify_instance(const StringSet& words, bool with_invariants) {
  HogBuild build = build_hog_detailed(words);
  std::vector<CheckResult> out;
  out.push_back(check_ehog_labels(build.ehog, words));
  out.push_back(check_suffix_lists(build.ehog, words));
  out.push_back(check_rl_overlap_bound(build.ehog, words));
  out.push_back(check_hog_labels(build.hog, words));
  out.push_back(check_og_matrix(build.hog, words));
  out.push_back(check_pair_partition(build.hog, words));
  out.push_back(check_space_bound(build.marks, words));
  if (with_invariants) out.push_back(check_mark_invariants(build.ehog, words));
  return out;
}

}  // namespace hog
