#include "doctest.h"

#include "hog/ehog.hpp"
#include "hog/overlap_oracle.hpp"
#include "hog/verify.hpp"
#include "support.hpp"

using namespace hog;
using namespace hog::testing;

namespace {

using Set = std::set<std::string>;
using List = std::vector<WordIndex>;

// rl as 1-based indices, looked up by label.
List rl_of(const Ehog& e, const StringSet& p, std::string_view label) {
  NodeId u = find_label(e.tree, p, label);
  REQUIRE(u != kNoNode);
  List out = e.rl[u];
  for (auto& i : out) ++i;
  return out;
}

}  // namespace

TEST_CASE("build_ehog golden instances") {
  StringSet p1 = aabaa_words();
  Ehog e1 = build_ehog(p1);
  CHECK(internal_label_set(e1.tree, p1) == Set{"", "a", "aa", "cd"});
  CHECK(e1.tree.leaf_count() == 3);
  CHECK(e1.tree.size() == 7);

  StringSet p2 = tattatt_words();
  Ehog e2 = build_ehog(p2);
  CHECK(internal_label_set(e2.tree, p2) == Set{"", "t", "tat", "tatt", "tattat", "ctat"});

  StringSet p3({"ab"});
  Ehog e3 = build_ehog(p3);
  CHECK(internal_label_set(e3.tree, p3) == Set{""});
  CHECK(e3.tree.size() == 2);
  CHECK(ehog_equivalence_check(e3, p3));
}

TEST_CASE("build_ehog requires failure links") {
  StringSet p = aabaa_words();
  Trie t = build_trie(p);
  CHECK_THROWS_AS(build_ehog(t, p), std::invalid_argument);
}

TEST_CASE("tree and suffix arcs on the tattatt instance") {
  StringSet p = tattatt_words();
  Ehog e = build_ehog(p);
  const OverlapTree& t = e.tree;
  auto id = [&](std::string_view s) { return find_label(t, p, s); };
  CHECK(t.node(id("tat")).parent == id("t"));
  CHECK(t.node(id("tattat")).parent == id("tatt"));
  CHECK(t.node(id("ctat")).parent == OverlapTree::root);
  CHECK(t.node(id("cctat")).parent == OverlapTree::root);
  CHECK(t.node(id("ctattat")).parent == id("ctat"));
  CHECK(t.node(id("tattatt")).suffix == id("tatt"));
  CHECK(t.node(id("ctattat")).suffix == id("tattat"));
  CHECK(t.node(id("cctat")).suffix == id("ctat"));
  CHECK(t.node(id("ctat")).suffix == id("tat"));
  CHECK(t.node(id("tat")).suffix == id("t"));
  CHECK(t.node(id("t")).suffix == OverlapTree::root);
  // Root's children in symbol order of their paths: cctat, ctat, gtattat, t.
  const auto& kids = t.node(OverlapTree::root).children;
  REQUIRE(kids.size() == 4);
  CHECK(t.label(kids[0], p) == "cctat");
  CHECK(t.label(kids[1], p) == "ctat");
  CHECK(t.label(kids[2], p) == "gtattat");
  CHECK(t.label(kids[3], p) == "t");
}

TEST_CASE("suffix lists match the traced R_l columns") {
  StringSet p = tattatt_words();
  Ehog e = build_ehog(p);
  CHECK(rl_of(e, p, "ctat") == List{4});
  CHECK(rl_of(e, p, "tattat") == List{2, 3});
  CHECK(rl_of(e, p, "tatt") == List{1});
  CHECK(rl_of(e, p, "tat") == List{2, 3, 4});
  CHECK(rl_of(e, p, "t") == List{1, 2, 3, 4});
  CHECK(rl_of(e, p, "") == List{1, 2, 3, 4});

  StringSet b = bcbcb_words();
  Ehog eb = build_ehog(b);
  CHECK(rl_of(eb, b, "bcb") == List{1});
  CHECK(rl_of(eb, b, "bab") == List{4});
  CHECK(rl_of(eb, b, "ba") == List{2, 3});
  CHECK(rl_of(eb, b, "b") == List{1, 4});
  CHECK(rl_of(eb, b, "aba") == List{2});
  CHECK(rl_of(eb, b, "ab") == List{4});
  CHECK(rl_of(eb, b, "a") == List{2, 3});
  CHECK(rl_of(eb, b, "") == List{1, 2, 3, 4});
}

TEST_CASE("ehog properties on random instances") {
  RandomInstances gen(5);
  for (int round = 0; round < 500; ++round) {
    StringSet p = gen.next();
    Ehog e = build_ehog(p);
    const OverlapTree& t = e.tree;
    CHECK(ehog_equivalence_check(e, p));
    CHECK(check_suffix_lists(e, p).passed);
    CHECK(e.rl_total() <= p.norm());
    CHECK(e.construction_visits <= 2 * p.norm() + 1);

    List all(p.size());
    for (WordIndex i = 0; i < p.size(); ++i) all[i] = i;
    CHECK(e.rl[OverlapTree::root] == all);

    for (WordIndex w = 0; w < p.size(); ++w) {
      NodeId leaf = t.leaf_of(w);
      CHECK(t.label(leaf, p) == p[w]);
      Length depth = t.node(leaf).depth;
      NodeId v = t.node(leaf).suffix;
      std::size_t steps = 0;
      for (; v != kNoNode; v = t.node(v).suffix) {
        CHECK(t.node(v).depth < depth);
        CHECK_FALSE(t.is_leaf(v));
        depth = t.node(v).depth;
        ++steps;
      }
      CHECK(depth == 0);
      CHECK(steps >= 1);
    }

    // Tree arcs: parent is the longest proper prefix among the nodes.
    std::set<std::string> labels;
    for (NodeId u = 0; u < t.size(); ++u) labels.emplace(t.label(u, p));
    for (NodeId u = 1; u < t.size(); ++u) {
      std::string_view s = t.label(u, p);
      std::string want;
      for (std::size_t k = s.size(); k-- > 0;)
        if (labels.count(std::string(s.substr(0, k)))) {
          want = s.substr(0, k);
          break;
        }
      CHECK(t.label(t.node(u).parent, p) == want);
      std::string want_suffix;
      for (std::size_t k = s.size(); k-- > 0;)
        if (labels.count(std::string(s.substr(s.size() - k)))) {
          want_suffix = s.substr(s.size() - k);
          break;
        }
      CHECK(t.label(t.node(u).suffix, p) == want_suffix);
    }
  }
}
