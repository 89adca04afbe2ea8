#include "hog/hog.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hog {
namespace {

using Slot = BitVectorPool::Slot;
constexpr Slot kNoSlot = std::numeric_limits<Slot>::max();

struct Frame {
  NodeId node;
  std::size_t next_child;
  Slot c;
};

template <typename Visit>
void walk_max_overlaps(const Hog& hog, const StringSet& words, Visit visit) {
  const OverlapTree& tree = hog.tree;
  const std::size_t n = words.size();
  std::vector<char> assigned(n);
  for (WordIndex i = 0; i < n; ++i) {
    std::fill(assigned.begin(), assigned.end(), 0);
    std::size_t remaining = n;
    // Suffix chains are strictly depth-decreasing, so the first node that
    // reaches a leaf is that pair's longest overlap.
    for (NodeId v = tree.node(tree.leaf_of(i)).suffix; v != kNoNode && remaining > 0;
         v = tree.node(v).suffix) {
      for (NodeId x = v; x < tree.subtree_end(v); ++x) {
        const auto& leaf = tree.node(x).leaf_word;
        if (!leaf || assigned[*leaf]) continue;
        assigned[*leaf] = 1;
        --remaining;
        visit(i, *leaf, v);
      }
    }
  }
}

}  // namespace

MarkState mark_hog(const Ehog& ehog, const MarkHooks* hooks) {
  if (!ehog.has_suffix_lists)
    throw std::invalid_argument("mark_hog: suffix lists not built");

  const OverlapTree& tree = ehog.tree;
  const std::size_t n = tree.leaf_count();
  MarkState state;
  state.bhog = BitVector(tree.size());
  if (n == 0) return state;

  BitVectorPool pool(n);
  std::vector<Frame> stack{{OverlapTree::root, 0, kNoSlot}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const TreeNode& node = tree.node(f.node);

    if (node.leaf_word) {
      // A leaf's C is all-false: it starts or clears the parent's vector.
      state.bhog.set(f.node);
      stack.pop_back();
      Frame& parent = stack.back();
      if (parent.c == kNoSlot)
        parent.c = pool.acquire();
      else
        pool[parent.c].clear();
      continue;
    }

    if (f.next_child < node.children.size()) {
      NodeId child = node.children[f.next_child++];
      stack.push_back({child, 0, kNoSlot});
      continue;
    }

    if (f.c == kNoSlot) f.c = pool.acquire();
    const NodeId u = f.node;
    const Slot slot = f.c;
    if (hooks && hooks->after_merge) hooks->after_merge(u, pool[slot]);
    BitVector& c = pool[slot];
    for (WordIndex x : ehog.rl[u]) {
      if (!c.test(x)) state.bhog.set(u);
      c.set(x);
    }
    if (hooks && hooks->after_update) hooks->after_update(u, pool[slot]);

    stack.pop_back();
    if (stack.empty()) {
      pool.release(slot);
      break;
    }
    Frame& parent = stack.back();
    if (parent.c == kNoSlot) {
      parent.c = slot;
    } else {
      pool[parent.c] &= pool[slot];
      pool.release(slot);
    }
  }

  state.peak_live = pool.peak_live();
  state.peak_pool_bytes = pool.allocated_bytes();
  return state;
}

Hog contract(const Ehog& ehog, const MarkState& marks) {
  const OverlapTree& src = ehog.tree;
  const std::size_t size = src.size();
  auto kept = [&](NodeId u) { return u == OverlapTree::root || marks.bhog.test(u); };

  Hog hog;
  hog.hog_node.assign(size, kNoNode);
  std::vector<NodeId> anchor(size, kNoNode);
  std::vector<TreeNode> nodes;

  // Preorder ids: parents are always seen before their children.
  for (NodeId u = 0; u < size; ++u) {
    const TreeNode& sn = src.node(u);
    if (u != OverlapTree::root) {
      NodeId p = sn.parent;
      anchor[u] = kept(p) ? hog.hog_node[p] : anchor[p];
    }
    if (!kept(u)) continue;
    auto id = static_cast<NodeId>(nodes.size());
    hog.hog_node[u] = id;
    hog.ehog_node.push_back(u);
    TreeNode node;
    node.depth = sn.depth;
    node.parent = anchor[u];
    node.leaf_word = sn.leaf_word;
    node.label_word = sn.label_word;
    nodes.push_back(std::move(node));
    if (anchor[u] != kNoNode) nodes[anchor[u]].children.push_back(id);
  }

  // First kept node on each suffix chain, memoized along the walk.
  std::vector<NodeId> first_kept(size, kNoNode);
  std::vector<NodeId> pending;
  auto resolve = [&](NodeId v) {
    while (first_kept[v] == kNoNode && !kept(v)) {
      pending.push_back(v);
      v = src.node(v).suffix;
    }
    NodeId target = kept(v) ? v : first_kept[v];
    for (NodeId p : pending) first_kept[p] = target;
    pending.clear();
    return target;
  };
  for (NodeId id = 1; id < nodes.size(); ++id)
    nodes[id].suffix = hog.hog_node[resolve(src.node(hog.ehog_node[id]).suffix)];

  hog.tree = OverlapTree(std::move(nodes), src.leaf_count());
  hog.epsilon_is_max_overlap = marks.bhog.size() > 0 && marks.bhog.test(OverlapTree::root);
  return hog;
}

HogBuild build_hog_detailed(const StringSet& words, const MarkHooks* hooks) {
  HogBuild out;
  out.ehog = build_ehog(words);
  out.marks = mark_hog(out.ehog, hooks);
  out.hog = contract(out.ehog, out.marks);
  return out;
}

Hog build_hog(const StringSet& words) { return build_hog_detailed(words).hog; }

OverlapMatrix og_from_hog(const Hog& hog, const StringSet& words) {
  OverlapMatrix m(words.size());
  walk_max_overlaps(hog, words, [&](WordIndex i, WordIndex j, NodeId v) {
    m.at(i, j) = hog.tree.node(v).depth;
  });
  return m;
}

std::map<NodeId, std::vector<WordPair>> pairs_per_node(const Hog& hog,
                                                       const StringSet& words) {
  std::map<NodeId, std::vector<WordPair>> out;
  walk_max_overlaps(hog, words,
                    [&](WordIndex i, WordIndex j, NodeId v) { out[v].emplace_back(i, j); });
  for (auto& [node, pairs] : out) std::sort(pairs.begin(), pairs.end());
  return out;
}

}  // namespace hog
