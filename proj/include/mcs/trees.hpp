#ifndef MCS_TREES_HPP
#define MCS_TREES_HPP

#include <memory>
#include <string>
#include <vector>

namespace mcs {

// Rooted binary tree with leaves labelled 0..k-1, canonical under left-right
// swaps: the left subtree holds the smallest leaf of each node.
struct BinaryTree {
  int leaf = -1;  // >= 0 at leaves
  std::shared_ptr<const BinaryTree> left, right;

  bool is_leaf() const { return leaf >= 0; }
  int leaf_count() const;
  int min_leaf() const;
};

using BinaryTreePtr = std::shared_ptr<const BinaryTree>;

// All leaf-labelled binary trees with k leaves, one per isomorphism class;
// there are (2k-3)!! of them.
std::vector<BinaryTreePtr> enumerate_trees(int k, int arity_cap = 8);

// Lie-word pattern, e.g. "[[1,2],3]" (1-based leaf labels).
std::string tree_pattern(const BinaryTree& t);

}  // namespace mcs

#endif
