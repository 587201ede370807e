#include "pathmaj/indexed_tree.hpp"

namespace pathmaj {

IndexedTree::IndexedTree(LabeledTree tree) : tree_(std::move(tree)), nav_(tree_), labels_(tree_, nav_) {}

std::shared_ptr<const IndexedTree> IndexedTree::make(LabeledTree tree) {
  return std::make_shared<const IndexedTree>(std::move(tree));
}

}  // namespace pathmaj
