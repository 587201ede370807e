#pragma once

#include <memory>

#include "pathmaj/label_index.hpp"
#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/nav_index.hpp"

namespace pathmaj {

/// A tree together with its navigation and label tables. Not movable: the
/// label index points into the navigation tables. Share it through
/// std::shared_ptr<const IndexedTree>.
class IndexedTree {
 public:
  explicit IndexedTree(LabeledTree tree);
  IndexedTree(const IndexedTree&) = delete;
  IndexedTree& operator=(const IndexedTree&) = delete;

  static std::shared_ptr<const IndexedTree> make(LabeledTree tree);

  const LabeledTree& tree() const { return tree_; }
  const NavIndex& nav() const { return nav_; }
  const LabelIndex& labels() const { return labels_; }
  std::size_t size() const { return tree_.size(); }

 private:
  LabeledTree tree_;
  NavIndex nav_;
  LabelIndex labels_;
};

}  // namespace pathmaj
