#ifndef PLANARMATCH_LAMINAR_HPP
#define PLANARMATCH_LAMINAR_HPP

#include <vector>

#include "planarmatch/errors.hpp"

namespace planarmatch {

/// Laminar family of vertex sets, rooted at the full vertex set.  Node 0 is
/// always the root; children ids follow depth-first order with siblings
/// sorted by their vertex sets, so ids are canonical for a given family.
class LaminarTree {
public:
    /// `ground_size`: |V| of the underlying graph.  `sets`: the non-root
    /// members (each a set of vertex ids).  Throws InvalidParams if the
    /// family is not laminar or a set is empty/full.
    LaminarTree(int ground_size, std::vector<std::vector<int>> sets);

    int size() const { return static_cast<int>(nodes_.size()); }
    bool root_only() const { return nodes_.size() == 1; }
    const std::vector<int>& members(int node) const { return nodes_[node]; }
    int parent(int node) const { return parent_[node]; }
    const std::vector<int>& children(int node) const { return children_[node]; }
    int ground_size() const { return ground_size_; }

    /// Node whose removal splits the tree into components of size at most
    /// ceil(size()/2).  Ties broken by smallest node id (the root has id 0,
    /// so a 2-node tree resolves to the root).
    int separator() const;

private:
    int ground_size_;
    std::vector<std::vector<int>> nodes_;  // sorted member lists; node 0 = V
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
};

int tree_separator(const LaminarTree& t);

}  // namespace planarmatch

#endif
