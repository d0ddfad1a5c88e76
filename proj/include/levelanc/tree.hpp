#ifndef LEVELANC_TREE_HPP
#define LEVELANC_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "levelanc/error.hpp"

namespace levelanc {

struct Edge {
    NodeId parent;
    NodeId child;
};

/*
 * Immutable rooted tree over dense node ids 0..n-1.
 *
 * Children are kept in a flat adjacency (offsets + list) in the order they
 * were supplied, which fixes the pre-order labelling downstream. Depths are
 * computed once during validation by a breadth-first worklist from the root.
 */
class Tree {
public:
    // children order = ascending child id
    static Tree from_parent_array(std::span<const NodeId> parents);
    // children order = order of appearance in `edges`
    static Tree from_edge_list(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return parent_.size(); }
    NodeId root() const noexcept { return root_; }
    Depth max_depth() const noexcept { return max_depth_; }

    NodeId parent(NodeId v) const;
    Depth depth(NodeId v) const;
    std::span<const NodeId> children(NodeId v) const;

    // v must be a valid node id
    std::span<const NodeId> children_unchecked(NodeId v) const noexcept {
        return {child_list_.data() + child_offsets_[v], child_list_.data() + child_offsets_[v + 1]};
    }

    void prefetch_children(NodeId v) const noexcept { __builtin_prefetch(child_offsets_.data() + v); }

    std::span<const NodeId> parents() const noexcept { return parent_; }
    std::span<const Depth> depths() const noexcept { return depth_; }

    bool contains(NodeId v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < parent_.size();
    }

private:
    Tree() = default;

    // Fills child lists from (parent, child) pairs taken in sequence, then
    // checks that every node is reachable from the root.
    void link(const std::vector<std::pair<NodeId, NodeId>>& ordered_edges);

    std::vector<NodeId> parent_;
    std::vector<std::uint32_t> child_offsets_;
    std::vector<NodeId> child_list_;
    std::vector<Depth> depth_;
    NodeId root_ = kNoParent;
    Depth max_depth_ = 0;
};

// Parent-link hops from v to the root; the root has depth 0.
Depth depth_of(const Tree& t, NodeId v);

// Parent-array text format: line 1 holds n, line 2 holds n parent ids with
// -1 marking the root.
std::vector<NodeId> read_parent_array(std::istream& in);
void write_parent_array(std::ostream& out, std::span<const NodeId> parents);

Tree read_tree_file(const std::string& path);

} // namespace levelanc

#endif
