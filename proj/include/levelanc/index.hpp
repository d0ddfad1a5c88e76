#ifndef LEVELANC_INDEX_HPP
#define LEVELANC_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "levelanc/error.hpp"
#include "levelanc/tree.hpp"

namespace levelanc {

// Order in which each depth array is laid out for the query's search.
// Sorted is plain binary search; Eytzinger stores each array as an implicit
// breadth-first search tree, so the top levels of every search share cache
// lines. Both answer identically.
enum class SearchLayout : std::uint32_t {
    Sorted = 0,
    Eytzinger = 1,
};

SearchLayout parse_layout(std::string_view name);
std::string_view layout_name(SearchLayout layout) noexcept;

/*
 * Level ancestor index.
 *
 * A single pre-order traversal hands out labels 1..n from a counter, appends
 * each label to the array of its depth, and records label -> node. Because a
 * node's ancestors are labelled before it and every later node at an
 * ancestor's depth belongs to a later subtree, each depth array is strictly
 * increasing and the ancestor of v at depth d is the predecessor of label(v)
 * in the array for d.
 *
 * The per-depth arrays live back to back in one buffer addressed through
 * level offsets. label -> node is a direct-address table, since labels are
 * exactly 1..n.
 *
 * Immutable once built; concurrent readers need no synchronization.
 */
class LevelAncestorIndex {
public:
    static LevelAncestorIndex build(const Tree& tree, SearchLayout layout = SearchLayout::Sorted);

    std::size_t size() const noexcept { return label_.size(); }
    Depth max_depth() const noexcept { return static_cast<Depth>(level_offsets_.size()) - 2; }
    SearchLayout layout() const noexcept { return layout_; }
    NodeId root() const noexcept { return node_of_label_[1]; }

    Label label_of(NodeId v) const;
    NodeId node_of(Label l) const;
    Depth depth_of(NodeId v) const;

    // Strictly increasing labels of every node at depth d.
    std::span<const Label> depth_array(Depth d) const;

    // The array the query actually searches: depth_array(d) itself for the
    // sorted layout, its Eytzinger permutation otherwise.
    std::span<const Label> search_array(Depth d) const;

    // Nodes visited by the building traversal; equals size() after build.
    std::size_t build_visits() const noexcept { return build_visits_; }

    bool contains(NodeId v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < label_.size();
    }

    // Unchecked accessors for the query path.
    Label label_unchecked(NodeId v) const noexcept { return label_[v]; }
    Depth depth_unchecked(NodeId v) const noexcept { return depth_[v]; }
    NodeId node_unchecked(Label l) const noexcept { return node_of_label_[l]; }

    /*
     * Binary snapshot, all integers little-endian:
     *   char[8]  magic "LAINDEX1"
     *   u32      layout
     *   u32      reserved (0)
     *   u64      n
     *   u64      level count (max_depth + 1)
     *   u32[n]   label by node
     *   u32[n]   depth by node
     *   u64[level count + 1] level offsets
     * Everything else is rebuilt on read, so write -> read -> write is
     * byte-identical.
     */
    void write_snapshot(std::ostream& out) const;
    static LevelAncestorIndex read_snapshot(std::istream& in);

private:
    LevelAncestorIndex() = default;

    void build_search_layout();

    std::vector<Label> label_;
    std::vector<Depth> depth_;
    // index 0 unused
    std::vector<NodeId> node_of_label_;
    std::vector<std::uint64_t> level_offsets_;
    std::vector<Label> level_labels_;
    // Eytzinger permutation of each level, same offsets; empty for Sorted.
    std::vector<Label> level_search_;
    SearchLayout layout_ = SearchLayout::Sorted;
    std::size_t build_visits_ = 0;
};

inline LevelAncestorIndex build_index(const Tree& tree, SearchLayout layout = SearchLayout::Sorted) {
    return LevelAncestorIndex::build(tree, layout);
}

} // namespace levelanc

#endif
