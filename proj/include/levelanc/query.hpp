#ifndef LEVELANC_QUERY_HPP
#define LEVELANC_QUERY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "levelanc/index.hpp"

namespace levelanc {

struct QueryStats {
    // label comparisons made by the search
    std::size_t comparisons = 0;
    // length of the depth array searched
    std::size_t array_len = 0;
};

// Position of the largest element <= key in a strictly increasing array, or
// nullopt when every element exceeds key. Makes at most
// floor(log2(arr.size())) + 1 comparisons.
std::optional<std::size_t> predecessor_search(std::span<const Label> arr, Label key,
                                              QueryStats* stats = nullptr) noexcept;

// Same contract over an array in Eytzinger order (index k-1 holds implicit
// node k, children 2k and 2k+1). Returns the Eytzinger position.
std::optional<std::size_t> eytzinger_predecessor_search(std::span<const Label> eytz, Label key,
                                                        QueryStats* stats = nullptr) noexcept;

// Ancestor of v at depth d. LA(v, depth(v)) = v, LA(v, 0) = root.
// Throws NodeOutOfRange, DepthOutOfRange (d < 0) or DepthBelowNode (d > depth(v)).
NodeId level_ancestor(const LevelAncestorIndex& idx, NodeId v, Depth d);

std::pair<NodeId, QueryStats> level_ancestor_with_stats(const LevelAncestorIndex& idx, NodeId v, Depth d);

// k-th ancestor, i.e. LA(v, depth(v) - k). Throws KTooLarge when k > depth(v).
NodeId kth_ancestor(const LevelAncestorIndex& idx, NodeId v, Depth k);

struct LaQuery {
    NodeId node;
    Depth depth;
};

// Either a node or the reason the query has no answer.
struct QueryOutcome {
    NodeId node = kNoParent;
    std::optional<Errc> error;

    bool ok() const noexcept { return !error.has_value(); }
};

QueryOutcome try_level_ancestor(const LevelAncestorIndex& idx, NodeId v, Depth d) noexcept;

// Answers every query; a bad query yields an error outcome and does not stop
// the batch.
std::vector<QueryOutcome> level_ancestor_batch(const LevelAncestorIndex& idx, std::span<const LaQuery> queries);

} // namespace levelanc

#endif
