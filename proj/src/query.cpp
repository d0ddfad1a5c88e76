#include "levelanc/query.hpp"

namespace levelanc {

std::optional<std::size_t> predecessor_search(std::span<const Label> arr, Label key,
                                              QueryStats* stats) noexcept {
    // Upper bound over [lo, hi); the predecessor sits just before it.
    std::size_t lo = 0;
    std::size_t hi = arr.size();
    std::size_t comparisons = 0;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++comparisons;
        if (arr[mid] <= key) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (stats != nullptr) {
        stats->comparisons += comparisons;
        stats->array_len = arr.size();
    }
    if (lo == 0) {
        return std::nullopt;
    }
    return lo - 1;
}

std::optional<std::size_t> eytzinger_predecessor_search(std::span<const Label> eytz, Label key,
                                                        QueryStats* stats) noexcept {
    const std::size_t m = eytz.size();
    std::size_t k = 1;
    std::size_t best = 0;
    std::size_t comparisons = 0;
    while (k <= m) {
        ++comparisons;
        if (eytz[k - 1] <= key) {
            best = k;
            k = 2 * k + 1;
        } else {
            k = 2 * k;
        }
    }
    if (stats != nullptr) {
        stats->comparisons += comparisons;
        stats->array_len = m;
    }
    if (best == 0) {
        return std::nullopt;
    }
    return best - 1;
}

namespace {

std::optional<Errc> check(const LevelAncestorIndex& idx, NodeId v, Depth d) noexcept {
    if (!idx.contains(v)) {
        return Errc::NodeOutOfRange;
    }
    if (d < 0) {
        return Errc::DepthOutOfRange;
    }
    if (d > idx.depth_unchecked(v)) {
        return Errc::DepthBelowNode;
    }
    return std::nullopt;
}

// Preconditions already checked. The label of v is itself in v's depth
// array and the ancestor's label is the largest one at depth d not above it,
// so the search always succeeds.
NodeId answer(const LevelAncestorIndex& idx, NodeId v, Depth d, QueryStats* stats) noexcept {
    const Label key = idx.label_unchecked(v);
    const auto arr = idx.search_array(d);
    std::optional<std::size_t> pos;
    if (idx.layout() == SearchLayout::Eytzinger) {
        pos = eytzinger_predecessor_search(arr, key, stats);
    } else {
        pos = predecessor_search(arr, key, stats);
    }
    return idx.node_unchecked(arr[*pos]);
}

[[noreturn]] void raise(Errc code, NodeId v, Depth d) {
    throw Error(code, "query (" + std::to_string(v) + ", " + std::to_string(d) + ")");
}

} // namespace

NodeId level_ancestor(const LevelAncestorIndex& idx, NodeId v, Depth d) {
    if (const auto err = check(idx, v, d)) {
        raise(*err, v, d);
    }
    return answer(idx, v, d, nullptr);
}

std::pair<NodeId, QueryStats> level_ancestor_with_stats(const LevelAncestorIndex& idx, NodeId v, Depth d) {
    if (const auto err = check(idx, v, d)) {
        raise(*err, v, d);
    }
    QueryStats stats;
    const NodeId a = answer(idx, v, d, &stats);
    return {a, stats};
}

NodeId kth_ancestor(const LevelAncestorIndex& idx, NodeId v, Depth k) {
    if (!idx.contains(v)) {
        raise(Errc::NodeOutOfRange, v, k);
    }
    if (k < 0) {
        throw Error(Errc::DepthOutOfRange, "negative hop count " + std::to_string(k));
    }
    const Depth dv = idx.depth_unchecked(v);
    if (k > dv) {
        throw Error(Errc::KTooLarge, "k = " + std::to_string(k) + " exceeds depth " + std::to_string(dv));
    }
    return answer(idx, v, dv - k, nullptr);
}

QueryOutcome try_level_ancestor(const LevelAncestorIndex& idx, NodeId v, Depth d) noexcept {
    if (const auto err = check(idx, v, d)) {
        return QueryOutcome{kNoParent, err};
    }
    return QueryOutcome{answer(idx, v, d, nullptr), std::nullopt};
}

std::vector<QueryOutcome> level_ancestor_batch(const LevelAncestorIndex& idx, std::span<const LaQuery> queries) {
    std::vector<QueryOutcome> out;
    out.reserve(queries.size());
    for (const auto& q : queries) {
        out.push_back(try_level_ancestor(idx, q.node, q.depth));
    }
    return out;
}

} // namespace levelanc
