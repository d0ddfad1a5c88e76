#include "levelanc/baselines.hpp"

#include <algorithm>
#include <bit>

namespace levelanc {

NodeId naive_la(const Tree& t, NodeId v, Depth d) {
    if (!t.contains(v)) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    if (d < 0) {
        throw Error(Errc::DepthOutOfRange, "depth " + std::to_string(d));
    }
    const auto parents = t.parents();
    Depth depth = 0;
    for (NodeId u = parents[v]; u != kNoParent; u = parents[u]) {
        ++depth;
    }
    if (d > depth) {
        throw Error(Errc::DepthBelowNode, "depth " + std::to_string(d) + " below node " + std::to_string(v));
    }
    NodeId u = v;
    for (Depth hops = depth - d; hops > 0; --hops) {
        u = parents[u];
    }
    return u;
}

JumpTable JumpTable::build(const Tree& t) {
    JumpTable jt;
    jt.n_ = t.size();
    const auto max_depth = static_cast<unsigned>(t.max_depth());
    jt.levels_ = max_depth == 0 ? 1 : static_cast<std::size_t>(std::bit_width(max_depth));
    jt.up_.resize(jt.levels_ * jt.n_);

    const auto parents = t.parents();
    std::copy(parents.begin(), parents.end(), jt.up_.begin());
    for (std::size_t j = 1; j < jt.levels_; ++j) {
        const NodeId* prev = jt.up_.data() + (j - 1) * jt.n_;
        NodeId* cur = jt.up_.data() + j * jt.n_;
        for (std::size_t v = 0; v < jt.n_; ++v) {
            const NodeId mid = prev[v];
            cur[v] = mid == kNoParent ? kNoParent : prev[mid];
        }
    }
    return jt;
}

std::span<const NodeId> JumpTable::row(std::size_t j) const {
    if (j >= levels_) {
        throw Error(Errc::DepthOutOfRange, "jump row " + std::to_string(j));
    }
    return std::span<const NodeId>(up_).subspan(j * n_, n_);
}

NodeId jump_la(const JumpTable& jt, std::span<const Depth> depths, NodeId v, Depth d) {
    if (v < 0 || static_cast<std::size_t>(v) >= jt.size() || depths.size() != jt.size()) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    if (d < 0) {
        throw Error(Errc::DepthOutOfRange, "depth " + std::to_string(d));
    }
    if (d > depths[v]) {
        throw Error(Errc::DepthBelowNode, "depth " + std::to_string(d) + " below node " + std::to_string(v));
    }
    auto k = static_cast<unsigned>(depths[v] - d);
    NodeId u = v;
    for (std::size_t j = 0; k != 0; ++j, k >>= 1) {
        if (k & 1u) {
            u = jt.up(j, u);
        }
    }
    return u;
}

} // namespace levelanc
