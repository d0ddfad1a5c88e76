#ifndef LEVELANC_BASELINES_HPP
#define LEVELANC_BASELINES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "levelanc/tree.hpp"

namespace levelanc {

// Brute force: walks parent links to find depth(v), then walks
// depth(v) - d links back up. Uses nothing but Tree::parents().
NodeId naive_la(const Tree& t, NodeId v, Depth d);

/*
 * Binary lifting table: row j holds the 2^j-th ancestor of every node, or -1
 * once the jump passes the root. floor(log2(max depth)) + 1 rows, at least
 * one. O(n log n) space.
 */
class JumpTable {
public:
    static JumpTable build(const Tree& t);

    std::size_t size() const noexcept { return n_; }
    std::size_t levels() const noexcept { return levels_; }

    std::span<const NodeId> row(std::size_t j) const;
    NodeId up(std::size_t j, NodeId v) const noexcept { return up_[j * n_ + v]; }

private:
    std::size_t n_ = 0;
    std::size_t levels_ = 0;
    std::vector<NodeId> up_;
};

inline JumpTable build_jump_table(const Tree& t) { return JumpTable::build(t); }

// Decomposes depth(v) - d into powers of two and jumps.
NodeId jump_la(const JumpTable& jt, std::span<const Depth> depths, NodeId v, Depth d);

} // namespace levelanc

#endif
