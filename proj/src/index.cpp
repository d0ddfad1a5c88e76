#include "levelanc/index.hpp"

#include <array>
#include <cassert>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>

namespace levelanc {

SearchLayout parse_layout(std::string_view name) {
    if (name == "sorted") {
        return SearchLayout::Sorted;
    }
    if (name == "eytzinger") {
        return SearchLayout::Eytzinger;
    }
    throw Error(Errc::InvalidSpec, "unknown layout '" + std::string(name) + "'");
}

std::string_view layout_name(SearchLayout layout) noexcept {
    return layout == SearchLayout::Eytzinger ? "eytzinger" : "sorted";
}

LevelAncestorIndex LevelAncestorIndex::build(const Tree& tree, SearchLayout layout) {
    const std::size_t n = tree.size();
    LevelAncestorIndex idx;
    idx.layout_ = layout;
    idx.label_.assign(n, 0);
    idx.depth_.assign(tree.depths().begin(), tree.depths().end());
    idx.node_of_label_.assign(n + 1, kNoParent);

    // Size every depth's array up front so the append in the traversal is a
    // plain store.
    const auto levels = static_cast<std::size_t>(tree.max_depth()) + 1;
    idx.level_offsets_.assign(levels + 1, 0);
    for (Depth d : tree.depths()) {
        ++idx.level_offsets_[d + 1];
    }
    for (std::size_t d = 0; d < levels; ++d) {
        idx.level_offsets_[d + 1] += idx.level_offsets_[d];
    }
    idx.level_labels_.assign(n, 0);
    std::vector<std::uint64_t> append_at(idx.level_offsets_.begin(), idx.level_offsets_.end() - 1);

    // Children go on the stack reversed so they pop in stored order.
    struct Pending {
        NodeId node;
        Depth depth;
    };
    Label counter = 0;
    std::vector<Pending> stack;
    stack.push_back({tree.root(), 0});
    while (!stack.empty()) {
        const auto [v, d] = stack.back();
        stack.pop_back();
        ++idx.build_visits_;

        ++counter;
        idx.label_[v] = counter;
        assert(idx.depth_[v] == d);
        idx.level_labels_[append_at[d]++] = counter;
        idx.node_of_label_[counter] = v;

        const auto kids = tree.children_unchecked(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            tree.prefetch_children(*it);
            stack.push_back({*it, d + 1});
        }
    }

#ifndef NDEBUG
    for (std::size_t d = 0; d < levels; ++d) {
        assert(append_at[d] == idx.level_offsets_[d + 1]);
        for (auto i = idx.level_offsets_[d] + 1; i < idx.level_offsets_[d + 1]; ++i) {
            assert(idx.level_labels_[i - 1] < idx.level_labels_[i]);
        }
    }
#endif

    idx.build_search_layout();
    return idx;
}

void LevelAncestorIndex::build_search_layout() {
    level_search_.clear();
    if (layout_ != SearchLayout::Eytzinger) {
        return;
    }
    level_search_.resize(level_labels_.size());
    for (std::size_t d = 0; d + 1 < level_offsets_.size(); ++d) {
        const auto base = level_offsets_[d];
        const auto m = level_offsets_[d + 1] - base;
        std::uint64_t next = 0;
        // In-order walk of the implicit tree rooted at 1 (children 2k, 2k+1);
        // recursion depth is log2(m).
        auto fill = [&](auto& self, std::uint64_t k) -> void {
            if (k > m) {
                return;
            }
            self(self, 2 * k);
            level_search_[base + k - 1] = level_labels_[base + next++];
            self(self, 2 * k + 1);
        };
        fill(fill, 1);
    }
}

Label LevelAncestorIndex::label_of(NodeId v) const {
    if (!contains(v)) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    return label_[v];
}

NodeId LevelAncestorIndex::node_of(Label l) const {
    if (l < 1 || l > label_.size()) {
        throw Error(Errc::LabelOutOfRange, "label " + std::to_string(l));
    }
    return node_of_label_[l];
}

Depth LevelAncestorIndex::depth_of(NodeId v) const {
    if (!contains(v)) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    return depth_[v];
}

std::span<const Label> LevelAncestorIndex::depth_array(Depth d) const {
    if (d < 0 || d > max_depth()) {
        throw Error(Errc::DepthOutOfRange, "depth " + std::to_string(d));
    }
    const auto begin = level_offsets_[d];
    return std::span<const Label>(level_labels_).subspan(begin, level_offsets_[d + 1] - begin);
}

std::span<const Label> LevelAncestorIndex::search_array(Depth d) const {
    if (layout_ == SearchLayout::Sorted) {
        return depth_array(d);
    }
    if (d < 0 || d > max_depth()) {
        throw Error(Errc::DepthOutOfRange, "depth " + std::to_string(d));
    }
    const auto begin = level_offsets_[d];
    return std::span<const Label>(level_search_).subspan(begin, level_offsets_[d + 1] - begin);
}

namespace {

constexpr std::array<char, 8> kMagic = {'L', 'A', 'I', 'N', 'D', 'E', 'X', '1'};

template <typename UInt>
void put_le(std::ostream& out, UInt value) {
    std::array<char, sizeof(UInt)> bytes{};
    for (std::size_t i = 0; i < sizeof(UInt); ++i) {
        bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
    }
    out.write(bytes.data(), bytes.size());
}

template <typename UInt>
UInt get_le(std::istream& in) {
    std::array<unsigned char, sizeof(UInt)> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
        throw Error(Errc::SnapshotCorrupt, "truncated snapshot");
    }
    UInt value = 0;
    for (std::size_t i = 0; i < sizeof(UInt); ++i) {
        value |= static_cast<UInt>(bytes[i]) << (8 * i);
    }
    return value;
}

} // namespace

void LevelAncestorIndex::write_snapshot(std::ostream& out) const {
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(layout_));
    put_le<std::uint32_t>(out, 0);
    put_le<std::uint64_t>(out, label_.size());
    put_le<std::uint64_t>(out, level_offsets_.size() - 1);
    for (Label l : label_) {
        put_le<std::uint32_t>(out, l);
    }
    for (Depth d : depth_) {
        put_le<std::uint32_t>(out, static_cast<std::uint32_t>(d));
    }
    for (auto off : level_offsets_) {
        put_le<std::uint64_t>(out, off);
    }
    if (!out) {
        throw Error(Errc::IoError, "snapshot write failed");
    }
}

LevelAncestorIndex LevelAncestorIndex::read_snapshot(std::istream& in) {
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw Error(Errc::SnapshotCorrupt, "bad magic");
    }
    const auto layout = get_le<std::uint32_t>(in);
    if (layout > 1) {
        throw Error(Errc::SnapshotCorrupt, "unknown layout " + std::to_string(layout));
    }
    if (get_le<std::uint32_t>(in) != 0) {
        throw Error(Errc::SnapshotCorrupt, "reserved field set");
    }
    const auto n = get_le<std::uint64_t>(in);
    const auto levels = get_le<std::uint64_t>(in);
    if (n < 1 || n > static_cast<std::uint64_t>(std::numeric_limits<NodeId>::max()) || levels < 1 ||
        levels > n) {
        throw Error(Errc::SnapshotCorrupt, "bad header sizes");
    }

    LevelAncestorIndex idx;
    idx.layout_ = static_cast<SearchLayout>(layout);
    idx.label_.resize(n);
    idx.depth_.resize(n);
    idx.node_of_label_.assign(n + 1, kNoParent);
    for (std::uint64_t v = 0; v < n; ++v) {
        const auto l = get_le<std::uint32_t>(in);
        if (l < 1 || l > n || idx.node_of_label_[l] != kNoParent) {
            throw Error(Errc::SnapshotCorrupt, "labels are not a permutation of 1..n");
        }
        idx.label_[v] = l;
        idx.node_of_label_[l] = static_cast<NodeId>(v);
    }
    for (std::uint64_t v = 0; v < n; ++v) {
        const auto d = get_le<std::uint32_t>(in);
        if (d >= levels) {
            throw Error(Errc::SnapshotCorrupt, "depth exceeds level count");
        }
        idx.depth_[v] = static_cast<Depth>(d);
    }
    idx.level_offsets_.resize(levels + 1);
    for (auto& off : idx.level_offsets_) {
        off = get_le<std::uint64_t>(in);
    }
    if (idx.level_offsets_.front() != 0 || idx.level_offsets_.back() != n) {
        throw Error(Errc::SnapshotCorrupt, "level offsets do not span n");
    }

    // Distributing labels in increasing order rebuilds the sorted arrays.
    idx.level_labels_.assign(n, 0);
    std::vector<std::uint64_t> append_at(idx.level_offsets_.begin(), idx.level_offsets_.end() - 1);
    for (Label l = 1; l <= n; ++l) {
        const Depth d = idx.depth_[idx.node_of_label_[l]];
        if (append_at[d] >= idx.level_offsets_[d + 1]) {
            throw Error(Errc::SnapshotCorrupt, "level offsets disagree with depths");
        }
        idx.level_labels_[append_at[d]++] = l;
    }
    for (std::uint64_t d = 0; d < levels; ++d) {
        if (append_at[d] != idx.level_offsets_[d + 1]) {
            throw Error(Errc::SnapshotCorrupt, "level offsets disagree with depths");
        }
    }
    if (idx.depth_[idx.node_of_label_[1]] != 0 || idx.level_offsets_[1] != 1) {
        throw Error(Errc::SnapshotCorrupt, "label 1 must be the only node at depth 0");
    }
    idx.build_search_layout();
    return idx;
}

} // namespace levelanc
