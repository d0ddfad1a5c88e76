#include "levelanc/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace levelanc {

Tree Tree::from_parent_array(std::span<const NodeId> parents) {
    if (parents.empty()) {
        throw Error(Errc::NoRoot, "empty parent array");
    }
    if (parents.size() > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
        throw Error(Errc::InvalidSpec, "too many nodes");
    }
    const auto n = static_cast<NodeId>(parents.size());

    Tree t;
    t.parent_.assign(parents.begin(), parents.end());

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(parents.size() - 1);
    for (NodeId v = 0; v < n; ++v) {
        const NodeId p = parents[v];
        if (p == kNoParent) {
            if (t.root_ != kNoParent) {
                throw Error(Errc::MultipleRoots,
                            "nodes " + std::to_string(t.root_) + " and " + std::to_string(v));
            }
            t.root_ = v;
        } else if (p < 0 || p >= n) {
            throw Error(Errc::ParentOutOfRange,
                        "parent[" + std::to_string(v) + "] = " + std::to_string(p));
        } else {
            edges.emplace_back(p, v);
        }
    }
    if (t.root_ == kNoParent) {
        throw Error(Errc::NoRoot, "no entry equals -1");
    }
    t.link(edges);
    return t;
}

Tree Tree::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) {
        throw Error(Errc::InvalidSpec, "tree needs at least one node");
    }
    if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
        throw Error(Errc::InvalidSpec, "too many nodes");
    }
    if (edges.size() != n - 1) {
        throw Error(Errc::EdgeCountMismatch,
                    "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    }

    Tree t;
    t.parent_.assign(n, kNoParent);
    std::vector<std::pair<NodeId, NodeId>> ordered;
    ordered.reserve(edges.size());
    for (const Edge& e : edges) {
        for (NodeId endpoint : {e.parent, e.child}) {
            if (endpoint < 0 || static_cast<std::size_t>(endpoint) >= n) {
                throw Error(Errc::NodeOutOfRange, "edge endpoint " + std::to_string(endpoint));
            }
        }
        if (t.parent_[e.child] != kNoParent) {
            throw Error(Errc::DuplicateChild, "node " + std::to_string(e.child) + " has two parents");
        }
        t.parent_[e.child] = e.parent;
        ordered.emplace_back(e.parent, e.child);
    }

    // n-1 distinct children leave exactly one parentless node.
    const auto it = std::find(t.parent_.begin(), t.parent_.end(), kNoParent);
    if (it == t.parent_.end()) {
        throw Error(Errc::NoRoot, "every node has a parent");
    }
    t.root_ = static_cast<NodeId>(it - t.parent_.begin());
    t.link(ordered);
    return t;
}

void Tree::link(const std::vector<std::pair<NodeId, NodeId>>& ordered_edges) {
    const std::size_t n = parent_.size();

    // Stable counting sort by parent keeps the supplied child order.
    child_offsets_.assign(n + 1, 0);
    for (const auto& [p, c] : ordered_edges) {
        ++child_offsets_[p + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        child_offsets_[v + 1] += child_offsets_[v];
    }
    child_list_.resize(ordered_edges.size());
    std::vector<std::uint32_t> cursor(child_offsets_.begin(), child_offsets_.end() - 1);
    for (const auto& [p, c] : ordered_edges) {
        child_list_[cursor[p]++] = c;
    }

    // Nodes on a cycle are never reached from the root.
    depth_.assign(n, -1);
    std::vector<NodeId> queue;
    queue.reserve(n);
    queue.push_back(root_);
    depth_[root_] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (NodeId c : children(v)) {
            depth_[c] = depth_[v] + 1;
            queue.push_back(c);
        }
    }
    if (queue.size() != n) {
        const auto unreached = std::find(depth_.begin(), depth_.end(), -1) - depth_.begin();
        throw Error(Errc::CycleDetected, "node " + std::to_string(unreached) + " cannot reach the root");
    }
    max_depth_ = *std::max_element(depth_.begin(), depth_.end());
}

NodeId Tree::parent(NodeId v) const {
    if (!contains(v)) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    return parent_[v];
}

Depth Tree::depth(NodeId v) const {
    if (!contains(v)) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    return depth_[v];
}

std::span<const NodeId> Tree::children(NodeId v) const {
    if (!contains(v)) {
        throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v));
    }
    const auto begin = child_offsets_[v];
    const auto end = child_offsets_[v + 1];
    return std::span<const NodeId>(child_list_).subspan(begin, end - begin);
}

Depth depth_of(const Tree& t, NodeId v) {
    return t.depth(v);
}

namespace {

template <typename Int>
Int parse_int(std::string_view token, std::string_view what) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(Errc::ParseError, "bad " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

} // namespace

std::vector<NodeId> read_parent_array(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw Error(Errc::ParseError, "empty input");
    }
    const auto header_tokens = split_ws(header);
    if (header_tokens.size() != 1) {
        throw Error(Errc::ParseError, "first line must hold the node count");
    }
    const auto n = parse_int<std::int64_t>(header_tokens[0], "node count");
    if (n < 1 || n > std::numeric_limits<NodeId>::max()) {
        throw Error(Errc::ParseError, "node count out of range: " + std::to_string(n));
    }

    std::string body;
    if (!std::getline(in, body)) {
        throw Error(Errc::ParseError, "missing parent line");
    }
    const auto tokens = split_ws(body);
    if (tokens.size() != static_cast<std::size_t>(n)) {
        throw Error(Errc::ParseError, "expected " + std::to_string(n) + " parents, got " +
                                          std::to_string(tokens.size()));
    }
    std::vector<NodeId> parents;
    parents.reserve(tokens.size());
    for (auto tok : tokens) {
        parents.push_back(parse_int<NodeId>(tok, "parent id"));
    }

    std::string rest;
    while (std::getline(in, rest)) {
        if (!split_ws(rest).empty()) {
            throw Error(Errc::ParseError, "trailing content after parent line");
        }
    }
    return parents;
}

void write_parent_array(std::ostream& out, std::span<const NodeId> parents) {
    out << parents.size() << '\n';
    for (std::size_t i = 0; i < parents.size(); ++i) {
        if (i != 0) {
            out << ' ';
        }
        out << parents[i];
    }
    out << '\n';
}

Tree read_tree_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open " + path);
    }
    const auto parents = read_parent_array(in);
    return Tree::from_parent_array(parents);
}

} // namespace levelanc
