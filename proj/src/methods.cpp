#include "levelanc/methods.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "levelanc/query.hpp"

namespace levelanc {

Method parse_method(std::string_view name) {
    if (name == "paper_index") {
        return Method::PaperIndex;
    }
    if (name == "jump_pointer") {
        return Method::JumpPointer;
    }
    if (name == "naive") {
        return Method::Naive;
    }
    throw Error(Errc::InvalidSpec, "unknown method '" + std::string(name) + "'");
}

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::PaperIndex: return "paper_index";
        case Method::JumpPointer: return "jump_pointer";
        case Method::Naive: return "naive";
    }
    return "unknown";
}

Solver::Solver(const Tree& tree, Method method, SearchLayout layout) : tree_(&tree), method_(method) {
    switch (method) {
        case Method::PaperIndex:
            index_.emplace(LevelAncestorIndex::build(tree, layout));
            break;
        case Method::JumpPointer:
            jumps_.emplace(JumpTable::build(tree));
            break;
        case Method::Naive:
            break;
    }
}

NodeId Solver::query(NodeId v, Depth d) const {
    switch (method_) {
        case Method::PaperIndex: return level_ancestor(*index_, v, d);
        case Method::JumpPointer: return jump_la(*jumps_, tree_->depths(), v, d);
        case Method::Naive: return naive_la(*tree_, v, d);
    }
    return kNoParent;
}

namespace {

struct ParsedLine {
    bool blank = false;
    std::optional<Errc> error;
    NodeId node = 0;
    Depth depth = 0;
};

ParsedLine parse_query_line(std::string_view line) {
    ParsedLine out;
    std::int64_t values[2] = {0, 0};
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        if (count == 2) {
            out.error = Errc::ParseError;
            return out;
        }
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), values[count]);
        const bool at_separator = ptr == line.data() + line.size() || *ptr == ' ' || *ptr == '\t' || *ptr == '\r';
        if (ec != std::errc{} || !at_separator) {
            out.error = Errc::ParseError;
            return out;
        }
        i = static_cast<std::size_t>(ptr - line.data());
        ++count;
    }
    if (count == 0) {
        out.blank = true;
        return out;
    }
    if (count != 2) {
        out.error = Errc::ParseError;
        return out;
    }
    constexpr auto kMax = std::numeric_limits<std::int32_t>::max();
    if (values[0] < 0 || values[0] > kMax) {
        out.error = Errc::NodeOutOfRange;
    } else if (values[1] < 0) {
        out.error = Errc::DepthOutOfRange;
    } else if (values[1] > kMax) {
        // deeper than any representable tree
        out.error = Errc::DepthBelowNode;
    }
    out.node = static_cast<NodeId>(values[0] > kMax ? 0 : values[0]);
    out.depth = static_cast<Depth>(values[1] > kMax || values[1] < 0 ? 0 : values[1]);
    return out;
}

} // namespace

std::size_t answer_query_stream(const Solver& solver, std::istream& in, std::ostream& out) {
    std::size_t answered = 0;
    std::string line;
    while (std::getline(in, line)) {
        const ParsedLine q = parse_query_line(line);
        if (q.blank) {
            continue;
        }
        ++answered;
        if (q.error) {
            out << "ERR " << to_string(*q.error) << '\n';
            continue;
        }
        try {
            out << solver.query(q.node, q.depth) << '\n';
        } catch (const Error& e) {
            out << "ERR " << to_string(e.code()) << '\n';
        }
    }
    return answered;
}

} // namespace levelanc
