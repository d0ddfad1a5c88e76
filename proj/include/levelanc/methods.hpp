#ifndef LEVELANC_METHODS_HPP
#define LEVELANC_METHODS_HPP

#include <iosfwd>
#include <optional>
#include <string_view>

#include "levelanc/baselines.hpp"
#include "levelanc/index.hpp"
#include "levelanc/tree.hpp"

namespace levelanc {

enum class Method {
    PaperIndex,
    JumpPointer,
    Naive,
};

Method parse_method(std::string_view name);
std::string_view method_name(Method m) noexcept;

/*
 * One level ancestor implementation behind a common call, used by the CLI
 * and the benchmark so all three methods see identical inputs. Holds a
 * reference to the tree, which must outlive the solver.
 */
class Solver {
public:
    Solver(const Tree& tree, Method method, SearchLayout layout = SearchLayout::Sorted);

    Method method() const noexcept { return method_; }
    const Tree& tree() const noexcept { return *tree_; }
    const LevelAncestorIndex* index() const noexcept { return index_ ? &*index_ : nullptr; }

    // Throws Error with the same code for the same bad query whatever the method.
    NodeId query(NodeId v, Depth d) const;

private:
    const Tree* tree_;
    Method method_;
    std::optional<LevelAncestorIndex> index_;
    std::optional<JumpTable> jumps_;
};

// Reads "v d" lines and writes one line per query: the answer, or
// "ERR <code>". Blank lines are skipped. Returns the number of queries.
std::size_t answer_query_stream(const Solver& solver, std::istream& in, std::ostream& out);

} // namespace levelanc

#endif
