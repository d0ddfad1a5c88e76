"""Level ancestor queries over rooted trees.

Build a :class:`LevelAncestorIndex` once in O(n), then answer
``level_ancestor(v, d)`` in O(log n) by predecessor search over the
pre-order labels stored for depth ``d``.
"""

from ._core import (
    BenchRecord,
    JumpTable,
    LevelAncestorError,
    LevelAncestorIndex,
    QueryStats,
    SearchLayout,
    Tree,
    generate,
    generate_parents,
    jump_la,
    naive_la,
    predecessor_search,
    run_bench,
)

__all__ = [
    "BenchRecord",
    "JumpTable",
    "LevelAncestorError",
    "LevelAncestorIndex",
    "QueryStats",
    "SearchLayout",
    "Tree",
    "generate",
    "generate_parents",
    "jump_la",
    "naive_la",
    "predecessor_search",
    "run_bench",
]
