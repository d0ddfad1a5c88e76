#ifndef LEVELANC_GENERATE_HPP
#define LEVELANC_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "levelanc/tree.hpp"

namespace levelanc {

enum class Family {
    Path,
    Star,
    Caterpillar,
    BalancedKary,
    RandomAttachment,
};

struct TreeGenSpec {
    Family family = Family::RandomAttachment;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    // branching factor, balanced_kary only
    unsigned arity = 2;
};

// Accepts "path", "star", "caterpillar", "random_attachment", "balanced_kary"
// (arity 2) and "balanced_kary:K".
TreeGenSpec parse_family(std::string_view name);
// Inverse of parse_family; balanced_kary always carries ":K".
std::string family_name(const TreeGenSpec& spec);

void validate(const TreeGenSpec& spec);

/*
 * Canonical shapes (seed-independent):
 *   path          parent[i] = i-1
 *   star          parent[i] = 0
 *   caterpillar   spine of ceil(n/2) nodes as a path, node s+j hangs off spine node j
 *   balanced_kary heap order, parent[i] = (i-1)/k
 * random_attachment draws parent[i] uniformly from [0, i) with make_rng(seed).
 */
std::vector<NodeId> generate_parents(const TreeGenSpec& spec);
Tree generate(const TreeGenSpec& spec);

// All randomness in the project comes from std::mt19937_64 seeded with the
// caller's 64-bit seed, and bounded draws use uniform_below, so streams are
// identical across standard libraries.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, bound) by rejection on the raw 64-bit output.
// bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

} // namespace levelanc

#endif
