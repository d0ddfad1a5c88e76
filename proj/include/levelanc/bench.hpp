#ifndef LEVELANC_BENCH_HPP
#define LEVELANC_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "levelanc/generate.hpp"
#include "levelanc/methods.hpp"
#include "levelanc/query.hpp"

namespace levelanc {

struct BenchRecord {
    std::string method;
    std::string family;
    std::size_t n = 0;
    // median wall time of one build over the configured repeats
    std::uint64_t build_ns = 0;
    double query_ns_mean = 0.0;
    // paper_index only
    std::optional<double> comparisons_mean;
    std::size_t queries = 0;
    std::uint64_t seed = 0;
};

struct BenchConfig {
    std::vector<TreeGenSpec> families;
    std::vector<std::size_t> sizes;
    std::vector<Method> methods{Method::PaperIndex, Method::JumpPointer, Method::Naive};
    std::size_t queries = 1000;
    std::uint64_t seed = 0;
    std::size_t build_repeats = 5;
    SearchLayout layout = SearchLayout::Sorted;
};

// XORed into the run seed to get the query sampling stream, so tree shape
// and query choice do not share a stream.
inline constexpr std::uint64_t kQuerySeedMix = 0x9E3779B97F4A7C15ull;

// v uniform over nodes, then d uniform over [0, depth(v)].
std::vector<LaQuery> sample_queries(const Tree& tree, std::size_t count, std::uint64_t seed);

// Trees come from generate({family, n, config.seed}); queries from
// sample_queries(tree, config.queries, config.seed ^ kQuerySeedMix).
// Rows are ordered family, size, method.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "method,family,n,build_ns,query_ns_mean,comparisons_mean,queries,seed";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

} // namespace levelanc

#endif
