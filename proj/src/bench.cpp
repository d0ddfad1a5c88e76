#include "levelanc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

namespace levelanc {

std::vector<LaQuery> sample_queries(const Tree& tree, std::size_t count, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    const auto depths = tree.depths();
    std::vector<LaQuery> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto v = static_cast<NodeId>(uniform_below(rng, tree.size()));
        const auto d = static_cast<Depth>(uniform_below(rng, static_cast<std::uint64_t>(depths[v]) + 1));
        out.push_back({v, d});
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

std::uint64_t median(std::vector<std::uint64_t> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

BenchRecord measure(const Tree& tree, const TreeGenSpec& spec, Method method,
                    const std::vector<LaQuery>& queries, const BenchConfig& config) {
    BenchRecord rec;
    rec.method = std::string(method_name(method));
    rec.family = family_name(spec);
    rec.n = tree.size();
    rec.queries = queries.size();
    rec.seed = config.seed;

    std::vector<std::uint64_t> build_times;
    const std::size_t repeats = std::max<std::size_t>(1, config.build_repeats);
    std::optional<Solver> solver;
    for (std::size_t r = 0; r < repeats; ++r) {
        solver.reset();
        const auto start = Clock::now();
        solver.emplace(tree, method, config.layout);
        build_times.push_back(method == Method::Naive ? 0 : elapsed_ns(start));
    }
    rec.build_ns = median(std::move(build_times));

    // The checksum keeps the loop from being optimized away.
    std::uint64_t checksum = 0;
    const auto start = Clock::now();
    for (const auto& q : queries) {
        checksum += static_cast<std::uint64_t>(solver->query(q.node, q.depth));
    }
    const auto total = elapsed_ns(start);
    rec.query_ns_mean = queries.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(queries.size());
    asm volatile("" : : "r"(checksum) : "memory");

    if (method == Method::PaperIndex && !queries.empty()) {
        std::uint64_t comparisons = 0;
        for (const auto& q : queries) {
            comparisons += level_ancestor_with_stats(*solver->index(), q.node, q.depth).second.comparisons;
        }
        rec.comparisons_mean = static_cast<double>(comparisons) / static_cast<double>(queries.size());
    }
    return rec;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    std::vector<BenchRecord> rows;
    for (const auto& family : config.families) {
        for (std::size_t n : config.sizes) {
            TreeGenSpec spec = family;
            spec.n = n;
            spec.seed = config.seed;
            const Tree tree = generate(spec);
            const auto queries = sample_queries(tree, config.queries, config.seed ^ kQuerySeedMix);
            for (Method m : config.methods) {
                rows.push_back(measure(tree, spec, m, queries, config));
            }
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
    out << kBenchCsvHeader << '\n';
    char buf[64];
    for (const auto& r : rows) {
        out << r.method << ',' << r.family << ',' << r.n << ',' << r.build_ns << ',';
        std::snprintf(buf, sizeof(buf), "%.3f", r.query_ns_mean);
        out << buf << ',';
        if (r.comparisons_mean) {
            std::snprintf(buf, sizeof(buf), "%.6f", *r.comparisons_mean);
            out << buf;
        }
        out << ',' << r.queries << ',' << r.seed << '\n';
    }
}

} // namespace levelanc
