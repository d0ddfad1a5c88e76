// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "levelanc/baselines.hpp"
#include "levelanc/bench.hpp"
#include "levelanc/generate.hpp"
#include "levelanc/index.hpp"
#include "levelanc/query.hpp"

using namespace levelanc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Instrumented-query tally shared by criteria 1, 3 and 5.
struct ComparisonLog {
    std::size_t queries = 0;
    std::size_t violations = 0;

    void record(const QueryStats& s) {
        ++queries;
        if (s.comparisons > static_cast<std::size_t>(std::bit_width(s.array_len))) {
            ++violations;
        }
    }
};

std::vector<TreeGenSpec> criterion1_trees() {
    std::vector<TreeGenSpec> specs;
    for (std::size_t n : {1, 2, 3, 17, 128, 512}) {
        specs.push_back({Family::Path, n, 0});
        specs.push_back({Family::Star, n, 0});
        specs.push_back({Family::Caterpillar, n, 0});
        specs.push_back({Family::BalancedKary, n, 0, 2});
        specs.push_back({Family::BalancedKary, n, 0, 3});
        specs.push_back({Family::RandomAttachment, n, 0});
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        specs.push_back({Family::RandomAttachment, 1 + (seed * 131) % 512, seed});
    }
    return specs;
}

Outcome oracle_equivalence(ComparisonLog& log) {
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    const auto specs = criterion1_trees();
    for (const auto& spec : specs) {
        const Tree t = generate(spec);
        const JumpTable jt = build_jump_table(t);
        const auto sorted = build_index(t, SearchLayout::Sorted);
        const auto eytz = build_index(t, SearchLayout::Eytzinger);
        for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
            for (Depth d = 0; d <= t.depth(v); ++d) {
                ++pairs;
                const NodeId want = naive_la(t, v, d);
                const auto [a, sa] = level_ancestor_with_stats(sorted, v, d);
                const auto [b, sb] = level_ancestor_with_stats(eytz, v, d);
                log.record(sa);
                log.record(sb);
                if (a != want || b != want || jump_la(jt, t.depths(), v, d) != want) {
                    ++mismatches;
                }
            }
        }
    }
    return {mismatches == 0, std::to_string(specs.size()) + " trees, " + std::to_string(pairs) +
                                 " (v,d) pairs x 2 layouts, " + std::to_string(mismatches) + " mismatches"};
}

Outcome monotonicity() {
    std::size_t arrays = 0;
    std::size_t violations = 0;
    for (const auto& spec : criterion1_trees()) {
        const auto idx = build_index(generate(spec));
        for (Depth d = 0; d <= idx.max_depth(); ++d) {
            const auto arr = idx.depth_array(d);
            ++arrays;
            if (std::adjacent_find(arr.begin(), arr.end(), std::greater_equal<Label>()) != arr.end()) {
                ++violations;
            }
        }
    }
    return {violations == 0, std::to_string(arrays) + " depth arrays, " + std::to_string(violations) + " violations"};
}

Outcome predecessor_characterization(ComparisonLog& log) {
    std::size_t sampled = 0;
    std::size_t violations = 0;
    std::size_t identity_checked = 0;
    Rng rng = make_rng(2024);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Tree t = generate({Family::RandomAttachment, 2000, 500 + seed});
        const auto idx = build_index(t);
        for (int i = 0; i < 1000; ++i) {
            NodeId v;
            do {
                v = static_cast<NodeId>(uniform_below(rng, t.size()));
            } while (t.depth(v) == 0);
            const auto d = static_cast<Depth>(uniform_below(rng, static_cast<std::uint64_t>(t.depth(v))));
            const Label lv = idx.label_of(v);
            Label expect = 0;
            for (Label x : idx.depth_array(d)) {
                if (x < lv) {
                    expect = std::max(expect, x);
                }
            }
            const auto [a, stats] = level_ancestor_with_stats(idx, v, d);
            log.record(stats);
            ++sampled;
            if (idx.label_of(a) != expect) {
                ++violations;
            }
        }
        for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
            const auto [a, stats] = level_ancestor_with_stats(idx, v, t.depth(v));
            log.record(stats);
            ++identity_checked;
            if (a != v) {
                ++violations;
            }
        }
    }
    return {violations == 0, std::to_string(sampled) + " sampled pairs with d < depth(v), " +
                                 std::to_string(identity_checked) + " identity queries, " +
                                 std::to_string(violations) + " violations"};
}

std::uint64_t timed_build_ns(const Tree& t) {
    const auto start = std::chrono::steady_clock::now();
    const auto idx = build_index(t);
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return idx.size() == t.size() ? static_cast<std::uint64_t>(ns.count()) : 0;
}

Outcome linear_preprocessing() {
    std::size_t builds = 0;
    std::size_t bad_counts = 0;
    auto count_check = [&](const Tree& t) {
        ++builds;
        if (build_index(t).build_visits() != t.size()) {
            ++bad_counts;
        }
    };
    for (const auto& spec : criterion1_trees()) {
        count_check(generate(spec));
    }
    const Tree small = generate({Family::RandomAttachment, 1u << 12, 1});
    const Tree large = generate({Family::RandomAttachment, 1u << 16, 1});
    count_check(small);
    count_check(large);

    // Alternate the two sizes so both run under the same machine conditions,
    // and keep the fastest run of each to drop scheduler interference.
    std::uint64_t t_small = UINT64_MAX;
    std::uint64_t t_large = UINT64_MAX;
    for (int round = 0; round < 60; ++round) {
        t_small = std::min(t_small, timed_build_ns(small));
        t_large = std::min(t_large, timed_build_ns(large));
    }
    const double ratio = t_small == 0 ? 0.0 : static_cast<double>(t_large) / static_cast<double>(t_small);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "visit counter == n on %zu builds (%zu off); build_ns 2^12=%llu 2^16=%llu ratio=%.2f",
                  builds, bad_counts, static_cast<unsigned long long>(t_small),
                  static_cast<unsigned long long>(t_large), ratio);
    return {bad_counts == 0 && ratio >= 8.0 && ratio <= 32.0, buf};
}

Outcome logarithmic_queries(const ComparisonLog& log) {
    const auto idx = build_index(generate({Family::Star, (1u << 20) + 1, 0}));
    std::size_t worst = 0;
    std::size_t wrong = 0;
    for (NodeId leaf = 1; leaf <= (1 << 20); ++leaf) {
        const auto [a, s] = level_ancestor_with_stats(idx, leaf, 1);
        worst = std::max(worst, s.comparisons);
        wrong += a != leaf;
    }
    const bool ok = log.violations == 0 && worst <= 21 && wrong == 0 && log.queries > 0;
    return {ok, std::to_string(log.queries) + " instrumented queries, " + std::to_string(log.violations) +
                    " over floor(log2(len))+1; star 2^20+1 worst=" + std::to_string(worst) + " (<= 21)"};
}

Outcome cli_differential() {
    cli::TempDir dir("la-accept-diff");
    const std::vector<std::pair<std::string, std::size_t>> corpus{
        {"path", 300},         {"star", 300},           {"caterpillar", 301},      {"balanced_kary:2", 511},
        {"balanced_kary:4", 400}, {"random_attachment", 100}, {"random_attachment", 1000}, {"random_attachment", 5000},
        {"path", 17},          {"caterpillar", 64},     {"balanced_kary:3", 1000}, {"random_attachment", 20000},
    };
    std::size_t trees = 0;
    std::size_t mismatched = 0;
    std::size_t lines = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [family, n] = corpus[i];
        const auto tree_file = dir / ("t" + std::to_string(i) + ".txt");
        const auto query_file = dir / ("q" + std::to_string(i) + ".txt");
        if (cli::run("gen " + family + " " + std::to_string(n) + " " + std::to_string(i) + " " + tree_file.string())
                .status != 0) {
            return {false, "la gen failed for " + family};
        }
        TreeGenSpec spec = parse_family(family);
        spec.n = n;
        spec.seed = i;
        const Tree t = generate(spec);
        std::ostringstream q;
        for (const auto& x : sample_queries(t, 95, 1000 + i)) {
            q << x.node << ' ' << x.depth << '\n';
        }
        // invalid queries must agree as well
        q << "0 1\n" << n << " 0\n" << n - 1 << " " << n + 5 << "\n" << "1 -1\n" << "bad line\n";
        cli::spit(query_file, q.str());

        const auto args = "query " + tree_file.string() + " " + query_file.string() + " --method ";
        const auto paper = cli::run(args + "paper_index");
        const auto jump = cli::run(args + "jump_pointer");
        const auto naive = cli::run(args + "naive");
        const auto eytz = cli::run(args + "paper_index --layout eytzinger");
        ++trees;
        lines += std::count(paper.out.begin(), paper.out.end(), '\n');
        if (paper.status != 0 || jump.status != 0 || naive.status != 0 || paper.out != jump.out ||
            paper.out != naive.out || paper.out != eytz.out) {
            ++mismatched;
        }
    }
    return {mismatched == 0 && trees >= 10 && lines >= trees * 100,
            std::to_string(trees) + " trees, " + std::to_string(lines) + " query lines, " +
                std::to_string(mismatched) + " trees with differing output"};
}

Outcome determinism() {
    cli::TempDir dir("la-accept-det");
    std::size_t checks = 0;
    std::size_t differ = 0;
    for (const char* family : {"path", "star", "caterpillar", "balanced_kary:3", "random_attachment"}) {
        const auto a = dir / "a.txt";
        const auto b = dir / "b.txt";
        const auto sa = dir / "a.bin";
        const auto sb = dir / "b.bin";
        const std::string gen = std::string("gen ") + family + " 4096 77 ";
        const bool ran = cli::run(gen + a.string()).status == 0 && cli::run(gen + b.string()).status == 0 &&
                         cli::run("build " + a.string() + " --out " + sa.string()).status == 0 &&
                         cli::run("build " + b.string() + " --out " + sb.string()).status == 0;
        checks += 2;
        if (!ran || cli::slurp(a) != cli::slurp(b) || cli::slurp(a).empty()) {
            ++differ;
        }
        if (!ran || cli::slurp(sa) != cli::slurp(sb) || cli::slurp(sa).empty()) {
            ++differ;
        }
    }
    return {differ == 0, std::to_string(checks) + " gen/build byte comparisons, " + std::to_string(differ) + " differ"};
}

} // namespace

int main() {
    ComparisonLog log;
    struct Row {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Row> rows{
        {"1 oracle equivalence (exhaustive)", [&] { return oracle_equivalence(log); }},
        {"2 depth arrays strictly increasing", [] { return monotonicity(); }},
        {"3 predecessor characterization", [&] { return predecessor_characterization(log); }},
        {"4 linear preprocessing", [] { return linear_preprocessing(); }},
        {"5 logarithmic query comparisons", [&] { return logarithmic_queries(log); }},
        {"6 differential CLI run", [] { return cli_differential(); }},
        {"7 determinism of gen and build", [] { return determinism(); }},
    };
    int failed = 0;
    for (const auto& row : rows) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = row.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", row.name, o.detail.c_str(), secs);
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(rows.size()) - failed, rows.size());
    return failed == 0 ? 0 : 1;
}
