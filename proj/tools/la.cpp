// la: command-line front end for the level ancestor library.
//
//   la build <tree> [--out snapshot] [--layout sorted|eytzinger]
//   la query <tree> <queries> [--method paper_index|jump_pointer|naive]
//   la gen <family> <n> <seed> <out>
//   la bench --families a,b --sizes n1,n2 --queries Q --seed S --out f.csv

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levelanc/bench.hpp"
#include "levelanc/generate.hpp"
#include "levelanc/index.hpp"
#include "levelanc/methods.hpp"
#include "levelanc/tree.hpp"

using namespace levelanc;

namespace {

// "4096" or "2^12"
std::size_t parse_size(const std::string& text) {
    std::uint64_t base = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, base);
    if (ec == std::errc{} && ptr != last && *ptr == '^') {
        unsigned exponent = 0;
        auto [p2, ec2] = std::from_chars(ptr + 1, last, exponent);
        if (ec2 != std::errc{} || p2 != last || exponent > 40) {
            throw Error(Errc::InvalidSpec, "bad size '" + text + "'");
        }
        std::uint64_t value = 1;
        for (unsigned i = 0; i < exponent; ++i) {
            value *= base;
        }
        return value;
    }
    if (ec != std::errc{} || ptr != last) {
        throw Error(Errc::InvalidSpec, "bad size '" + text + "'");
    }
    return base;
}

int cmd_build(const std::string& tree_path, const std::string& out_path, const std::string& layout) {
    const Tree tree = read_tree_file(tree_path);
    const auto start = std::chrono::steady_clock::now();
    const auto idx = LevelAncestorIndex::build(tree, parse_layout(layout));
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    std::cout << "n=" << idx.size() << '\n'
              << "max_depth=" << idx.max_depth() << '\n'
              << "build_ns=" << ns.count() << '\n';
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(Errc::IoError, "cannot open " + out_path);
        }
        idx.write_snapshot(out);
    }
    return 0;
}

int cmd_query(const std::string& tree_path, const std::string& queries_path, const std::string& method,
              const std::string& layout) {
    const Tree tree = read_tree_file(tree_path);
    const Solver solver(tree, parse_method(method), parse_layout(layout));
    std::ifstream in(queries_path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open " + queries_path);
    }
    std::ostringstream out;
    answer_query_stream(solver, in, out);
    std::cout << out.str();
    return 0;
}

int cmd_gen(const std::string& family, const std::string& n, std::uint64_t seed, const std::string& out_path) {
    TreeGenSpec spec = parse_family(family);
    spec.n = parse_size(n);
    spec.seed = seed;
    const auto parents = generate_parents(spec);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(Errc::IoError, "cannot open " + out_path);
    }
    write_parent_array(out, parents);
    if (!out) {
        throw Error(Errc::IoError, "write failed: " + out_path);
    }
    return 0;
}

int cmd_bench(const std::vector<std::string>& families, const std::vector<std::string>& sizes,
              const std::vector<std::string>& methods, std::size_t queries, std::uint64_t seed,
              std::size_t repeats, const std::string& layout, const std::string& out_path) {
    BenchConfig config;
    for (const auto& f : families) {
        config.families.push_back(parse_family(f));
    }
    for (const auto& s : sizes) {
        config.sizes.push_back(parse_size(s));
    }
    if (!methods.empty()) {
        config.methods.clear();
        for (const auto& m : methods) {
            config.methods.push_back(parse_method(m));
        }
    }
    if (queries < 1) {
        throw Error(Errc::InvalidSpec, "--queries must be at least 1");
    }
    config.queries = queries;
    config.seed = seed;
    config.build_repeats = repeats;
    config.layout = parse_layout(layout);

    const auto rows = run_bench(config);
    if (out_path.empty() || out_path == "-") {
        write_bench_csv(std::cout, rows);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(Errc::IoError, "cannot open " + out_path);
    }
    write_bench_csv(out, rows);
    if (!out) {
        throw Error(Errc::IoError, "write failed: " + out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level ancestor queries over rooted trees"};
    app.require_subcommand(1);

    std::string tree_path;
    std::string out_path;
    std::string layout = "sorted";
    auto* build = app.add_subcommand("build", "Build an index and report its shape");
    build->add_option("tree", tree_path, "Tree in parent-array format")->required();
    build->add_option("--out", out_path, "Write a binary index snapshot");
    build->add_option("--layout", layout, "Search layout: sorted or eytzinger");

    std::string queries_path;
    std::string method = "paper_index";
    auto* query = app.add_subcommand("query", "Answer 'v d' query lines");
    query->add_option("tree", tree_path, "Tree in parent-array format")->required();
    query->add_option("queries", queries_path, "One 'v d' query per line")->required();
    query->add_option("--method", method, "paper_index, jump_pointer or naive");
    query->add_option("--layout", layout, "Search layout for paper_index");

    std::string family;
    std::string gen_n;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate a tree in parent-array format");
    gen->add_option("family", family, "path, star, caterpillar, balanced_kary[:K], random_attachment")->required();
    gen->add_option("n", gen_n, "Node count")->required();
    gen->add_option("seed", seed, "64-bit seed")->required();
    gen->add_option("out", out_path, "Output file")->required();

    std::vector<std::string> families;
    std::vector<std::string> sizes;
    std::vector<std::string> methods;
    std::size_t query_count = 1000;
    std::size_t repeats = 5;
    auto* bench = app.add_subcommand("bench", "Time all methods and write CSV");
    bench->add_option("--families", families, "Comma-separated families")->delimiter(',')->required();
    bench->add_option("--sizes", sizes, "Comma-separated node counts (2^k allowed)")->delimiter(',')->required();
    bench->add_option("--methods", methods, "Subset of methods")->delimiter(',');
    bench->add_option("--queries", query_count, "Queries per tree");
    bench->add_option("--seed", seed, "64-bit seed");
    bench->add_option("--repeats", repeats, "Builds timed per row (median reported)");
    bench->add_option("--layout", layout, "Search layout for paper_index");
    bench->add_option("--out", out_path, "CSV output path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            return cmd_build(tree_path, out_path, layout);
        }
        if (*query) {
            return cmd_query(tree_path, queries_path, method, layout);
        }
        if (*gen) {
            return cmd_gen(family, gen_n, seed, out_path);
        }
        if (*bench) {
            return cmd_bench(families, sizes, methods, query_count, seed, repeats, layout, out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
