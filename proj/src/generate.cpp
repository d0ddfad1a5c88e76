#include "levelanc/generate.hpp"

#include <charconv>
#include <limits>

namespace levelanc {

TreeGenSpec parse_family(std::string_view name) {
    TreeGenSpec spec;
    if (name == "path") {
        spec.family = Family::Path;
    } else if (name == "star") {
        spec.family = Family::Star;
    } else if (name == "caterpillar") {
        spec.family = Family::Caterpillar;
    } else if (name == "random_attachment") {
        spec.family = Family::RandomAttachment;
    } else if (name.starts_with("balanced_kary")) {
        spec.family = Family::BalancedKary;
        auto rest = name.substr(std::string_view("balanced_kary").size());
        if (!rest.empty()) {
            if (rest.front() != ':') {
                throw Error(Errc::InvalidSpec, "unknown family '" + std::string(name) + "'");
            }
            rest.remove_prefix(1);
            unsigned k = 0;
            const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
            if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
                throw Error(Errc::InvalidSpec, "bad arity in '" + std::string(name) + "'");
            }
            spec.arity = k;
        }
    } else {
        throw Error(Errc::InvalidSpec, "unknown family '" + std::string(name) + "'");
    }
    return spec;
}

std::string family_name(const TreeGenSpec& spec) {
    switch (spec.family) {
        case Family::Path: return "path";
        case Family::Star: return "star";
        case Family::Caterpillar: return "caterpillar";
        case Family::BalancedKary: return "balanced_kary:" + std::to_string(spec.arity);
        case Family::RandomAttachment: return "random_attachment";
    }
    return "unknown";
}

void validate(const TreeGenSpec& spec) {
    if (spec.n < 1) {
        throw Error(Errc::InvalidSpec, "n must be at least 1");
    }
    if (spec.n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
        throw Error(Errc::InvalidSpec, "n too large");
    }
    if (spec.family == Family::BalancedKary && spec.arity < 2) {
        throw Error(Errc::InvalidSpec, "balanced_kary needs arity >= 2");
    }
}

std::vector<NodeId> generate_parents(const TreeGenSpec& spec) {
    validate(spec);
    const auto n = static_cast<NodeId>(spec.n);
    std::vector<NodeId> parents(spec.n, kNoParent);

    switch (spec.family) {
        case Family::Path:
            for (NodeId i = 1; i < n; ++i) {
                parents[i] = i - 1;
            }
            break;
        case Family::Star:
            for (NodeId i = 1; i < n; ++i) {
                parents[i] = 0;
            }
            break;
        case Family::Caterpillar: {
            const NodeId spine = (n + 1) / 2;
            for (NodeId i = 1; i < spine; ++i) {
                parents[i] = i - 1;
            }
            for (NodeId i = spine; i < n; ++i) {
                parents[i] = i - spine;
            }
            break;
        }
        case Family::BalancedKary: {
            const auto k = static_cast<NodeId>(spec.arity);
            for (NodeId i = 1; i < n; ++i) {
                parents[i] = (i - 1) / k;
            }
            break;
        }
        case Family::RandomAttachment: {
            Rng rng = make_rng(spec.seed);
            for (NodeId i = 1; i < n; ++i) {
                parents[i] = static_cast<NodeId>(uniform_below(rng, static_cast<std::uint64_t>(i)));
            }
            break;
        }
    }
    return parents;
}

Tree generate(const TreeGenSpec& spec) {
    return Tree::from_parent_array(generate_parents(spec));
}

} // namespace levelanc
