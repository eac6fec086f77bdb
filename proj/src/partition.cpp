#include "treeshuffle/partition.hpp"

#include <algorithm>
#include <map>

#include "treeshuffle/ordered_partition.hpp"
#include "treeshuffle/ordering.hpp"

namespace treeshuffle {

Partition::Partition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    for (auto& block : blocks_) std::sort(block.begin(), block.end());
    std::sort(blocks_.begin(), blocks_.end());
}

bool partition_leq(const Partition& alpha, const Partition& beta) {
    // Every block of beta must lie inside one block of alpha.
    std::map<int, int> block_of;
    for (std::size_t i = 0; i < alpha.blocks().size(); ++i)
        for (int e : alpha.blocks()[i]) block_of[e] = static_cast<int>(i);
    for (const auto& block : beta.blocks()) {
        auto it = block_of.find(block.front());
        if (it == block_of.end()) return false;
        for (int e : block) {
            auto jt = block_of.find(e);
            if (jt == block_of.end() || jt->second != it->second) return false;
        }
    }
    return true;
}

bool refines(const PartitionFamily& alpha, const PartitionFamily& beta) {
    if (alpha.per_node().size() != beta.per_node().size())
        throw InputError("partition families belong to different trees");
    for (std::size_t r = 0; r < alpha.per_node().size(); ++r)
        if (!partition_leq(alpha.per_node()[r], beta.per_node()[r])) return false;
    return true;
}

Partition common_refinement(const Partition& a, const Partition& b) {
    std::vector<std::vector<int>> blocks;
    for (const auto& x : a.blocks()) {
        for (const auto& y : b.blocks()) {
            std::vector<int> cell;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                  std::back_inserter(cell));
            if (!cell.empty()) blocks.push_back(std::move(cell));
        }
    }
    return Partition(std::move(blocks));
}

PartitionFamily bottom_family(const PureTree& tree) {
    std::vector<Partition> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes())
        per_node.push_back(Partition({tree.node(x).children}));
    return PartitionFamily(std::move(per_node));
}

PartitionFamily top_family(const PureTree& tree) {
    std::vector<Partition> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes()) {
        std::vector<std::vector<int>> blocks;
        for (int c : tree.node(x).children) blocks.push_back({c});
        per_node.push_back(Partition(std::move(blocks)));
    }
    return PartitionFamily(std::move(per_node));
}

PartitionFamily induced_partition(const PureTree& tree, const LeafSet& E) {
    auto related = tree.related_flags(E);
    std::vector<Partition> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes()) {
        std::vector<int> in, out;
        for (int c : tree.node(x).children)
            (related[static_cast<std::size_t>(c)] ? in : out).push_back(c);
        std::vector<std::vector<int>> blocks;
        if (!in.empty()) blocks.push_back(std::move(in));
        if (!out.empty()) blocks.push_back(std::move(out));
        per_node.push_back(Partition(std::move(blocks)));
    }
    return PartitionFamily(std::move(per_node));
}

bool alpha_compatible(const PureTree& tree, const PartitionFamily& alpha, const LeafSet& E) {
    return refines(induced_partition(tree, E), alpha);
}

namespace {

// Restricted growth strings in lexicographic order.
void rgs_recurse(std::size_t i, int max_used, std::vector<int>& rgs,
                 const std::vector<int>& ground, std::vector<Partition>& out) {
    if (i == ground.size()) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_used) + 1);
        for (std::size_t j = 0; j < ground.size(); ++j)
            blocks[static_cast<std::size_t>(rgs[j])].push_back(ground[j]);
        out.push_back(Partition(std::move(blocks)));
        return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
        rgs[i] = b;
        rgs_recurse(i + 1, std::max(max_used, b), rgs, ground, out);
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(const std::vector<int>& ground) {
    if (ground.empty()) return {Partition({})};
    std::vector<Partition> out;
    std::vector<int> rgs(ground.size(), 0);
    rgs_recurse(1, 0, rgs, ground, out);
    return out;
}

std::vector<PartitionFamily> enumerate_partition_families(const PureTree& tree, std::size_t cap) {
    Integer total = tree.stats().lattice_size;
    if (total > static_cast<unsigned long>(cap))
        throw InputError("lattice size " + format_integer(total) + " exceeds cap " +
                         std::to_string(cap));

    std::vector<std::vector<Partition>> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes()) per_node.push_back(enumerate_partitions(tree.node(x).children));

    std::vector<PartitionFamily> out;
    out.reserve(static_cast<std::size_t>(total.get_ui()));
    std::vector<std::size_t> odo(per_node.size(), 0);
    while (true) {
        std::vector<Partition> pick;
        pick.reserve(per_node.size());
        for (std::size_t r = 0; r < per_node.size(); ++r) pick.push_back(per_node[r][odo[r]]);
        out.push_back(PartitionFamily(std::move(pick)));

        // Advance the least significant digit (last inner node) first.
        std::size_t r = per_node.size();
        while (r > 0) {
            --r;
            if (++odo[r] < per_node[r].size()) break;
            odo[r] = 0;
            if (r == 0) return out;
        }
        if (per_node.empty()) return out;
    }
}

Integer mobius_abs_product(const PartitionFamily& alpha) {
    Integer prod = 1;
    for (const auto& partition : alpha.per_node())
        for (const auto& block : partition.blocks()) prod *= factorial(block.size() - 1);
    return prod;
}

MobiusOracle::MobiusOracle(const PureTree& tree, std::size_t interval_cap)
    : tree_(&tree), interval_cap_(interval_cap), top_(top_family(tree)) {}

std::vector<PartitionFamily> MobiusOracle::interval_above(const PartitionFamily& alpha) const {
    // [alpha, top] is the product, over nodes and over blocks of alpha_x,
    // of the partition lattices of the individual blocks.
    Integer size = 1;
    for (const auto& partition : alpha.per_node())
        for (const auto& block : partition.blocks()) size *= bell_number(block.size());
    if (size > static_cast<unsigned long>(interval_cap_))
        throw InputError("Möbius interval size " + format_integer(size) + " exceeds cap " +
                         std::to_string(interval_cap_));

    // Per node: all partitions refining alpha_x, as products over its blocks.
    std::vector<std::vector<Partition>> per_node;
    for (const auto& partition : alpha.per_node()) {
        std::vector<std::vector<Partition>> per_block;
        for (const auto& block : partition.blocks()) per_block.push_back(enumerate_partitions(block));

        std::vector<std::vector<std::vector<int>>> acc{{}}; // block lists
        for (const auto& choices : per_block) {
            std::vector<std::vector<std::vector<int>>> next;
            for (const auto& prefix : acc) {
                for (const auto& choice : choices) {
                    auto combined = prefix;
                    for (const auto& b : choice.blocks()) combined.push_back(b);
                    next.push_back(std::move(combined));
                }
            }
            acc = std::move(next);
        }
        std::vector<Partition> refinements;
        refinements.reserve(acc.size());
        for (auto& blocks : acc) refinements.push_back(Partition(std::move(blocks)));
        per_node.push_back(std::move(refinements));
    }

    std::vector<PartitionFamily> out;
    std::vector<std::size_t> odo(per_node.size(), 0);
    while (true) {
        std::vector<Partition> pick;
        pick.reserve(per_node.size());
        for (std::size_t r = 0; r < per_node.size(); ++r) pick.push_back(per_node[r][odo[r]]);
        out.push_back(PartitionFamily(std::move(pick)));

        std::size_t r = per_node.size();
        while (r > 0) {
            --r;
            if (++odo[r] < per_node[r].size()) break;
            odo[r] = 0;
            if (r == 0) return out;
        }
        if (per_node.empty()) return out;
    }
}

Integer MobiusOracle::mu_to_top(const PartitionFamily& alpha) {
    if (alpha == top_) return 1;
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;

    // mu(alpha, top) = -sum_{alpha < gamma <= top} mu(gamma, top).
    Integer sum = 0;
    for (const auto& gamma : interval_above(alpha)) {
        if (gamma == alpha) continue;
        sum += mu_to_top(gamma);
    }
    Integer value = -sum;
    memo_.emplace(alpha, value);
    return value;
}

Integer mobius_recursive(const PureTree& tree, const PartitionFamily& alpha) {
    MobiusOracle oracle(tree);
    return oracle.mu_to_top(alpha);
}

Integer count_chambers_above(const PureTree& tree, const OrderedPartitionFamily& beta,
                             std::size_t cap) {
    // (a) direct count over the chambers.
    Integer direct = 0;
    for (const auto& pi : enumerate_orderings(tree, cap)) {
        OrderedPartitionFamily chamber = embed(tree, pi);
        if (compose(beta, chamber) == chamber) direct += 1;
    }

    // (b) Zaslavsky-style Möbius sum over the support lattice.
    PartitionFamily base = support(beta);
    Integer mobius_sum = 0;
    for (const auto& alpha : enumerate_partition_families(tree, cap))
        if (refines(base, alpha)) mobius_sum += mobius_abs_product(alpha);

    if (direct != mobius_sum)
        throw VerificationError("chamber count mismatch above " +
                                ordered_family_to_string(tree, beta) + ": direct " +
                                format_integer(direct) + " vs Möbius sum " +
                                format_integer(mobius_sum));
    return direct;
}

std::string partition_family_to_string(const PureTree& tree, const PartitionFamily& alpha) {
    if (tree.inner_nodes().empty()) return "{}";
    std::string out;
    for (std::size_t r = 0; r < tree.inner_nodes().size(); ++r) {
        if (r) out += "; ";
        out += tree.node(tree.inner_nodes()[r]).id;
        out += ':';
        for (const auto& block : alpha.at(static_cast<int>(r)).blocks()) {
            out += '{';
            for (std::size_t i = 0; i < block.size(); ++i) {
                if (i) out += ',';
                out += tree.node(block[i]).id;
            }
            out += '}';
        }
    }
    return out;
}

} // namespace treeshuffle
