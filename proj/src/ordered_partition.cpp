#include "treeshuffle/ordered_partition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace treeshuffle {

OrderedPartition::OrderedPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    for (auto& block : blocks_) std::sort(block.begin(), block.end());
}

namespace {

std::vector<int> ground_set(const OrderedPartition& x) {
    std::vector<int> all;
    for (const auto& block : x.blocks()) all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

OrderedPartition compose_ordered(const OrderedPartition& x, const OrderedPartition& y) {
    if (ground_set(x) != ground_set(y))
        throw InputError("compose_ordered: mismatched ground sets");

    std::vector<std::vector<int>> blocks;
    for (const auto& xi : x.blocks()) {
        for (const auto& yj : y.blocks()) {
            std::vector<int> cell;
            std::set_intersection(xi.begin(), xi.end(), yj.begin(), yj.end(),
                                  std::back_inserter(cell));
            if (!cell.empty()) blocks.push_back(std::move(cell));
        }
    }
    return OrderedPartition(std::move(blocks));
}

OrderedPartitionFamily compose(const OrderedPartitionFamily& beta,
                               const OrderedPartitionFamily& gamma) {
    if (beta.per_node().size() != gamma.per_node().size())
        throw InputError("compose: families belong to different trees");
    std::vector<OrderedPartition> per_node;
    per_node.reserve(beta.per_node().size());
    for (std::size_t r = 0; r < beta.per_node().size(); ++r)
        per_node.push_back(compose_ordered(beta.per_node()[r], gamma.per_node()[r]));
    return OrderedPartitionFamily(std::move(per_node));
}

OrderedPartitionFamily beta_from_subset(const PureTree& tree, const LeafSet& E) {
    auto related = tree.related_flags(E);
    std::vector<OrderedPartition> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes()) {
        std::vector<int> in, out;
        for (int c : tree.node(x).children)
            (related[static_cast<std::size_t>(c)] ? in : out).push_back(c);
        std::vector<std::vector<int>> blocks;
        if (!in.empty()) blocks.push_back(std::move(in));
        if (!out.empty()) blocks.push_back(std::move(out));
        per_node.push_back(OrderedPartition(std::move(blocks)));
    }
    return OrderedPartitionFamily(std::move(per_node));
}

OrderedPartitionFamily identity_family(const PureTree& tree) {
    return beta_from_subset(tree, LeafSet{});
}

PartitionFamily support(const OrderedPartitionFamily& beta) {
    std::vector<Partition> per_node;
    per_node.reserve(beta.per_node().size());
    for (const auto& op : beta.per_node()) per_node.push_back(Partition(op.blocks()));
    return PartitionFamily(std::move(per_node));
}

OrderedPartitionFamily embed(const PureTree& tree, const LocalOrdering& pi) {
    validate_ordering(tree, pi);
    std::vector<OrderedPartition> per_node;
    per_node.reserve(pi.per_node().size());
    for (const auto& order : pi.per_node()) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(order.size());
        for (int c : order) blocks.push_back({c});
        per_node.push_back(OrderedPartition(std::move(blocks)));
    }
    return OrderedPartitionFamily(std::move(per_node));
}

bool is_chamber(const OrderedPartitionFamily& beta) {
    for (const auto& op : beta.per_node())
        for (const auto& block : op.blocks())
            if (block.size() != 1) return false;
    return true;
}

LocalOrdering chamber_ordering(const OrderedPartitionFamily& beta) {
    if (!is_chamber(beta)) throw InputError("chamber_ordering: not a chamber");
    std::vector<std::vector<int>> per_node;
    per_node.reserve(beta.per_node().size());
    for (const auto& op : beta.per_node()) {
        std::vector<int> order;
        order.reserve(op.blocks().size());
        for (const auto& block : op.blocks()) order.push_back(block.front());
        per_node.push_back(std::move(order));
    }
    return LocalOrdering(std::move(per_node));
}

std::vector<OrderedPartition> enumerate_ordered_partitions(const std::vector<int>& ground) {
    std::vector<OrderedPartition> out;
    for (const auto& partition : enumerate_partitions(ground)) {
        std::vector<std::size_t> perm(partition.block_count());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
            std::vector<std::vector<int>> blocks;
            blocks.reserve(perm.size());
            for (std::size_t i : perm) blocks.push_back(partition.blocks()[i]);
            out.push_back(OrderedPartition(std::move(blocks)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

Integer ordered_family_count(const PureTree& tree) {
    Integer total = 1;
    for (int x : tree.inner_nodes()) total *= ordered_bell_number(tree.node(x).children.size());
    return total;
}

std::vector<OrderedPartitionFamily> enumerate_ordered_families(const PureTree& tree,
                                                               std::size_t cap) {
    Integer total = ordered_family_count(tree);
    if (total > static_cast<unsigned long>(cap))
        throw InputError("semigroup size " + format_integer(total) + " exceeds cap " +
                         std::to_string(cap));

    std::vector<std::vector<OrderedPartition>> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes())
        per_node.push_back(enumerate_ordered_partitions(tree.node(x).children));

    std::vector<OrderedPartitionFamily> out;
    out.reserve(static_cast<std::size_t>(total.get_ui()));
    std::vector<std::size_t> odo(per_node.size(), 0);
    while (true) {
        std::vector<OrderedPartition> pick;
        pick.reserve(per_node.size());
        for (std::size_t r = 0; r < per_node.size(); ++r) pick.push_back(per_node[r][odo[r]]);
        out.push_back(OrderedPartitionFamily(std::move(pick)));

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

ClosureReport closure_generates(const PureTree& tree,
                                std::span<const OrderedPartitionFamily> generators,
                                std::size_t cap) {
    ClosureReport report;

    std::set<OrderedPartitionFamily> closure(generators.begin(), generators.end());
    std::deque<OrderedPartitionFamily> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        OrderedPartitionFamily next = std::move(frontier.front());
        frontier.pop_front();
        // Compose with every known element on both sides.
        std::vector<OrderedPartitionFamily> fresh;
        for (const auto& known : closure) {
            for (const auto& candidate : {compose(next, known), compose(known, next)}) {
                if (!closure.contains(candidate)) fresh.push_back(candidate);
            }
        }
        for (auto& candidate : fresh) {
            if (closure.insert(candidate).second) {
                if (closure.size() > cap)
                    throw InputError("semigroup closure exceeds cap " + std::to_string(cap));
                frontier.push_back(std::move(candidate));
            }
        }
    }
    report.closure_size = closure.size();
    report.is_full_semigroup = (ordered_family_count(tree) == static_cast<unsigned long>(closure.size()));

    // Chamber reachability of the generator action from the default chamber.
    std::size_t n_chambers = checked_state_count(tree, cap);
    std::set<OrderedPartitionFamily> reached{embed(tree, default_ordering(tree))};
    std::deque<OrderedPartitionFamily> queue(reached.begin(), reached.end());
    while (!queue.empty()) {
        OrderedPartitionFamily chamber = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            OrderedPartitionFamily moved = compose(g, chamber);
            if (reached.insert(moved).second) queue.push_back(std::move(moved));
        }
    }
    report.chambers_reached = reached.size();
    report.chamber_coverage = (reached.size() == n_chambers);
    return report;
}

std::string ordered_family_to_string(const PureTree& tree, const OrderedPartitionFamily& beta) {
    if (tree.inner_nodes().empty()) return "()";
    std::string out;
    for (std::size_t r = 0; r < tree.inner_nodes().size(); ++r) {
        if (r) out += "; ";
        out += tree.node(tree.inner_nodes()[r]).id;
        out += ":(";
        const auto& blocks = beta.at(static_cast<int>(r)).blocks();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (b) out += ',';
            out += '{';
            for (std::size_t i = 0; i < blocks[b].size(); ++i) {
                if (i) out += ',';
                out += tree.node(blocks[b][i]).id;
            }
            out += '}';
        }
        out += ')';
    }
    return out;
}

} // namespace treeshuffle
