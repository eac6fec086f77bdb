#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "treeshuffle/ordering.hpp"
#include "treeshuffle/partition.hpp"
#include "treeshuffle/tree.hpp"

namespace treeshuffle {

/// Ordered set partition of one inner node's children: block order is
/// significant, elements within a block are kept sorted so equality is
/// structural.
class OrderedPartition {
public:
    OrderedPartition() = default;
    explicit OrderedPartition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    auto operator<=>(const OrderedPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
};

/// One ordered partition of C_x per inner node: an element of the
/// idempotent semigroup the chain walks on.
class OrderedPartitionFamily {
public:
    OrderedPartitionFamily() = default;
    explicit OrderedPartitionFamily(std::vector<OrderedPartition> per_node)
        : per_node_(std::move(per_node)) {}

    const std::vector<OrderedPartition>& per_node() const { return per_node_; }
    const OrderedPartition& at(int inner_rank) const {
        return per_node_[static_cast<std::size_t>(inner_rank)];
    }

    auto operator<=>(const OrderedPartitionFamily&) const = default;

private:
    std::vector<OrderedPartition> per_node_;
};

/// X O Y: the nonempty intersections X_i ∩ Y_j ordered lexicographically by
/// (i, j). Both arguments must partition the same ground set.
OrderedPartition compose_ordered(const OrderedPartition& x, const OrderedPartition& y);

/// Component-wise composition at every inner node.
OrderedPartitionFamily compose(const OrderedPartitionFamily& beta,
                               const OrderedPartitionFamily& gamma);

/// beta^E: at each node the two-block ordered partition with the E-related
/// children first; an empty block is dropped.
OrderedPartitionFamily beta_from_subset(const PureTree& tree, const LeafSet& E);

/// The identity element: the one-block partition at every node.
OrderedPartitionFamily identity_family(const PureTree& tree);

/// Forgets block order, landing in the support lattice.
PartitionFamily support(const OrderedPartitionFamily& beta);

/// Chambers are the maximal elements: all blocks singletons. They are in
/// bijection with the local orderings.
OrderedPartitionFamily embed(const PureTree& tree, const LocalOrdering& pi);
bool is_chamber(const OrderedPartitionFamily& beta);
LocalOrdering chamber_ordering(const OrderedPartitionFamily& beta);

/// All ordered partitions of `ground`: unordered partitions in enumeration
/// order, each expanded over the permutations of its blocks in
/// lexicographic order.
std::vector<OrderedPartition> enumerate_ordered_partitions(const std::vector<int>& ground);

/// The whole semigroup, as the product of per-node enumerations. Size is
/// prod_x orderedBell(|C_x|); InputError above cap.
std::vector<OrderedPartitionFamily> enumerate_ordered_families(const PureTree& tree,
                                                               std::size_t cap);

Integer ordered_family_count(const PureTree& tree);

struct ClosureReport {
    std::size_t closure_size = 0;
    bool is_full_semigroup = false;
    /// Whether the given generators, acting by left composition on the
    /// default chamber, reach every chamber.
    bool chamber_coverage = false;
    std::size_t chambers_reached = 0;
};

/// Closure of `generators` under composition, plus the chamber reachability
/// check described above. Caps bound both the closure and the chamber walk.
ClosureReport closure_generates(const PureTree& tree,
                                std::span<const OrderedPartitionFamily> generators,
                                std::size_t cap);

std::string ordered_family_to_string(const PureTree& tree, const OrderedPartitionFamily& beta);

} // namespace treeshuffle
