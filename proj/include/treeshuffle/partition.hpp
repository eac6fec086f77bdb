#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "treeshuffle/tree.hpp"

namespace treeshuffle {

class OrderedPartitionFamily;

/// Unordered set partition of one inner node's children. Canonical form:
/// each block sorted by node index, blocks sorted by their first element.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
};

/// One partition of C_x per inner node, indexed by PureTree::inner_rank.
/// Element of the support lattice.
class PartitionFamily {
public:
    PartitionFamily() = default;
    explicit PartitionFamily(std::vector<Partition> per_node) : per_node_(std::move(per_node)) {}

    const std::vector<Partition>& per_node() const { return per_node_; }
    const Partition& at(int inner_rank) const {
        return per_node_[static_cast<std::size_t>(inner_rank)];
    }

    auto operator<=>(const PartitionFamily&) const = default;

private:
    std::vector<Partition> per_node_;
};

/// Refinement order: alpha <= beta iff every block of alpha is a union of
/// blocks of beta (beta is the finer family). The top element is the
/// all-singletons family, the bottom the one-block family.
bool refines(const PartitionFamily& alpha, const PartitionFamily& beta);
bool partition_leq(const Partition& alpha, const Partition& beta);

/// Blockwise intersections of two partitions of the same ground set: the
/// coarsest partition finer than both (their join, with the top = finest
/// orientation above).
Partition common_refinement(const Partition& a, const Partition& b);

PartitionFamily bottom_family(const PureTree& tree); // one block per node
PartitionFamily top_family(const PureTree& tree);    // all singletons

/// alpha^E: at each inner node the two-block partition into E-related
/// children and the rest, with an empty block dropped.
PartitionFamily induced_partition(const PureTree& tree, const LeafSet& E);

/// E is alpha-compatible iff alpha^E <= alpha at every node.
bool alpha_compatible(const PureTree& tree, const PartitionFamily& alpha, const LeafSet& E);

/// All partitions of `ground` in restricted-growth-string lexicographic
/// order: the one-block partition first, all singletons last.
std::vector<Partition> enumerate_partitions(const std::vector<int>& ground);

/// All of Part(T) as the mixed-radix product of per-node enumerations,
/// inner nodes in breadth-first order (root most significant).
std::vector<PartitionFamily> enumerate_partition_families(const PureTree& tree, std::size_t cap);

/// prod_x prod_{B in alpha_x} (|B|-1)!, the closed form for |mu(alpha, top)|.
Integer mobius_abs_product(const PartitionFamily& alpha);

/// Independent Möbius oracle: mu(alpha, top) by the standard recursion over
/// the enumerated interval [alpha, top]. Makes no use of the product
/// formula. Values are memoized across calls.
class MobiusOracle {
public:
    explicit MobiusOracle(const PureTree& tree, std::size_t interval_cap = 100000);

    Integer mu_to_top(const PartitionFamily& alpha);

private:
    const PureTree* tree_;
    std::size_t interval_cap_;
    PartitionFamily top_;
    std::map<PartitionFamily, Integer> memo_;

    std::vector<PartitionFamily> interval_above(const PartitionFamily& alpha) const;
};

Integer mobius_recursive(const PureTree& tree, const PartitionFamily& alpha);

/// Chambers c with beta <= c in the face order (beta O c = c), counted two
/// ways: directly over the enumerated chambers and as the Möbius sum
/// sum_{alpha >= supp(beta)} |mu(alpha, top)|. VerificationError when the
/// two counts disagree.
Integer count_chambers_above(const PureTree& tree, const OrderedPartitionFamily& beta,
                             std::size_t cap);

std::string partition_family_to_string(const PureTree& tree, const PartitionFamily& alpha);

} // namespace treeshuffle
