#pragma once

#include <compare>
#include <string>
#include <vector>

#include "treeshuffle/tree.hpp"

namespace treeshuffle {

/// One linear order of C_x per inner node: the state of the chain.
/// Entries are indexed by PureTree::inner_rank and hold child node indices.
/// Immutable value type; moves return fresh orderings.
class LocalOrdering {
public:
    LocalOrdering() = default;
    explicit LocalOrdering(std::vector<std::vector<int>> per_node)
        : per_node_(std::move(per_node)) {}

    const std::vector<std::vector<int>>& per_node() const { return per_node_; }
    const std::vector<int>& at(int inner_rank) const {
        return per_node_[static_cast<std::size_t>(inner_rank)];
    }

    auto operator<=>(const LocalOrdering&) const = default;

private:
    std::vector<std::vector<int>> per_node_;
};

/// The child order as read from the tree file.
LocalOrdering default_ordering(const PureTree& tree);

/// The move E(pi): at every inner node the E-related children come first,
/// both groups keeping their pi-induced order.
LocalOrdering apply_move(const PureTree& tree, const LocalOrdering& pi, const LeafSet& E);

/// Number of local orderings as a size_t; InputError when it exceeds cap.
std::size_t checked_state_count(const PureTree& tree, std::size_t cap);

/// All orderings in canonical index order (see ordering_index). Index 0 is
/// default_ordering.
std::vector<LocalOrdering> enumerate_orderings(const PureTree& tree, std::size_t cap);

/// Canonical state index: mixed-radix number over inner nodes in
/// breadth-first order (root most significant), each digit the lexicographic
/// rank of pi_x relative to the default child order.
Integer ordering_index(const PureTree& tree, const LocalOrdering& pi);
LocalOrdering index_ordering(const PureTree& tree, const Integer& index);

/// Validates that pi lists each inner node's children exactly once.
void validate_ordering(const PureTree& tree, const LocalOrdering& pi);

/// Serialization: a JSON object mapping inner-node id to the child-id list,
/// nodes in breadth-first order.
std::string ordering_to_json(const PureTree& tree, const LocalOrdering& pi);
LocalOrdering ordering_from_json(const PureTree& tree, const std::string& text);

/// Compact one-line form, e.g. "r:(u,v) u:(a,b) v:(c,d)"; "()" for the
/// depth-0 tree.
std::string ordering_to_string(const PureTree& tree, const LocalOrdering& pi);

} // namespace treeshuffle
