#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeshuffle/rational.hpp"

namespace treeshuffle {

struct TreeNode {
    std::string id;
    int parent = -1; // -1 for the root
    int depth = 0;
    std::vector<int> children; // node indices, in input order
};

/// A set of leaves, stored as sorted leaf ranks (positions in
/// PureTree::leaves()). Built through PureTree::leaf_set so that membership
/// in the leaf set of one specific tree is already validated.
class LeafSet {
public:
    LeafSet() = default;
    explicit LeafSet(std::vector<int> sorted_ranks) : ranks_(std::move(sorted_ranks)) {}

    bool contains(int leaf_rank) const;
    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }
    const std::vector<int>& ranks() const { return ranks_; }

    auto operator<=>(const LeafSet&) const = default;

private:
    std::vector<int> ranks_;
};

struct TreeStats {
    int depth = 0;
    std::size_t inner_count = 0;
    std::size_t leaf_count = 0;
    Integer state_count;  // prod |C_x|!
    Integer lattice_size; // prod Bell(|C_x|)
};

/// Rooted tree with every leaf at the same depth. Immutable after parsing;
/// all queries are const and safe for concurrent use.
class PureTree {
public:
    /// Parses the tree file format: a recursive object
    /// {"id": <string>, "children": [node, ...]}, where a node with absent
    /// or empty "children" is a leaf.
    static PureTree parse(std::string_view json_text);

    /// Canonical serialization; parse(serialize()) reproduces the node
    /// structure and child order exactly.
    std::string serialize() const;

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const TreeNode& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
    int root() const { return root_; }
    int depth() const { return depth_; }

    /// Inner nodes in breadth-first order (depth ascending, input order
    /// within a depth). This order is canonical wherever per-node data is
    /// indexed positionally.
    const std::vector<int>& inner_nodes() const { return inner_; }
    const std::vector<int>& leaves() const { return leaves_; }
    /// All nodes, breadth-first.
    const std::vector<int>& bfs_order() const { return bfs_; }

    bool is_leaf(int v) const { return node(v).children.empty(); }
    int inner_rank(int v) const { return inner_rank_[static_cast<std::size_t>(v)]; }
    int leaf_rank(int v) const { return leaf_rank_[static_cast<std::size_t>(v)]; }

    /// Node index for a label, or -1.
    int find(std::string_view id) const;
    /// Node index for a label; InputError if absent.
    int require(std::string_view id) const;

    LeafSet leaf_set(std::span<const std::string> labels) const;
    LeafSet full_leaf_set() const;
    std::vector<std::string> leaf_labels(const LeafSet& E) const;

    /// Per-node E-relatedness flags, indexed by node id. A node is
    /// E-related when its subtree contains a member of E (a leaf counts as
    /// its own descendant).
    std::vector<char> related_flags(const LeafSet& E) const;
    bool e_related(const LeafSet& E, int v) const;
    bool e_related(const LeafSet& E, std::string_view node_id) const;

    TreeStats stats() const;

private:
    std::vector<TreeNode> nodes_;
    int root_ = -1;
    int depth_ = 0;
    std::vector<int> inner_;
    std::vector<int> leaves_;
    std::vector<int> bfs_;
    std::vector<int> inner_rank_;
    std::vector<int> leaf_rank_;
    std::map<std::string, int, std::less<>> by_id_;

    void finalize();
};

/// All 2^|L| leaf subsets in canonical subset order: lexicographic on the
/// sorted rank sequences (the empty set first). Throws when 2^|L| > cap.
std::vector<LeafSet> all_leaf_subsets(const PureTree& tree, std::size_t cap);

} // namespace treeshuffle
