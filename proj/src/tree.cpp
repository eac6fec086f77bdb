#include "treeshuffle/tree.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

namespace treeshuffle {

using nlohmann::ordered_json;

bool LeafSet::contains(int leaf_rank) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), leaf_rank);
}

namespace {

int build_nodes(const ordered_json& j, int parent, int depth, std::vector<TreeNode>& nodes) {
    if (!j.is_object())
        throw InputError("tree file: node must be an object, got " + std::string(j.type_name()));
    if (!j.contains("id") || !j.at("id").is_string())
        throw InputError("tree file: node is missing a string \"id\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "id" && key != "children")
            throw InputError("tree file: unknown key \"" + key + "\"");
    }

    int index = static_cast<int>(nodes.size());
    nodes.push_back(TreeNode{j.at("id").get<std::string>(), parent, depth, {}});

    if (j.contains("children")) {
        const auto& kids = j.at("children");
        if (!kids.is_array())
            throw InputError("tree file: \"children\" must be an array");
        for (const auto& kid : kids) {
            int c = build_nodes(kid, index, depth + 1, nodes);
            nodes[static_cast<std::size_t>(index)].children.push_back(c);
        }
    }
    return index;
}

ordered_json node_to_json(const PureTree& tree, int v) {
    ordered_json j;
    j["id"] = tree.node(v).id;
    if (!tree.node(v).children.empty()) {
        ordered_json kids = ordered_json::array();
        for (int c : tree.node(v).children) kids.push_back(node_to_json(tree, c));
        j["children"] = std::move(kids);
    }
    return j;
}

} // namespace

PureTree PureTree::parse(std::string_view json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("tree file: malformed JSON: ") + e.what());
    }

    PureTree tree;
    tree.root_ = build_nodes(j, -1, 0, tree.nodes_);
    if (tree.nodes_.empty()) throw InputError("tree file: empty tree");
    tree.finalize();
    return tree;
}

void PureTree::finalize() {
    // Unique labels.
    for (int v = 0; v < node_count(); ++v) {
        auto [it, fresh] = by_id_.emplace(nodes_[static_cast<std::size_t>(v)].id, v);
        (void)it;
        if (!fresh)
            throw InputError("tree file: duplicate node label \"" +
                             nodes_[static_cast<std::size_t>(v)].id + "\"");
    }

    // Breadth-first order, following child lists left to right.
    std::deque<int> queue{root_};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        bfs_.push_back(v);
        for (int c : node(v).children) queue.push_back(c);
    }

    // Purity: all leaves at one common depth.
    depth_ = -1;
    for (int v : bfs_) {
        if (!is_leaf(v)) continue;
        if (depth_ == -1) depth_ = node(v).depth;
        if (node(v).depth != depth_)
            throw InputError("tree file: not pure: leaf \"" + node(v).id + "\" at depth " +
                             std::to_string(node(v).depth) + ", expected " +
                             std::to_string(depth_));
    }

    inner_rank_.assign(nodes_.size(), -1);
    leaf_rank_.assign(nodes_.size(), -1);
    for (int v : bfs_) {
        if (is_leaf(v)) {
            leaf_rank_[static_cast<std::size_t>(v)] = static_cast<int>(leaves_.size());
            leaves_.push_back(v);
        } else {
            inner_rank_[static_cast<std::size_t>(v)] = static_cast<int>(inner_.size());
            inner_.push_back(v);
        }
    }
}

std::string PureTree::serialize() const {
    return node_to_json(*this, root_).dump();
}

int PureTree::find(std::string_view id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? -1 : it->second;
}

int PureTree::require(std::string_view id) const {
    int v = find(id);
    if (v < 0) throw InputError("unknown node label \"" + std::string(id) + "\"");
    return v;
}

LeafSet PureTree::leaf_set(std::span<const std::string> labels) const {
    std::vector<int> ranks;
    ranks.reserve(labels.size());
    for (const auto& label : labels) {
        int v = require(label);
        if (!is_leaf(v))
            throw InputError("label \"" + label + "\" is not a leaf");
        ranks.push_back(leaf_rank(v));
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return LeafSet(std::move(ranks));
}

LeafSet PureTree::full_leaf_set() const {
    std::vector<int> ranks(leaves_.size());
    for (std::size_t i = 0; i < leaves_.size(); ++i) ranks[i] = static_cast<int>(i);
    return LeafSet(std::move(ranks));
}

std::vector<std::string> PureTree::leaf_labels(const LeafSet& E) const {
    std::vector<std::string> labels;
    labels.reserve(E.size());
    for (int r : E.ranks()) labels.push_back(node(leaves_[static_cast<std::size_t>(r)]).id);
    return labels;
}

std::vector<char> PureTree::related_flags(const LeafSet& E) const {
    std::vector<char> related(nodes_.size(), 0);
    // Deepest nodes first, so children are settled before their parent.
    for (auto it = bfs_.rbegin(); it != bfs_.rend(); ++it) {
        int v = *it;
        if (is_leaf(v)) {
            related[static_cast<std::size_t>(v)] = E.contains(leaf_rank(v)) ? 1 : 0;
        } else {
            for (int c : node(v).children) {
                if (related[static_cast<std::size_t>(c)]) {
                    related[static_cast<std::size_t>(v)] = 1;
                    break;
                }
            }
        }
    }
    return related;
}

bool PureTree::e_related(const LeafSet& E, int v) const {
    if (is_leaf(v)) return E.contains(leaf_rank(v));
    return related_flags(E)[static_cast<std::size_t>(v)];
}

bool PureTree::e_related(const LeafSet& E, std::string_view node_id) const {
    return e_related(E, require(node_id));
}

TreeStats PureTree::stats() const {
    TreeStats s;
    s.depth = depth_;
    s.inner_count = inner_.size();
    s.leaf_count = leaves_.size();
    s.state_count = 1;
    s.lattice_size = 1;
    for (int x : inner_) {
        s.state_count *= factorial(node(x).children.size());
        s.lattice_size *= bell_number(node(x).children.size());
    }
    return s;
}

std::vector<LeafSet> all_leaf_subsets(const PureTree& tree, std::size_t cap) {
    std::size_t n = tree.leaves().size();
    if (n >= 63 || (std::size_t{1} << n) > cap)
        throw InputError("subset enumeration: 2^" + std::to_string(n) + " leaf subsets exceed cap " +
                         std::to_string(cap));
    std::vector<LeafSet> subsets;
    subsets.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> ranks;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) ranks.push_back(static_cast<int>(i));
        subsets.emplace_back(std::move(ranks));
    }
    std::sort(subsets.begin(), subsets.end());
    return subsets;
}

} // namespace treeshuffle
