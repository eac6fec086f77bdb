#include "treeshuffle/ordering.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace treeshuffle {

using nlohmann::ordered_json;

LocalOrdering default_ordering(const PureTree& tree) {
    std::vector<std::vector<int>> per_node;
    per_node.reserve(tree.inner_nodes().size());
    for (int x : tree.inner_nodes()) per_node.push_back(tree.node(x).children);
    return LocalOrdering(std::move(per_node));
}

LocalOrdering apply_move(const PureTree& tree, const LocalOrdering& pi, const LeafSet& E) {
    auto related = tree.related_flags(E);
    std::vector<std::vector<int>> per_node = pi.per_node();
    for (auto& order : per_node)
        std::stable_partition(order.begin(), order.end(),
                              [&](int c) { return related[static_cast<std::size_t>(c)] != 0; });
    return LocalOrdering(std::move(per_node));
}

std::size_t checked_state_count(const PureTree& tree, std::size_t cap) {
    Integer n = tree.stats().state_count;
    if (n > static_cast<unsigned long>(cap))
        throw InputError("state count " + format_integer(n) + " exceeds cap " +
                         std::to_string(cap));
    return static_cast<std::size_t>(n.get_ui());
}

namespace {

// Lexicographic rank of `order` among permutations of `reference`.
Integer permutation_rank(const std::vector<int>& reference, const std::vector<int>& order) {
    std::size_t m = reference.size();
    std::vector<int> pos(m);
    std::map<int, int> index_of;
    for (std::size_t i = 0; i < m; ++i) index_of[reference[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < m; ++i) pos[i] = index_of.at(order[i]);

    Integer rank = 0;
    for (std::size_t i = 0; i < m; ++i) {
        int smaller = 0;
        for (std::size_t j = i + 1; j < m; ++j)
            if (pos[j] < pos[i]) ++smaller;
        rank += Integer(smaller) * factorial(m - 1 - i);
    }
    return rank;
}

std::vector<int> permutation_unrank(const std::vector<int>& reference, Integer rank) {
    std::vector<int> pool = reference;
    std::vector<int> order;
    order.reserve(pool.size());
    for (std::size_t m = pool.size(); m > 0; --m) {
        Integer f = factorial(m - 1);
        Integer digit = rank / f;
        rank %= f;
        auto it = pool.begin() + static_cast<std::ptrdiff_t>(digit.get_ui());
        order.push_back(*it);
        pool.erase(it);
    }
    return order;
}

} // namespace

std::vector<LocalOrdering> enumerate_orderings(const PureTree& tree, std::size_t cap) {
    std::size_t n = checked_state_count(tree, cap);
    std::vector<LocalOrdering> states;
    states.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        states.push_back(index_ordering(tree, Integer(static_cast<unsigned long>(k))));
    return states;
}

Integer ordering_index(const PureTree& tree, const LocalOrdering& pi) {
    validate_ordering(tree, pi);
    Integer index = 0;
    for (std::size_t r = 0; r < tree.inner_nodes().size(); ++r) {
        int x = tree.inner_nodes()[r];
        const auto& reference = tree.node(x).children;
        index *= factorial(reference.size());
        index += permutation_rank(reference, pi.at(static_cast<int>(r)));
    }
    return index;
}

LocalOrdering index_ordering(const PureTree& tree, const Integer& index) {
    Integer total = tree.stats().state_count;
    if (index < 0 || index >= total)
        throw InputError("state index " + format_integer(index) + " out of range [0, " +
                         format_integer(total) + ")");

    const auto& inner = tree.inner_nodes();
    std::vector<Integer> digits(inner.size());
    Integer k = index;
    for (std::size_t r = inner.size(); r-- > 0;) {
        Integer radix = factorial(tree.node(inner[r]).children.size());
        digits[r] = k % radix;
        k /= radix;
    }

    std::vector<std::vector<int>> per_node;
    per_node.reserve(inner.size());
    for (std::size_t r = 0; r < inner.size(); ++r)
        per_node.push_back(permutation_unrank(tree.node(inner[r]).children, digits[r]));
    return LocalOrdering(std::move(per_node));
}

void validate_ordering(const PureTree& tree, const LocalOrdering& pi) {
    const auto& inner = tree.inner_nodes();
    if (pi.per_node().size() != inner.size())
        throw InputError("ordering has " + std::to_string(pi.per_node().size()) +
                         " node entries, tree has " + std::to_string(inner.size()) +
                         " inner nodes");
    for (std::size_t r = 0; r < inner.size(); ++r) {
        std::vector<int> expect = tree.node(inner[r]).children;
        std::vector<int> got = pi.at(static_cast<int>(r));
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got)
            throw InputError("ordering at node \"" + tree.node(inner[r]).id +
                             "\" is not a permutation of its children");
    }
}

std::string ordering_to_json(const PureTree& tree, const LocalOrdering& pi) {
    ordered_json j = ordered_json::object();
    for (std::size_t r = 0; r < tree.inner_nodes().size(); ++r) {
        ordered_json ids = ordered_json::array();
        for (int c : pi.at(static_cast<int>(r))) ids.push_back(tree.node(c).id);
        j[tree.node(tree.inner_nodes()[r]).id] = std::move(ids);
    }
    return j.dump();
}

LocalOrdering ordering_from_json(const PureTree& tree, const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("ordering: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("ordering: expected an object");

    std::vector<std::vector<int>> per_node(tree.inner_nodes().size());
    std::vector<char> seen(tree.inner_nodes().size(), 0);
    for (const auto& [key, value] : j.items()) {
        int x = tree.require(key);
        int r = tree.inner_rank(x);
        if (r < 0) throw InputError("ordering: node \"" + key + "\" is not an inner node");
        if (!value.is_array()) throw InputError("ordering: value for \"" + key + "\" must be an array");
        for (const auto& id : value) {
            if (!id.is_string()) throw InputError("ordering: child labels must be strings");
            per_node[static_cast<std::size_t>(r)].push_back(tree.require(id.get<std::string>()));
        }
        seen[static_cast<std::size_t>(r)] = 1;
    }
    for (std::size_t r = 0; r < seen.size(); ++r)
        if (!seen[r])
            throw InputError("ordering: missing entry for inner node \"" +
                             tree.node(tree.inner_nodes()[r]).id + "\"");

    LocalOrdering pi(std::move(per_node));
    validate_ordering(tree, pi);
    return pi;
}

std::string ordering_to_string(const PureTree& tree, const LocalOrdering& pi) {
    if (tree.inner_nodes().empty()) return "()";
    std::string out;
    for (std::size_t r = 0; r < tree.inner_nodes().size(); ++r) {
        if (r) out += ' ';
        out += tree.node(tree.inner_nodes()[r]).id;
        out += ":(";
        const auto& order = pi.at(static_cast<int>(r));
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i) out += ',';
            out += tree.node(order[i]).id;
        }
        out += ')';
    }
    return out;
}

} // namespace treeshuffle
