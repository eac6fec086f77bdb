#include "treeshuffle/spectrum.hpp"

#include <algorithm>

#include <json.hpp>

namespace treeshuffle {

using nlohmann::ordered_json;

WeightDistribution WeightDistribution::from_entries(
    const PureTree& tree, std::vector<std::pair<LeafSet, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Rational total = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [subset, weight] = entries[i];
        for (int r : subset.ranks())
            if (r < 0 || static_cast<std::size_t>(r) >= tree.leaves().size())
                throw InputError("distribution: leaf rank out of range");
        if (i > 0 && entries[i - 1].first == subset)
            throw InputError("distribution: duplicate subset");
        if (weight < 0) throw InputError("distribution: negative weight");
        total += weight;
    }
    if (total != 1)
        throw InputError("distribution: weights sum to " + format_rational(total) +
                         ", expected 1");

    WeightDistribution dist;
    dist.entries_ = std::move(entries);
    return dist;
}

WeightDistribution WeightDistribution::parse(const PureTree& tree, std::string_view json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("distribution file: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("weights") || !j.at("weights").is_array())
        throw InputError("distribution file: expected { \"weights\": [ ... ] }");

    std::vector<std::pair<LeafSet, Rational>> entries;
    for (const auto& item : j.at("weights")) {
        if (!item.is_object() || !item.contains("subset") || !item.contains("weight"))
            throw InputError("distribution file: each entry needs \"subset\" and \"weight\"");
        if (!item.at("subset").is_array())
            throw InputError("distribution file: \"subset\" must be an array of leaf ids");
        if (!item.at("weight").is_string())
            throw InputError("distribution file: \"weight\" must be a string rational");

        std::vector<std::string> labels;
        for (const auto& id : item.at("subset")) {
            if (!id.is_string()) throw InputError("distribution file: leaf ids must be strings");
            labels.push_back(id.get<std::string>());
        }
        entries.emplace_back(tree.leaf_set(labels),
                             parse_rational(item.at("weight").get<std::string>()));
    }
    return from_entries(tree, std::move(entries));
}

WeightDistribution WeightDistribution::uniform_singletons(const PureTree& tree) {
    std::size_t n = tree.leaves().size();
    std::vector<std::pair<LeafSet, Rational>> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        entries.emplace_back(LeafSet({static_cast<int>(i)}),
                             Rational(1, static_cast<unsigned long>(n)));
    return from_entries(tree, std::move(entries));
}

std::vector<LeafSet> WeightDistribution::support() const {
    std::vector<LeafSet> out;
    for (const auto& [subset, weight] : entries_)
        if (weight > 0) out.push_back(subset);
    return out;
}

Integer WeightDistribution::common_denominator() const {
    Integer d = 1;
    for (const auto& [subset, weight] : entries_) {
        (void)subset;
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), weight.get_den().get_mpz_t());
    }
    return d;
}

std::string WeightDistribution::serialize(const PureTree& tree) const {
    ordered_json weights = ordered_json::array();
    for (const auto& [subset, weight] : entries_) {
        ordered_json item;
        item["subset"] = tree.leaf_labels(subset);
        item["weight"] = format_rational(weight);
        weights.push_back(std::move(item));
    }
    ordered_json j;
    j["weights"] = std::move(weights);
    return j.dump();
}

TransitionMatrix transition_matrix(const PureTree& tree, const WeightDistribution& dist,
                                   std::size_t cap) {
    auto states = enumerate_orderings(tree, cap);
    std::size_t n = states.size();

    TransitionMatrix result;
    result.order = n;
    result.probabilities = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [subset, weight] : dist.entries()) {
            if (weight == 0) continue;
            LocalOrdering moved = apply_move(tree, states[i], subset);
            std::size_t j = ordering_index(tree, moved).get_ui();
            result.probabilities.at(i, j) += weight;
        }
    }
    return result;
}

Rational eigenvalue_of(const PureTree& tree, const WeightDistribution& dist,
                       const PartitionFamily& alpha) {
    Rational eps = 0;
    for (const auto& [subset, weight] : dist.entries())
        if (alpha_compatible(tree, alpha, subset)) eps += weight;
    return eps;
}

std::map<Rational, Integer> SpectrumTable::aggregated() const {
    std::map<Rational, Integer> agg;
    for (const auto& row : rows) agg[row.eigenvalue] += row.multiplicity;
    return agg;
}

Integer SpectrumTable::total_multiplicity() const {
    Integer total = 0;
    for (const auto& row : rows) total += row.multiplicity;
    return total;
}

SpectrumTable spectrum(const PureTree& tree, const WeightDistribution& dist, std::size_t cap) {
    SpectrumTable table;
    for (auto& alpha : enumerate_partition_families(tree, cap)) {
        Rational eps = eigenvalue_of(tree, dist, alpha);
        Integer mult = mobius_abs_product(alpha);
        table.rows.push_back(SpectrumRow{std::move(alpha), std::move(eps), std::move(mult)});
    }
    return table;
}

bool VerificationReport::all_pass() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back(VerificationCheck{std::move(name), pass, std::move(detail)});
}

VerificationReport verify_spectral_identities(const PureTree& tree,
                                              const WeightDistribution& dist, std::size_t cap) {
    VerificationReport report;

    TransitionMatrix tm = transition_matrix(tree, dist, cap);
    std::size_t n = tm.order;
    SpectrumTable table = spectrum(tree, dist, cap);
    auto aggregated = table.aggregated();

    // Row stochasticity.
    {
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < n && pass; ++i) {
            Rational sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (tm.probabilities.at(i, j) < 0) {
                    pass = false;
                    detail = "negative entry in row " + std::to_string(i);
                    break;
                }
                sum += tm.probabilities.at(i, j);
            }
            if (pass && sum != 1) {
                pass = false;
                detail = "row " + std::to_string(i) + " sums to " + format_rational(sum);
            }
        }
        report.add("row_stochastic", pass, detail);
    }

    // Multiplicity census: sum of multiplicities = number of states.
    {
        Integer total = table.total_multiplicity();
        bool pass = (total == static_cast<unsigned long>(n));
        report.add("multiplicity_census", pass,
                   pass ? "" : "sum " + format_integer(total) + " != " + std::to_string(n));
    }

    // Trace identities, computed on the integer scaling M = D * P so that
    // matrix powers stay gcd-free: tr(P^k) = tr(M^k) / D^k.
    {
        Integer d = dist.common_denominator();
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& p = tm.probabilities.at(i, j);
                m.at(i, j) = p.get_num() * (d / p.get_den());
            }

        // Running eigenvalue powers per distinct eigenvalue.
        std::vector<std::pair<Rational, Integer>> powers; // (eps^k, multiplicity)
        for (const auto& [eps, mult] : aggregated) {
            (void)eps;
            powers.emplace_back(Rational(1), mult);
        }

        bool pass = true;
        std::string detail;
        IntegerMatrix power = IntegerMatrix::identity(n);
        Integer d_power = 1;
        std::size_t k = 0;
        while (true) {
            Rational lhs(power.trace(), d_power);
            lhs.canonicalize();
            Rational rhs = 0;
            for (const auto& [eps_power, mult] : powers) rhs += eps_power * Rational(mult);
            if (lhs != rhs) {
                pass = false;
                detail = "k=" + std::to_string(k) + ": tr(P^k) = " + format_rational(lhs) +
                         " but spectrum gives " + format_rational(rhs);
                break;
            }
            if (k == n) break;
            ++k;
            power = power * m;
            d_power *= d;
            std::size_t idx = 0;
            for (const auto& [eps, mult] : aggregated) {
                (void)mult;
                powers[idx].first *= eps;
                ++idx;
            }
        }
        report.add("trace_identities", pass, detail);

        // Diagonalizability: prod over distinct eigenvalues of (P - eps I)
        // annihilates, checked as prod (M - (D eps) I) = 0.
        {
            IntegerMatrix product = IntegerMatrix::identity(n);
            for (const auto& [eps, mult] : aggregated) {
                (void)mult;
                Integer scaled = eps.get_num() * (d / eps.get_den());
                product = product * subtract_scaled_identity(m, scaled);
            }
            bool zero = product.is_zero();
            report.add("diagonalizable", zero,
                       zero ? "" : "minimal-polynomial product is nonzero");
        }
    }

    return report;
}

std::map<Rational, Integer> SingletonSpectrumTable::aggregated() const {
    std::map<Rational, Integer> agg;
    for (const auto& row : rows)
        if (row.multiplicity != 0) agg[row.eigenvalue] += row.multiplicity;
    return agg;
}

SingletonSpectrumTable singleton_spectrum(const PureTree& tree, const WeightDistribution& dist,
                                          std::size_t cap) {
    // Leaf weights; any positive weight on a non-singleton is a hard error.
    std::vector<Rational> leaf_weight(tree.leaves().size(), Rational(0));
    for (const auto& [subset, weight] : dist.entries()) {
        if (weight == 0) continue;
        if (subset.size() != 1)
            throw InputError("singleton spectrum: distribution has positive weight on a subset "
                             "of size " + std::to_string(subset.size()));
        leaf_weight[static_cast<std::size_t>(subset.ranks().front())] = weight;
    }

    const auto& inner = tree.inner_nodes();
    Integer tuple_count = 1;
    for (int x : inner) {
        if (tree.node(x).children.size() >= 63)
            throw InputError("singleton spectrum: fanout too large to index subsets");
        tuple_count *= Integer(1) << tree.node(x).children.size();
    }
    if (tuple_count > static_cast<unsigned long>(cap))
        throw InputError("singleton spectrum: " + format_integer(tuple_count) +
                         " subset tuples exceed cap " + std::to_string(cap));

    // Root path of each leaf as (inner rank, child position) pairs.
    std::vector<std::vector<std::pair<int, std::size_t>>> path_of_leaf(tree.leaves().size());
    for (std::size_t l = 0; l < tree.leaves().size(); ++l) {
        int v = tree.leaves()[l];
        while (tree.node(v).parent >= 0) {
            int parent = tree.node(v).parent;
            const auto& kids = tree.node(parent).children;
            std::size_t pos = static_cast<std::size_t>(
                std::find(kids.begin(), kids.end(), v) - kids.begin());
            path_of_leaf[l].emplace_back(tree.inner_rank(parent), pos);
            v = parent;
        }
    }

    SingletonSpectrumTable table;
    std::vector<std::uint64_t> masks(inner.size(), 0);
    while (true) {
        SingletonSpectrumRow row;
        row.subsets.resize(inner.size());
        row.multiplicity = 1;
        for (std::size_t r = 0; r < inner.size(); ++r) {
            const auto& kids = tree.node(inner[r]).children;
            std::size_t chosen = 0;
            for (std::size_t i = 0; i < kids.size(); ++i)
                if (masks[r] & (std::uint64_t{1} << i)) {
                    row.subsets[r].push_back(kids[i]);
                    ++chosen;
                }
            row.multiplicity *= derangement_number(kids.size() - chosen);
        }

        row.eigenvalue = 0;
        for (std::size_t l = 0; l < tree.leaves().size(); ++l) {
            if (leaf_weight[l] == 0) continue;
            bool active = true;
            for (const auto& [rank, pos] : path_of_leaf[l])
                if (!(masks[static_cast<std::size_t>(rank)] & (std::uint64_t{1} << pos))) {
                    active = false;
                    break;
                }
            if (active) row.eigenvalue += leaf_weight[l];
        }
        table.rows.push_back(std::move(row));

        // Mixed-radix advance, last inner node least significant.
        std::size_t r = inner.size();
        bool done = inner.empty();
        while (r > 0) {
            --r;
            std::uint64_t limit = std::uint64_t{1} << tree.node(inner[r]).children.size();
            if (++masks[r] < limit) break;
            masks[r] = 0;
            if (r == 0) done = true;
        }
        if (done) break;
    }
    return table;
}

SeparatingResult is_separating(const PureTree& tree, std::span<const LeafSet> support) {
    std::vector<std::vector<char>> flags;
    flags.reserve(support.size());
    for (const auto& subset : support) flags.push_back(tree.related_flags(subset));

    for (int x : tree.inner_nodes()) {
        const auto& kids = tree.node(x).children;
        for (std::size_t a = 0; a < kids.size(); ++a) {
            for (std::size_t b = a + 1; b < kids.size(); ++b) {
                bool split = false;
                for (const auto& related : flags) {
                    if (related[static_cast<std::size_t>(kids[a])] !=
                        related[static_cast<std::size_t>(kids[b])]) {
                        split = true;
                        break;
                    }
                }
                if (!split)
                    return SeparatingResult{false, x, kids[a], kids[b]};
            }
        }
    }
    return SeparatingResult{true, -1, -1, -1};
}

StationaryResult stationary_distribution(const PureTree& tree, const WeightDistribution& dist,
                                         std::size_t cap) {
    auto sep = is_separating(tree, dist.support());
    StationaryResult result;

    if (!sep.separating) {
        result.unique = false;
        Integer mult = 0;
        for (const auto& row : spectrum(tree, dist, cap).rows)
            if (row.eigenvalue == 1) mult += row.multiplicity;
        result.eigenvalue_one_multiplicity = mult;
        return result;
    }

    TransitionMatrix tm = transition_matrix(tree, dist, cap);
    // Left eigenvector for eigenvalue 1: kernel of (P^T - I).
    auto basis = null_space(subtract_scaled_identity(tm.probabilities.transpose(), Rational(1)));
    if (basis.size() != 1)
        throw VerificationError("separating support but eigenvalue-1 kernel has dimension " +
                                std::to_string(basis.size()));

    Rational total = 0;
    for (const auto& v : basis.front()) total += v;
    if (total == 0)
        throw VerificationError("stationary kernel vector sums to zero");

    result.unique = true;
    result.eigenvalue_one_multiplicity = 1;
    result.probabilities.reserve(basis.front().size());
    for (const auto& v : basis.front()) {
        Rational p = v / total;
        if (p < 0) throw VerificationError("stationary vector has a negative entry");
        result.probabilities.push_back(std::move(p));
    }
    return result;
}

} // namespace treeshuffle
