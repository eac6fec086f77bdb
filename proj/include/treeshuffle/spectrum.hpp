#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeshuffle/matrix.hpp"
#include "treeshuffle/ordering.hpp"
#include "treeshuffle/partition.hpp"
#include "treeshuffle/tree.hpp"

namespace treeshuffle {

/// Probability distribution on leaf subsets, exact rational weights.
/// Entries are kept in canonical subset order (lexicographic on sorted leaf
/// ranks); subsets absent from the map carry weight zero.
class WeightDistribution {
public:
    static WeightDistribution from_entries(const PureTree& tree,
                                           std::vector<std::pair<LeafSet, Rational>> entries);

    /// Distribution file format:
    /// { "weights": [ { "subset": [<leaf id>, ...], "weight": "<p>/<q>" }, ... ] }
    static WeightDistribution parse(const PureTree& tree, std::string_view json_text);

    static WeightDistribution uniform_singletons(const PureTree& tree);

    const std::vector<std::pair<LeafSet, Rational>>& entries() const { return entries_; }

    /// Subsets with strictly positive weight.
    std::vector<LeafSet> support() const;

    /// Lcm of the weight denominators; every transition probability and
    /// eigenvalue has denominator dividing this.
    Integer common_denominator() const;

    std::string serialize(const PureTree& tree) const;

private:
    std::vector<std::pair<LeafSet, Rational>> entries_;
};

/// Exact transition matrix, rows and columns in canonical state order.
struct TransitionMatrix {
    std::size_t order = 0;
    RationalMatrix probabilities;
};

TransitionMatrix transition_matrix(const PureTree& tree, const WeightDistribution& dist,
                                   std::size_t cap);

/// eps_alpha: total weight of the alpha-compatible subsets.
Rational eigenvalue_of(const PureTree& tree, const WeightDistribution& dist,
                       const PartitionFamily& alpha);

struct SpectrumRow {
    PartitionFamily alpha;
    Rational eigenvalue;
    Integer multiplicity;
};

/// One row per element of the support lattice, in enumeration order, with
/// the closed-form eigenvalue and multiplicity. Distinct families may share
/// an eigenvalue; aggregated() groups them.
struct SpectrumTable {
    std::vector<SpectrumRow> rows;
    std::map<Rational, Integer> aggregated() const;
    Integer total_multiplicity() const;
};

SpectrumTable spectrum(const PureTree& tree, const WeightDistribution& dist, std::size_t cap);

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = "");
};

/// Exact-arithmetic checks that the closed-form spectrum is the spectrum of
/// the transition matrix: row stochasticity, multiplicity census, the trace
/// identities tr(P^k) = sum_alpha m_alpha eps_alpha^k for k = 0..order, and
/// annihilation by prod_{distinct eps} (P - eps I).
VerificationReport verify_spectral_identities(const PureTree& tree,
                                              const WeightDistribution& dist, std::size_t cap);

struct SingletonSpectrumRow {
    /// Per inner node (by inner rank): the chosen child subset A_x, sorted.
    std::vector<std::vector<int>> subsets;
    Rational eigenvalue;
    Integer multiplicity;
};

/// Specialization for singleton-supported distributions: eigenvalues are
/// indexed by one child subset per inner node, the eigenvalue is the total
/// weight of leaves whose root path stays inside the chosen subsets, and
/// multiplicities are products of derangement numbers.
struct SingletonSpectrumTable {
    std::vector<SingletonSpectrumRow> rows;
    /// Groups equal eigenvalues, dropping multiplicity-0 rows; comparable
    /// with SpectrumTable::aggregated().
    std::map<Rational, Integer> aggregated() const;
};

SingletonSpectrumTable singleton_spectrum(const PureTree& tree, const WeightDistribution& dist,
                                          std::size_t cap);

struct SeparatingResult {
    bool separating = false;
    /// On failure: an inner node and two of its children no support subset
    /// tells apart (node indices).
    int witness_node = -1;
    int witness_first = -1;
    int witness_second = -1;
};

/// A support is separating when every pair of siblings is distinguished by
/// some subset in it: exactly one of the two is E-related.
SeparatingResult is_separating(const PureTree& tree, std::span<const LeafSet> support);

struct StationaryResult {
    bool unique = false;
    /// Exact stationary probabilities by state index; empty when not unique.
    std::vector<Rational> probabilities;
    /// Total multiplicity of eigenvalue 1 (1 exactly when unique).
    Integer eigenvalue_one_multiplicity;
};

/// Unique stationary distribution via the exact left kernel of (P - I) when
/// the support is separating; otherwise reports the eigenvalue-1
/// multiplicity from the closed-form spectrum.
StationaryResult stationary_distribution(const PureTree& tree, const WeightDistribution& dist,
                                         std::size_t cap);

} // namespace treeshuffle
