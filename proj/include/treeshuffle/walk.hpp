#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "treeshuffle/ordering.hpp"
#include "treeshuffle/spectrum.hpp"
#include "treeshuffle/tree.hpp"

namespace treeshuffle {

/// xoshiro256** with splitmix64 seeding. Fully defined on 64-bit words, so
/// trajectories are identical across platforms for a given (seed, stream).
/// Streams are decorrelated by burning 4*stream splitmix64 outputs before
/// filling the state.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();

private:
    std::uint64_t s_[4];
};

/// Samples stored subsets by inverse CDF: a 64-bit draw r is read as the
/// dyadic rational r / 2^64 and compared exactly against the cumulative
/// weights, entries in canonical subset order. Entry k is chosen iff
/// cum_{k-1} <= r/2^64 < cum_k, i.e. r < ceil(cum_k * 2^64).
class SubsetSampler {
public:
    SubsetSampler(const PureTree& tree, const WeightDistribution& dist);

    const LeafSet& sample(Xoshiro256& rng) const;

private:
    std::vector<LeafSet> subsets_;
    std::vector<Integer> thresholds_; // ceil(cum * 2^64)
};

/// One step of the walk: sample E with probability w_E, move to E(pi).
LocalOrdering step(const PureTree& tree, const LocalOrdering& pi, const SubsetSampler& sampler,
                   Xoshiro256& rng);

struct ChainRun {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    /// Post-burn-in visit counts keyed by canonical state index.
    std::map<Integer, std::uint64_t> visits;

    std::uint64_t tallied() const { return steps - burn_in; }
    /// Visit frequencies as a dense vector over all state_count states.
    std::vector<Rational> empirical(std::size_t state_count) const;
};

/// Runs the chain from default_ordering for `steps` moves, tallying the
/// states reached after each of the last steps - burn_in moves.
ChainRun run_chain(const PureTree& tree, const WeightDistribution& dist, std::uint64_t steps,
                   std::uint64_t burn_in, std::uint64_t seed, std::uint64_t stream = 0);

/// Total variation distance (1/2) sum |p_i - q_i|.
Rational tv_distance(std::span<const Rational> p, std::span<const Rational> q);

} // namespace treeshuffle
