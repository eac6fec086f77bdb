#include "treeshuffle/walk.hpp"

#include <algorithm>

namespace treeshuffle {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t sm = seed;
    for (std::uint64_t i = 0; i < 4 * stream; ++i) splitmix64(sm);
    for (auto& word : s_) word = splitmix64(sm);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Xoshiro256::next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

SubsetSampler::SubsetSampler(const PureTree& tree, const WeightDistribution& dist) {
    (void)tree;
    Rational cum = 0;
    for (const auto& [subset, weight] : dist.entries()) {
        if (weight == 0) continue;
        cum += weight;
        subsets_.push_back(subset);
        // ceil(cum * 2^64) = (num << 64 + den - 1) / den
        Integer scaled = cum.get_num() << 64;
        Integer threshold;
        mpz_cdiv_q(threshold.get_mpz_t(), scaled.get_mpz_t(), cum.get_den().get_mpz_t());
        thresholds_.push_back(std::move(threshold));
    }
    if (subsets_.empty()) throw InputError("sampler: distribution has empty support");
}

const LeafSet& SubsetSampler::sample(Xoshiro256& rng) const {
    std::uint64_t r = rng.next();
    // First threshold strictly above r. The last threshold is 2^64, so the
    // search always lands.
    std::size_t lo = 0, hi = thresholds_.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (mpz_cmp_ui(thresholds_[mid].get_mpz_t(), r) > 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    return subsets_[lo];
}

LocalOrdering step(const PureTree& tree, const LocalOrdering& pi, const SubsetSampler& sampler,
                   Xoshiro256& rng) {
    return apply_move(tree, pi, sampler.sample(rng));
}

std::vector<Rational> ChainRun::empirical(std::size_t state_count) const {
    std::vector<Rational> freq(state_count, Rational(0));
    Integer total(static_cast<unsigned long>(tallied()));
    for (const auto& [index, count] : visits) {
        Rational f(Integer(static_cast<unsigned long>(count)), total);
        f.canonicalize();
        freq[static_cast<std::size_t>(index.get_ui())] = std::move(f);
    }
    return freq;
}

ChainRun run_chain(const PureTree& tree, const WeightDistribution& dist, std::uint64_t steps,
                   std::uint64_t burn_in, std::uint64_t seed, std::uint64_t stream) {
    if (steps <= burn_in)
        throw InputError("run_chain: steps (" + std::to_string(steps) +
                         ") must exceed burn_in (" + std::to_string(burn_in) + ")");

    Xoshiro256 rng(seed, stream);
    SubsetSampler sampler(tree, dist);

    ChainRun run;
    run.seed = seed;
    run.stream = stream;
    run.steps = steps;
    run.burn_in = burn_in;

    LocalOrdering pi = default_ordering(tree);
    for (std::uint64_t i = 0; i < steps; ++i) {
        pi = step(tree, pi, sampler, rng);
        if (i >= burn_in) ++run.visits[ordering_index(tree, pi)];
    }
    return run;
}

Rational tv_distance(std::span<const Rational> p, std::span<const Rational> q) {
    if (p.size() != q.size())
        throw InputError("tv_distance: vectors have different lengths");
    Rational sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += abs(p[i] - q[i]);
    return sum / 2;
}

} // namespace treeshuffle
