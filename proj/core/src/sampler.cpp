#include "hardcore/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace hardcore {

namespace {

// splitmix64: seed expansion and stream splitting.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256++, seeded via splitmix64; fixed output on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        for (auto& word : state_) word = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n); n <= 64 here so modulo bias is negligible
    // only if avoided — use rejection on the top range instead.
    int below(int n) {
        const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x = next();
        while (x >= bound) x = next();
        return static_cast<int>(x % n);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

struct ChainMoments {
    double mean = 0, var = 0, se_mean = 0, se_var = 0;
    std::int64_t used = 0;
};

template <typename Observe>
void run_chain(const Graph& g, const ChainConfig& cfg, std::uint64_t chain_seed, Observe&& observe) {
    const int n = g.order();
    const double occupy_prob = to_double(cfg.lambda) / (1.0 + to_double(cfg.lambda));
    Rng rng(chain_seed);
    Mask state = 0;
    const std::int64_t thinning = std::max<std::int64_t>(1, cfg.thinning);
    const std::int64_t total_steps = cfg.burn_in + cfg.samples * thinning;
    std::int64_t next_sample = cfg.burn_in + thinning;
    for (std::int64_t step = 1; step <= total_steps; ++step) {
        const int v = rng.below(n);
        const bool accept = rng.uniform() < occupy_prob;
        if (state & bit(v)) {
            if (!accept) state &= ~bit(v);
        } else if ((g.neighbors(v) & state) == 0) {
            if (accept) state |= bit(v);
        }
        if (step == next_sample) {
            observe(state);
            next_sample += thinning;
        }
    }
}

ChainMoments single_chain_estimate(const Graph& g, const ChainConfig& cfg, std::uint64_t chain_seed) {
    // Batch means: B ~ sqrt(samples) batches give both the point estimates
    // and their standard errors without storing the trajectory.
    const std::int64_t batches =
        std::max<std::int64_t>(2, static_cast<std::int64_t>(std::sqrt(static_cast<double>(cfg.samples))));
    const std::int64_t batch_len = cfg.samples / batches;
    const std::int64_t used = batches * batch_len;

    std::vector<double> batch_mean, batch_var;
    batch_mean.reserve(batches);
    batch_var.reserve(batches);
    double sum = 0, sum_sq = 0;
    std::int64_t index = 0;
    double b_sum = 0, b_sum_sq = 0;

    run_chain(g, cfg, chain_seed, [&](Mask state) {
        if (index >= used) return;
        const double x = static_cast<double>(popcount(state));
        sum += x;
        sum_sq += x * x;
        b_sum += x;
        b_sum_sq += x * x;
        ++index;
        if (index % batch_len == 0) {
            const double bm = b_sum / batch_len;
            batch_mean.push_back(bm);
            batch_var.push_back(b_sum_sq / batch_len - bm * bm);
            b_sum = 0;
            b_sum_sq = 0;
        }
    });

    ChainMoments m;
    m.used = used;
    m.mean = sum / used;
    m.var = sum_sq / used - m.mean * m.mean;
    double acc_m = 0, acc_v = 0;
    for (std::int64_t b = 0; b < batches; ++b) {
        acc_m += (batch_mean[b] - m.mean) * (batch_mean[b] - m.mean);
        acc_v += (batch_var[b] - m.var) * (batch_var[b] - m.var);
    }
    m.se_mean = std::sqrt(acc_m / (batches - 1) / batches);
    m.se_var = std::sqrt(acc_v / (batches - 1) / batches);
    return m;
}

}  // namespace

GlauberEstimate glauber_run(const Graph& g, const ChainConfig& cfg) {
    if (cfg.lambda <= 0) throw std::invalid_argument("fugacity must be positive");
    if (cfg.samples <= 0 || cfg.chains <= 0) throw std::invalid_argument("counts must be positive");

    GlauberEstimate out;
    std::uint64_t stream = cfg.seed;
    for (int c = 0; c < cfg.chains; ++c) {
        const std::uint64_t chain_seed = splitmix64(stream);
        const ChainMoments m = single_chain_estimate(g, cfg, chain_seed);
        out.est_mean += m.mean;
        out.est_var += m.var;
        // Independent chains: standard errors add in quadrature.
        out.se_mean += m.se_mean * m.se_mean;
        out.se_var += m.se_var * m.se_var;
        out.n_samples += m.used;
    }
    out.est_mean /= cfg.chains;
    out.est_var /= cfg.chains;
    out.se_mean = std::sqrt(out.se_mean) / cfg.chains;
    out.se_var = std::sqrt(out.se_var) / cfg.chains;
    return out;
}

bool chain_invariant_check(const Graph& g, const ChainConfig& cfg) {
    bool ok = true;
    std::uint64_t stream = cfg.seed;
    const std::uint64_t chain_seed = splitmix64(stream);
    run_chain(g, cfg, chain_seed, [&](Mask state) {
        if (!is_independent_set(g, state)) ok = false;
    });
    return ok;
}

std::vector<double> glauber_state_frequencies(const Graph& g, const ChainConfig& cfg) {
    if (g.order() > 16) throw std::invalid_argument("state frequencies need n <= 16");
    std::vector<std::int64_t> counts(std::size_t{1} << g.order(), 0);
    std::uint64_t stream = cfg.seed;
    const std::uint64_t chain_seed = splitmix64(stream);
    run_chain(g, cfg, chain_seed, [&](Mask state) { ++counts[state]; });
    std::vector<double> freq(counts.size());
    for (std::size_t s = 0; s < counts.size(); ++s)
        freq[s] = static_cast<double>(counts[s]) / static_cast<double>(cfg.samples);
    return freq;
}

}  // namespace hardcore
