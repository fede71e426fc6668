#include "hardcore/model.hpp"

#include <cmath>
#include <stdexcept>

#include "hardcore/stats.hpp"

namespace hardcore {

Rational SizeDistribution::mean() const {
    Rational acc(0);
    for (std::size_t k = 1; k < probs.size(); ++k) acc += Rational(static_cast<long>(k)) * probs[k];
    return acc;
}

Rational SizeDistribution::second_moment() const {
    Rational acc(0);
    for (std::size_t k = 1; k < probs.size(); ++k)
        acc += Rational(static_cast<long>(k * k)) * probs[k];
    return acc;
}

Rational SizeDistribution::variance() const {
    const Rational m = mean();
    return second_moment() - m * m;
}

namespace {

void require_positive(const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("fugacity must be positive");
}

}  // namespace

Rational occupancy_fraction(const Graph& g, const Rational& lambda) {
    require_positive(lambda);
    const IndependenceProfile p = independence_profile(g);
    return lambda * evaluate_derivative(p, lambda) / (Rational(g.order()) * evaluate(p, lambda));
}

Rational variance_fraction(const Graph& g, const Rational& lambda) {
    require_positive(lambda);
    return size_distribution(g, lambda).variance() / Rational(g.order());
}

double free_energy(const Graph& g, const Rational& lambda) {
    require_positive(lambda);
    const Rational P = evaluate(independence_profile(g), lambda);
    return std::log(to_double(P)) / g.order();
}

SizeDistribution size_distribution(const IndependenceProfile& p, const Rational& lambda) {
    require_positive(lambda);
    const Rational total = evaluate(p, lambda);
    SizeDistribution dist;
    dist.probs.reserve(p.coeffs.size());
    Rational power(1);
    for (const BigInt& coeff : p.coeffs) {
        dist.probs.push_back(Rational(coeff) * power / total);
        power *= lambda;
    }
    return dist;
}

SizeDistribution size_distribution(const Graph& g, const Rational& lambda) {
    return size_distribution(independence_profile(g), lambda);
}

namespace {

// Exact binomial tail Pr[Y <= t] for Y ~ Bin(n, p).
Rational binomial_cdf(int n, const Rational& p, int t) {
    const Rational one_minus = Rational(1) - p;
    Rational acc(0);
    for (int k = 0; k <= t; ++k)
        acc += Rational(binomial_coefficient(n, k)) * pow_rational(p, k) * pow_rational(one_minus, n - k);
    return acc;
}

}  // namespace

MixtureDecomposition mixture_decomposition(const IndependenceProfile& prof, const Rational& lambda) {
    require_positive(lambda);
    const int n = prof.n;
    MixtureDecomposition mix;
    mix.n = n;
    mix.p = lambda / (Rational(1) + lambda);

    mix.q.assign(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        const BigInt ik = k <= prof.degree() ? prof.coeffs[k] : BigInt(0);
        mix.q[k] = make_rational(ik, binomial_coefficient(n, k));
    }
    mix.c.assign(n + 1, Rational(0));
    for (int t = 1; t <= n; ++t) mix.c[t] = mix.q[t] - (t + 1 <= n ? mix.q[t + 1] : Rational(0));

    std::vector<Rational> tails(n + 1, Rational(0));
    for (int t = 1; t <= n; ++t) tails[t] = binomial_cdf(n, mix.p, t);
    Rational denom(0);
    for (int t = 1; t <= n; ++t) denom += mix.c[t] * tails[t];
    mix.w.assign(n + 1, Rational(0));
    for (int t = 1; t <= n; ++t) mix.w[t] = mix.c[t] * tails[t] / denom;
    return mix;
}

MixtureDecomposition mixture_decomposition(const Graph& g, const Rational& lambda) {
    return mixture_decomposition(independence_profile(g), lambda);
}

SizeDistribution reconstruct(const MixtureDecomposition& mix) {
    const int n = mix.n;
    const Rational one_minus = Rational(1) - mix.p;
    std::vector<Rational> pmf(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        pmf[k] = Rational(binomial_coefficient(n, k)) * pow_rational(mix.p, k) *
                 pow_rational(one_minus, n - k);
    std::vector<Rational> tail(n + 1, Rational(0));
    tail[0] = pmf[0];
    for (int t = 1; t <= n; ++t) tail[t] = tail[t - 1] + pmf[t];

    SizeDistribution out;
    out.probs.assign(n + 1, Rational(0));
    for (int t = 1; t <= n; ++t) {
        if (mix.w[t] == 0) continue;
        for (int k = 0; k <= t; ++k) out.probs[k] += mix.w[t] * pmf[k] / tail[t];
    }
    while (out.probs.size() > 1 && out.probs.back() == 0) out.probs.pop_back();
    return out;
}

PhiStatistics phi_statistics(const Graph& g, const Rational& lambda) {
    require_positive(lambda);
    if (g.order() > 20) throw std::invalid_argument("phi enumeration requires n <= 20");
    const int n = g.order();

    // Per-size sums of phi and of phi-weighted size over all independent sets.
    std::vector<BigInt> phi_sum(n + 2, BigInt(0));
    std::vector<BigInt> count(n + 2, BigInt(0));
    for_each_independent_set(g, [&](Mask I) {
        Mask blocked = I;
        for (Mask m = I; m; m &= m - 1) blocked |= g.neighbors(lowest_bit(m));
        const int phi = popcount(g.vertices() & ~blocked);
        const int k = popcount(I);
        phi_sum[k] += phi;
        count[k] += 1;
    });

    const IndependenceProfile prof = independence_profile(g);
    const Rational total = evaluate(prof, lambda);
    PhiStatistics out;
    out.mean_phi = Rational(0);
    out.mean_x_phi = Rational(0);
    Rational power(1);
    for (int k = 0; k <= n; ++k) {
        out.mean_phi += Rational(phi_sum[k]) * power / total;
        out.mean_x_phi += Rational(phi_sum[k] * k) * power / total;
        power *= lambda;
    }

    for (int k = 0; k <= prof.degree(); ++k) {
        const BigInt next = k + 1 <= prof.degree() ? prof.coeffs[k + 1] : BigInt(0);
        out.extension_ratio.push_back(make_rational(next * (k + 1), prof.coeffs[k]));
    }
    return out;
}

std::pair<Rational, Rational> uncovered_probability_check(const Graph& g, int v, const Rational& lambda) {
    require_positive(lambda);
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    if (g.order() > 20) throw std::invalid_argument("enumeration requires n <= 20");

    std::vector<BigInt> uncovered_count(g.order() + 1, BigInt(0));
    std::vector<BigInt> in_count(g.order() + 1, BigInt(0));
    for_each_independent_set(g, [&](Mask I) {
        const int k = popcount(I);
        if ((g.neighbors(v) & I) == 0) uncovered_count[k] += 1;
        if (I & bit(v)) in_count[k] += 1;
    });

    const Rational total = evaluate(independence_profile(g), lambda);
    Rational pr_uncovered(0), pr_in(0), power(1);
    for (int k = 0; k <= g.order(); ++k) {
        pr_uncovered += Rational(uncovered_count[k]) * power / total;
        pr_in += Rational(in_count[k]) * power / total;
        power *= lambda;
    }
    return {pr_in / pr_uncovered, pr_in};
}

Rational profile_occupancy(const IndependenceProfile& p, const Rational& lambda) {
    require_positive(lambda);
    if (p.coeffs.empty() || p.coeffs[0] != 1)
        throw std::invalid_argument("profile must have i_0 = 1");
    return lambda * evaluate_derivative(p, lambda) / (Rational(p.n) * evaluate(p, lambda));
}

}  // namespace hardcore
