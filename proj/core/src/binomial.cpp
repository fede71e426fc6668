#include "hardcore/binomial.hpp"

#include <chrono>
#include <stdexcept>

#include "hardcore/stats.hpp"

namespace hardcore {

namespace {

// Unconditioned pmf b_0..b_n of Bin(n, p).
std::vector<Rational> binomial_pmf(int n, const Rational& p) {
    const Rational q = Rational(1) - p;
    std::vector<Rational> b(n + 1);
    for (int k = 0; k <= n; ++k)
        b[k] = Rational(binomial_coefficient(n, k)) * pow_rational(p, k) * pow_rational(q, n - k);
    return b;
}

std::vector<Rational> values_0_to(int t) {
    std::vector<Rational> v(t + 1);
    for (int k = 0; k <= t; ++k) v[k] = Rational(k);
    return v;
}

}  // namespace

TruncatedBinomial truncated_binomial(int n, const Rational& p, int t) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("p must lie strictly between 0 and 1");
    if (t < 0 || t > n) throw std::invalid_argument("truncation level out of range");
    const auto b = binomial_pmf(n, p);
    Rational tail(0);
    for (int k = 0; k <= t; ++k) tail += b[k];
    TruncatedBinomial d;
    d.n = n;
    d.p = p;
    d.t = t;
    d.probs.reserve(t + 1);
    for (int k = 0; k <= t; ++k) d.probs.push_back(b[k] / tail);
    return d;
}

Rational truncated_mean(const TruncatedBinomial& d) {
    return expectation(values_0_to(d.t), d.probs);
}

Rational truncated_variance(const TruncatedBinomial& d) {
    return variance(values_0_to(d.t), d.probs);
}

CouplingWitness coupling_check(int n, const Rational& p, int t) {
    if (t < 1 || t > n) throw std::invalid_argument("coupling requires 1 <= t <= n");
    const auto b = binomial_pmf(n, p);
    std::vector<Rational> tail(n + 1);
    tail[0] = b[0];
    for (int k = 1; k <= n; ++k) tail[k] = tail[k - 1] + b[k];

    // h_r = b_r / F_r, gamma_j = h_t / h_j.
    const Rational h_t = b[t] / tail[t];
    CouplingWitness w;
    w.gamma.reserve(t + 1);
    for (int j = 0; j <= t; ++j) w.gamma.push_back(h_t / (b[j] / tail[j]));
    for (int j = 0; j + 1 <= t; ++j)
        if (w.gamma[j] > w.gamma[j + 1]) throw std::logic_error("gamma sequence not monotone");
    if (w.gamma[t] != 1) throw std::logic_error("gamma_t must equal 1");

    const TruncatedBinomial prev = truncated_binomial(n, p, t - 1);
    w.lifted.assign(t + 1, Rational(0));
    for (int j = 0; j <= t - 1; ++j) {
        w.lifted[j] += prev.probs[j] * (Rational(1) - w.gamma[j]);
        w.lifted[j + 1] += prev.probs[j] * w.gamma[j];
    }
    const TruncatedBinomial target = truncated_binomial(n, p, t);
    for (int k = 0; k <= t; ++k)
        if (w.lifted[k] != target.probs[k]) throw std::logic_error("lifted law does not match W_t");
    return w;
}

VerificationReport variance_monotonicity_sweep(int n_max, const std::vector<Rational>& p_grid) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_id = "var_de_sweep";
    report.scope = "n<=" + std::to_string(n_max) + ", " + std::to_string(p_grid.size()) +
                   " p values, all truncation levels";
    for (int n = 1; n <= n_max; ++n) {
        for (const Rational& p : p_grid) {
            const auto b = binomial_pmf(n, p);
            Rational tail = b[0];
            Rational prev_h = b[0] / tail;  // h_0 = 1
            Rational prev_var = truncated_variance(truncated_binomial(n, p, 0));
            for (int t = 1; t <= n; ++t) {
                tail += b[t];
                const Rational h = b[t] / tail;
                if (h > prev_h)
                    report.counterexamples.push_back(
                        {"", "n=" + std::to_string(n) + ",p=" + to_string(p) + ",t=" + std::to_string(t),
                         to_string(h), to_string(prev_h), "h_t > h_{t-1}"});
                const Rational var = truncated_variance(truncated_binomial(n, p, t));
                if (var < prev_var)
                    report.counterexamples.push_back(
                        {"", "n=" + std::to_string(n) + ",p=" + to_string(p) + ",t=" + std::to_string(t),
                         to_string(var), to_string(prev_var), "Var(Y|Y<=t) < Var(Y|Y<=t-1)"});
                prev_h = h;
                prev_var = var;
            }
        }
    }
    report.normalize();
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace hardcore
