#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hardcore/binomial.hpp"
#include "hardcore/stats.hpp"

using namespace hardcore;

namespace {

std::vector<Rational> coupling_p_grid() {
    std::vector<Rational> grid{make_rational(1, 4)};
    for (const Rational& lambda : {make_rational(1, 2), Rational(1), Rational(2)})
        grid.push_back(lambda / (Rational(1) + lambda));
    return grid;
}

}  // namespace

TEST_CASE("truncated binomial distributions") {
    const auto d = truncated_binomial(2, make_rational(1, 2), 1);
    CHECK(d.probs == std::vector<Rational>{make_rational(1, 3), make_rational(2, 3)});

    // t = n leaves the binomial untouched.
    const auto full = truncated_binomial(3, make_rational(1, 4), 3);
    Rational total(0);
    for (int k = 0; k <= 3; ++k) {
        CHECK(full.probs[k] == Rational(binomial_coefficient(3, k)) *
                                   pow_rational(make_rational(1, 4), k) *
                                   pow_rational(make_rational(3, 4), 3 - k));
        total += full.probs[k];
    }
    CHECK(total == 1);

    for (const Rational& lambda : {make_rational(1, 3), Rational(2)}) {
        const Rational p = lambda / (Rational(1) + lambda);
        const auto bernoulli = truncated_binomial(1, p, 1);
        CHECK(bernoulli.probs[0] == Rational(1) / (Rational(1) + lambda));
        CHECK(bernoulli.probs[1] == lambda / (Rational(1) + lambda));
    }

    CHECK_THROWS(truncated_binomial(3, make_rational(1, 2), 4));
    CHECK_THROWS(truncated_binomial(3, make_rational(1, 2), -1));
    CHECK_THROWS(truncated_binomial(3, Rational(1), 2));
    CHECK_THROWS(truncated_binomial(3, Rational(0), 2));
}

TEST_CASE("truncated variance ladder on Bin(2, 1/2)") {
    CHECK(truncated_variance(truncated_binomial(2, make_rational(1, 2), 0)) == 0);
    CHECK(truncated_variance(truncated_binomial(2, make_rational(1, 2), 1)) == make_rational(2, 9));
    CHECK(truncated_variance(truncated_binomial(2, make_rational(1, 2), 2)) == make_rational(1, 2));
}

TEST_CASE("coupling on the documented example") {
    const auto w = coupling_check(2, make_rational(1, 2), 1);
    REQUIRE(w.gamma.size() == 2);
    CHECK(w.gamma[0] == make_rational(2, 3));
    CHECK(w.gamma[1] == 1);
    CHECK(w.lifted == std::vector<Rational>{make_rational(1, 3), make_rational(2, 3)});
}

TEST_CASE("coupling equality of laws over the grid") {
    for (int n = 2; n <= 10; ++n)
        for (const Rational& p : coupling_p_grid())
            for (int t = 1; t <= n; ++t) {
                const auto w = coupling_check(n, p, t);  // throws on any mismatch
                CHECK(w.gamma.back() == 1);
                for (std::size_t j = 0; j + 1 < w.gamma.size(); ++j) {
                    CHECK(w.gamma[j] >= 0);
                    CHECK(w.gamma[j] <= w.gamma[j + 1]);
                }
            }
    CHECK_THROWS(coupling_check(4, make_rational(1, 2), 0));
}

TEST_CASE("law of total variance decomposes the coupling step exactly") {
    for (int n = 2; n <= 8; ++n)
        for (const Rational& p : coupling_p_grid())
            for (int t = 1; t <= n; ++t) {
                const auto w = coupling_check(n, p, t);
                const auto prev = truncated_binomial(n, p, t - 1);
                std::vector<Rational> values, gammas;
                for (int j = 0; j <= t - 1; ++j) {
                    values.push_back(Rational(j));
                    gammas.push_back(w.gamma[j]);
                }
                // E Var(B|W), Var(E(B|W)), Cov(W, E(B|W)) from the witness.
                Rational mean_bernoulli_var(0);
                for (int j = 0; j <= t - 1; ++j)
                    mean_bernoulli_var += prev.probs[j] * w.gamma[j] * (Rational(1) - w.gamma[j]);
                const Rational var_gamma = variance(gammas, prev.probs);
                const Rational cov = covariance(values, gammas, prev.probs);
                CHECK(cov >= 0);
                CHECK(Rational(2) * cov == covariance_double_sum(values, gammas, prev.probs));

                std::vector<Rational> lifted_values;
                for (int k = 0; k <= t; ++k) lifted_values.push_back(Rational(k));
                const Rational lhs = variance(lifted_values, w.lifted) - variance(values, prev.probs);
                CHECK(lhs == mean_bernoulli_var + var_gamma + Rational(2) * cov);
            }
}

TEST_CASE("variance monotonicity sweep") {
    const auto report =
        variance_monotonicity_sweep(10, {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)});
    CHECK(report.pass());
    CHECK(report.counterexamples.empty());
    CHECK(report.check_id == "var_de_sweep");

    const auto tiny = variance_monotonicity_sweep(1, {make_rational(1, 2)});
    CHECK(tiny.pass());
    CHECK(truncated_variance(truncated_binomial(1, make_rational(1, 2), 1)) >=
          truncated_variance(truncated_binomial(1, make_rational(1, 2), 0)));
}
