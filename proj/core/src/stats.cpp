#include "hardcore/stats.hpp"

namespace hardcore {

Rational expectation(const std::vector<Rational>& values, const std::vector<Rational>& probs) {
    Rational acc(0);
    for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * probs[i];
    return acc;
}

Rational variance(const std::vector<Rational>& values, const std::vector<Rational>& probs) {
    Rational m1(0), m2(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        m1 += values[i] * probs[i];
        m2 += values[i] * values[i] * probs[i];
    }
    return m2 - m1 * m1;
}

Rational covariance(const std::vector<Rational>& values, const std::vector<Rational>& g_values,
                    const std::vector<Rational>& probs) {
    Rational exg(0), ex(0), eg(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        exg += values[i] * g_values[i] * probs[i];
        ex += values[i] * probs[i];
        eg += g_values[i] * probs[i];
    }
    return exg - ex * eg;
}

Rational covariance_double_sum(const std::vector<Rational>& values,
                               const std::vector<Rational>& g_values,
                               const std::vector<Rational>& probs) {
    Rational acc(0);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j)
            acc += (values[i] - values[j]) * (g_values[i] - g_values[j]) * probs[i] * probs[j];
    return acc;
}

}  // namespace hardcore
