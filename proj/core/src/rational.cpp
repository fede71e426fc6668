#include "hardcore/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hardcore {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    return make_rational(n, d);
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::string to_string(const BigInt& z) {
    return z.get_str();
}

double to_double(const Rational& r) {
    return r.get_d();
}

BigInt binomial_coefficient(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

Rational pow_rational(const Rational& base, unsigned exp) {
    return make_rational(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(parse_rational(s));
    return out;
}

}  // namespace hardcore
