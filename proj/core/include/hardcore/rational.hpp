#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hardcore {

// Exact arbitrary-precision arithmetic. Every fugacity, probability and
// polynomial value in this library is a Rational; doubles appear only in
// free-energy output and sampler estimates.
using BigInt = mpz_class;
using Rational = mpq_class;

// Builds a reduced rational with positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

// Parses "p/q" or "p" (decimal integers, optional leading '-').
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

double to_double(const Rational& r);

BigInt binomial_coefficient(unsigned n, unsigned k);

BigInt pow_int(const BigInt& base, unsigned exp);
Rational pow_rational(const Rational& base, unsigned exp);

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items);

}  // namespace hardcore
