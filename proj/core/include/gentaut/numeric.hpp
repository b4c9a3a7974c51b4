#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace gentaut {

// Expression templates are off so `auto` never captures a dangling
// temporary expression.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// n! for n >= 0.
BigInt factorial(int n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(const BigInt& n, int k);

bool is_integral(const Rational& q);

/// Numerator of `q`; throws ConsistencyError when q is not an integer.
/// `context` names the quantity in the error message.
BigInt to_integer(const Rational& q, std::string_view context);

/// Renders "p" or "p/q".
std::string to_string(const BigInt& z);
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (q != 0). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Narrowing conversion that throws ConsistencyError on overflow.
std::int64_t to_int64(const BigInt& z);

}  // namespace gentaut
