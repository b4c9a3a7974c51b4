#include "gentaut/numeric.hpp"

#include <cctype>
#include <limits>

#include "gentaut/errors.hpp"

namespace gentaut {

BigInt factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of negative number");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

BigInt to_integer(const Rational& q, std::string_view context) {
  if (!is_integral(q)) {
    throw ConsistencyError("non-integral value " + to_string(q) + " for " +
                           std::string(context));
  }
  return boost::multiprecision::numerator(q);
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ParseError("expected digits in number '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid character in number '" + std::string(whole) +
                       "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  BigInt num = parse_integer(body.substr(0, slash), text);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

std::int64_t to_int64(const BigInt& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min()) {
    throw ConsistencyError("integer " + z.str() + " does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

}  // namespace gentaut
