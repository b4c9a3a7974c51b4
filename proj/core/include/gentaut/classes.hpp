#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "gentaut/errors.hpp"
#include "gentaut/numeric.hpp"

namespace gentaut {

/// Reserved name of the half-diagonal generator in text renderings.
inline constexpr std::string_view kDeltaSymbol = "delta";

/// An element of (NS(S))_{S^[n]} (+) Q.delta: a sparse rational combination of
/// pulled-back surface symbols plus a delta coefficient. Zero coefficients are
/// never stored, so equality is coefficient-wise.
class DivisorClass {
 public:
  DivisorClass() = default;

  /// `coeff` times the surface symbol `name`. Throws ValidationError for
  /// names outside [A-Za-z_][A-Za-z0-9_]* or equal to "delta".
  static DivisorClass symbol(std::string name, Rational coeff = 1);
  static DivisorClass delta(Rational coeff = 1);

  const std::map<std::string, Rational>& surface() const noexcept {
    return surface_;
  }
  const Rational& delta_coeff() const noexcept { return delta_; }
  Rational coefficient(std::string_view name) const;

  bool is_zero() const noexcept { return surface_.empty() && delta_ == 0; }
  bool is_integral() const;
  /// The class with its delta coefficient removed.
  DivisorClass surface_part() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& scalar);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    return a += b;
  }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    return a -= b;
  }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) {
    return a *= s;
  }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) {
    return a *= s;
  }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// `4*e1 + 4*e2 - 5*delta`: symbols in lexicographic order, delta last,
  /// unit coefficients written out. The zero class renders as `0`.
  std::string to_string() const;

  /// {"surface": {"e1": 4}, "delta": -5}. Non-integral coefficients are
  /// written as "p/q" strings.
  nlohmann::json to_json() const;

  /// Inverse of to_string(). Also accepts bare symbols (`e`), omitted
  /// coefficients and "p/q" coefficients. Throws ParseError.
  static DivisorClass parse(std::string_view text);
  static DivisorClass from_json(const nlohmann::json& j);

 private:
  void add_surface(const std::string& name, const Rational& coeff);

  std::map<std::string, Rational> surface_;
  Rational delta_ = 0;
};

/// Throws ConsistencyError unless every coefficient of `c` is an integer.
void require_integral(const DivisorClass& c, std::string_view context);

/// Exact rational rendered as a JSON number when integral and 64-bit,
/// otherwise as a string.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

using Exponents = std::vector<int>;

/// Sparse polynomial in t_1..t_arity with coefficients in Rational or
/// DivisorClass. No zero terms are stored.
template <class Coeff>
class Polynomial {
 public:
  explicit Polynomial(int arity = 0) : arity_(arity) {}

  static Polynomial constant(int arity, const Coeff& c) {
    Polynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }

  static Polynomial monomial(Exponents exponents, const Coeff& c) {
    Polynomial p(static_cast<int>(exponents.size()));
    p.add_term(exponents, c);
    return p;
  }

  int arity() const noexcept { return arity_; }
  const std::map<Exponents, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Exponents& e) const {
    check_exponents(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(const Exponents& e, const Coeff& c) {
    check_exponents(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  /// Value at t_1 = ... = t_arity = 1.
  Coeff total() const {
    Coeff sum{};
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_arity(other.arity_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    check_arity(other.arity_);
    for (const auto& [e, c] : other.terms_) add_term(e, Rational(-1) * c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  void check_arity(int other) const {
    if (other != arity_) {
      throw ShapeError("polynomial arity mismatch: " + std::to_string(arity_) +
                       " vs " + std::to_string(other));
    }
  }

 private:
  static bool coeff_is_zero(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      return c == 0;
    } else {
      return c.is_zero();
    }
  }

  void check_exponents(const Exponents& e) const {
    check_arity(static_cast<int>(e.size()));
    for (int x : e) {
      if (x < 0) throw ShapeError("negative exponent");
    }
  }

  int arity_;
  std::map<Exponents, Coeff> terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using ClassPolynomial = Polynomial<DivisorClass>;

/// t_i (0-based) in `arity` variables.
RationalPolynomial variable(int arity, int i);

/// c_1 t_1 + ... + c_k t_k.
RationalPolynomial linear_form(std::span<const Rational> coeffs);

/// Distributive products. Throw ShapeError on arity mismatch.
RationalPolynomial poly_mul(const RationalPolynomial& p,
                            const RationalPolynomial& q);
ClassPolynomial poly_mul(const RationalPolynomial& p, const ClassPolynomial& q);

inline RationalPolynomial operator*(const RationalPolynomial& p,
                                    const RationalPolynomial& q) {
  return poly_mul(p, q);
}
inline ClassPolynomial operator*(const RationalPolynomial& p,
                                 const ClassPolynomial& q) {
  return poly_mul(p, q);
}

RationalPolynomial pow(const RationalPolynomial& p, int exponent);

/// Stored coefficient of a monomial, or the zero class.
DivisorClass coefficient_of(const ClassPolynomial& p, const Exponents& e);

/// p(p-1)/2 for shift 0, p(p+1)/2 for shift 1, expanded literally.
RationalPolynomial binom_poly(const RationalPolynomial& p, int shift);

/// Adams operation psi^k: t_i -> t_i^k, coefficients fixed.
RationalPolynomial adams(const RationalPolynomial& p, int k);

/// Graded binomial: the rank generating function of the exterior square
/// (shift 0) or symmetric square (shift 1) of a t-graded bundle with rank
/// polynomial p, i.e. (p^2 - psi^2 p)/2 and (p^2 + psi^2 p)/2. Agrees with
/// binom_poly at t = (1,...,1).
RationalPolynomial graded_binom_poly(const RationalPolynomial& p, int shift);

/// "t1^2*t2" for exponents (2,1); "1" for the constant monomial.
std::string monomial_to_string(const Exponents& e);

/// "1/2*t1^2 + t1*t2 - 3", monomials in descending lexicographic order.
std::string to_string(const RationalPolynomial& p);

/// One "<monomial>: <class>" line per term, descending lexicographic order.
std::string to_string(const ClassPolynomial& p);

}  // namespace gentaut
