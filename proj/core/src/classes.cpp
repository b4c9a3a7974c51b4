#include "gentaut/classes.hpp"

#include <cctype>
#include <limits>

namespace gentaut {

namespace {

bool valid_symbol(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

void append_term(std::string& out, const Rational& coeff, std::string_view name) {
  if (out.empty()) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  out += to_string(Rational(abs(coeff)));
  out += "*";
  out += name;
}

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) : text_(text) {}

  DivisorClass parse() {
    skip_space();
    if (at_end()) fail("empty class expression");
    DivisorClass result;
    bool first = true;
    bool constant_zero = false;
    while (!at_end()) {
      bool negative = false;
      if (!first) {
        if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
        negative = take() == '-';
        skip_space();
      } else if (peek() == '+' || peek() == '-') {
        negative = take() == '-';
        skip_space();
      }
      Rational coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_number();
        skip_space();
        if (at_end() || peek() != '*') {
          if (coeff == 0 && first && at_end()) {
            constant_zero = true;
            break;
          }
          fail("expected '*' after coefficient");
        }
        take();
        skip_space();
      }
      const std::string name = parse_name();
      if (negative) coeff = -coeff;
      if (name == kDeltaSymbol) {
        result += DivisorClass::delta(coeff);
      } else {
        result += DivisorClass::symbol(name, coeff);
      }
      first = false;
      skip_space();
    }
    if (constant_zero) return DivisorClass{};
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '/')) {
      ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!valid_symbol(name)) fail("expected a symbol name");
    return name;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// DivisorClass

DivisorClass DivisorClass::symbol(std::string name, Rational coeff) {
  if (!valid_symbol(name) || name == kDeltaSymbol) {
    throw ValidationError("invalid surface symbol '" + name + "'");
  }
  DivisorClass c;
  c.add_surface(name, coeff);
  return c;
}

DivisorClass DivisorClass::delta(Rational coeff) {
  DivisorClass c;
  c.delta_ = std::move(coeff);
  return c;
}

Rational DivisorClass::coefficient(std::string_view name) const {
  if (name == kDeltaSymbol) return delta_;
  auto it = surface_.find(std::string(name));
  return it == surface_.end() ? Rational(0) : it->second;
}

bool DivisorClass::is_integral() const {
  if (!gentaut::is_integral(delta_)) return false;
  for (const auto& [name, q] : surface_) {
    if (!gentaut::is_integral(q)) return false;
  }
  return true;
}

DivisorClass DivisorClass::surface_part() const {
  DivisorClass c = *this;
  c.delta_ = 0;
  return c;
}

void DivisorClass::add_surface(const std::string& name, const Rational& coeff) {
  auto [it, inserted] = surface_.try_emplace(name, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0) surface_.erase(it);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  for (const auto& [name, q] : other.surface_) add_surface(name, q);
  delta_ += other.delta_;
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  for (const auto& [name, q] : other.surface_) add_surface(name, -q);
  delta_ -= other.delta_;
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    surface_.clear();
    delta_ = 0;
    return *this;
  }
  for (auto& [name, q] : surface_) q *= scalar;
  delta_ *= scalar;
  return *this;
}

std::string DivisorClass::to_string() const {
  std::string out;
  for (const auto& [name, q] : surface_) append_term(out, q, name);
  if (delta_ != 0) append_term(out, delta_, kDeltaSymbol);
  return out.empty() ? "0" : out;
}

nlohmann::json rational_to_json(const Rational& q) {
  if (gentaut::is_integral(q)) {
    const BigInt z = boost::multiprecision::numerator(q);
    if (z <= std::numeric_limits<std::int64_t>::max() &&
        z >= std::numeric_limits<std::int64_t>::min()) {
      return z.convert_to<std::int64_t>();
    }
  }
  return to_string(q);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

nlohmann::json DivisorClass::to_json() const {
  nlohmann::json surface = nlohmann::json::object();
  for (const auto& [name, q] : surface_) surface[name] = rational_to_json(q);
  return {{"surface", surface}, {"delta", rational_to_json(delta_)}};
}

DivisorClass DivisorClass::parse(std::string_view text) {
  return ClassParser(text).parse();
}

DivisorClass DivisorClass::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("divisor class must be a JSON object");
  DivisorClass c;
  if (auto it = j.find("surface"); it != j.end()) {
    if (!it->is_object()) throw ParseError("\"surface\" must be an object");
    for (const auto& [name, value] : it->items()) {
      c += symbol(name, rational_from_json(value));
    }
  }
  if (auto it = j.find("delta"); it != j.end()) {
    c += delta(rational_from_json(*it));
  }
  return c;
}

void require_integral(const DivisorClass& c, std::string_view context) {
  if (!c.is_integral()) {
    throw ConsistencyError("non-integral class " + c.to_string() + " for " +
                           std::string(context));
  }
}

// Polynomials

RationalPolynomial variable(int arity, int i) {
  if (i < 0 || i >= arity) throw IndexError("variable index out of range");
  Exponents e(arity, 0);
  e[i] = 1;
  return RationalPolynomial::monomial(std::move(e), 1);
}

RationalPolynomial linear_form(std::span<const Rational> coeffs) {
  const int arity = static_cast<int>(coeffs.size());
  RationalPolynomial p(arity);
  for (int i = 0; i < arity; ++i) p += coeffs[i] * variable(arity, i);
  return p;
}

namespace {

template <class Coeff>
Polynomial<Coeff> multiply(const RationalPolynomial& p, const Polynomial<Coeff>& q) {
  p.check_arity(q.arity());
  Polynomial<Coeff> out(p.arity());
  Exponents e(p.arity());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

}  // namespace

RationalPolynomial poly_mul(const RationalPolynomial& p,
                            const RationalPolynomial& q) {
  return multiply(p, q);
}

ClassPolynomial poly_mul(const RationalPolynomial& p, const ClassPolynomial& q) {
  return multiply(p, q);
}

RationalPolynomial pow(const RationalPolynomial& p, int exponent) {
  if (exponent < 0) throw PreconditionError("negative polynomial power");
  RationalPolynomial result = RationalPolynomial::constant(p.arity(), 1);
  RationalPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

DivisorClass coefficient_of(const ClassPolynomial& p, const Exponents& e) {
  return p.coefficient(e);
}

RationalPolynomial binom_poly(const RationalPolynomial& p, int shift) {
  if (shift != 0 && shift != 1) throw PreconditionError("binomial shift must be 0 or 1");
  const auto one = RationalPolynomial::constant(p.arity(), 1);
  RationalPolynomial result = shift == 0 ? p * (p - one) : p * (p + one);
  return Rational(1, 2) * result;
}

RationalPolynomial adams(const RationalPolynomial& p, int k) {
  if (k < 1) throw PreconditionError("Adams operation index must be positive");
  RationalPolynomial out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    Exponents scaled = e;
    for (int& x : scaled) x *= k;
    out.add_term(scaled, c);
  }
  return out;
}

RationalPolynomial graded_binom_poly(const RationalPolynomial& p, int shift) {
  if (shift != 0 && shift != 1) throw PreconditionError("binomial shift must be 0 or 1");
  const RationalPolynomial square = p * p;
  const RationalPolynomial psi2 = adams(p, 2);
  return Rational(1, 2) * (shift == 0 ? square - psi2 : square + psi2);
}

std::string monomial_to_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const RationalPolynomial& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_to_string(e);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational a = abs(c);
    if (mono == "1") {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const ClassPolynomial& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out += monomial_to_string(it->first) + ": " + it->second.to_string() + "\n";
  }
  return out;
}

}  // namespace gentaut
