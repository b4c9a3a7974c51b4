#include "gentaut/symrep.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "gentaut/errors.hpp"

namespace gentaut {

// CycleType

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles)) {
  if (cycles_.size() < 1) throw ValidationError("empty cycle type");
}

CycleType CycleType::identity(int m) {
  return CycleType(Partition(std::vector<int>(m, 1)));
}

CycleType CycleType::transposition(int m) {
  if (m < 2) throw PreconditionError("S_1 has no transposition");
  std::vector<int> parts(m - 1, 1);
  parts.front() = 2;
  return CycleType(Partition(std::move(parts)));
}

std::vector<ConjugacyClass> conjugacy_classes(int m, int max_m) {
  auto shapes = enumerate_partitions(m, max_m);
  std::reverse(shapes.begin(), shapes.end());
  const BigInt order = factorial(m);
  std::vector<ConjugacyClass> out;
  out.reserve(shapes.size());
  for (auto& p : shapes) {
    BigInt centraliser = 1;
    for (int len = 1; len <= m; ++len) {
      const int count = p.multiplicity(len);
      if (count == 0) continue;
      centraliser *= boost::multiprecision::pow(BigInt(len), count);
      centraliser *= factorial(count);
    }
    out.push_back({CycleType(std::move(p)), order / centraliser});
  }
  return out;
}

// Class functions

ClassFunction operator*(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree != g.degree || f.values.size() != g.values.size()) {
    throw ShapeError("class functions of different degrees");
  }
  ClassFunction out{f.degree, f.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= g.values[i];
  return out;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree != g.degree || f.values.size() != g.values.size()) {
    throw ShapeError("class functions of different degrees");
  }
  const auto classes = conjugacy_classes(f.degree);
  if (classes.size() != f.values.size()) {
    throw ShapeError("class function does not cover every class of S_" +
                     std::to_string(f.degree));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sum += Rational(classes[i].size) * f.values[i] * g.values[i];
  }
  return sum / Rational(factorial(f.degree));
}

// CharacterTable

CharacterTable::CharacterTable(int degree,
                               std::vector<YoungDiagram> irreducibles,
                               std::vector<ConjugacyClass> classes,
                               std::vector<std::int64_t> values)
    : degree_(degree),
      irreducibles_(std::move(irreducibles)),
      classes_(std::move(classes)),
      values_(std::move(values)) {
  if (irreducibles_.size() != classes_.size() ||
      values_.size() != irreducibles_.size() * classes_.size()) {
    throw ShapeError("character table is not square");
  }
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    index_.emplace(irreducibles_[i].shape(), i);
    column_.emplace(classes_[i].type.cycles(), i);
  }
}

std::size_t CharacterTable::row_index(const Partition& shape) const {
  auto it = index_.find(shape);
  if (it == index_.end()) {
    throw ShapeError("diagram " + shape.to_string() + " is not a partition of " +
                     std::to_string(degree_));
  }
  return it->second;
}

std::size_t CharacterTable::column_index(const Partition& cycles) const {
  auto it = column_.find(cycles);
  if (it == column_.end()) {
    throw ShapeError("cycle type " + cycles.to_string() + " is not a class of S_" +
                     std::to_string(degree_));
  }
  return it->second;
}

std::int64_t CharacterTable::value(const YoungDiagram& d,
                                   const CycleType& c) const {
  return at(row_index(d.shape()), column_index(c.cycles()));
}

ClassFunction CharacterTable::character(std::size_t row) const {
  ClassFunction f{degree_, {}};
  f.values.reserve(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) f.values.emplace_back(at(row, c));
  return f;
}

// Murnaghan-Nakayama

namespace {

class BorderStripEvaluator {
 public:
  explicit BorderStripEvaluator(std::vector<int> cycles)
      : cycles_(std::move(cycles)) {
    std::sort(cycles_.begin(), cycles_.end(), std::greater<>());
  }

  std::int64_t operator()(const std::vector<int>& shape) {
    return eval(shape, 0);
  }

 private:
  std::int64_t eval(const std::vector<int>& shape, std::size_t next) {
    if (shape.empty()) return 1;
    auto it = memo_.find(shape);
    if (it != memo_.end()) return it->second;

    const int strip = cycles_[next];
    const int len = static_cast<int>(shape.size());
    // beta[i] = shape[i] + (len - 1 - i), strictly decreasing.
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
      const int target = beta[i] - strip;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int crossed = 0;
      for (int b : beta) {
        if (b > target && b < beta[i]) ++crossed;
      }
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> reduced;
      reduced.reserve(len);
      for (int r = 0; r < len; ++r) {
        const int part = moved[r] - (len - 1 - r);
        if (part > 0) reduced.push_back(part);
      }
      const std::int64_t sub = eval(reduced, next + 1);
      total += (crossed % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(shape, total);
    return total;
  }

  std::vector<int> cycles_;
  std::map<std::vector<int>, std::int64_t> memo_;
};

}  // namespace

CharacterTable murnaghan_nakayama_table(int m, int max_m) {
  auto classes = conjugacy_classes(m, max_m);
  const auto shapes = enumerate_partitions(m, max_m);
  const std::size_t n = shapes.size();
  std::vector<std::int64_t> values(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    // Fresh memo per column: entries are keyed by shape alone, which
    // determines how many cycles have already been consumed.
    BorderStripEvaluator chi(classes[col].type.cycles().parts());
    for (std::size_t row = 0; row < n; ++row) {
      values[row * n + col] = chi(shapes[row].parts());
    }
  }
  std::vector<YoungDiagram> rows;
  rows.reserve(n);
  for (const auto& p : shapes) rows.emplace_back(p);
  return CharacterTable(m, std::move(rows), std::move(classes), std::move(values));
}

// Brute force

namespace {

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

}  // namespace

CharacterTable brute_force_character_table(int m) {
  if (m < 1 || m > kMaxBruteForceDegree) {
    throw SizeError("brute-force character table limited to degree <= " +
                    std::to_string(kMaxBruteForceDegree));
  }
  const auto shapes = enumerate_partitions(m);
  const std::size_t n = shapes.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(shapes[i], i);

  std::vector<BigInt> sizes(n, 0);
  std::vector<std::vector<int>> representative(n);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const std::size_t c = index.at(Partition(cycle_lengths(perm)));
    if (sizes[c] == 0) representative[c] = perm;
    sizes[c] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Permutation character of S_m on tabloids of shape mu.
  auto tabloid_character = [&](const Partition& mu) {
    std::vector<Rational> values(n, 0);
    const std::vector<int> first = LabeledComposition(mu.parts()).identity_labels();
    for (std::size_t c = 0; c < n; ++c) {
      const auto& sigma = representative[c];
      std::vector<int> labels = first;
      long fixed = 0;
      do {
        bool stable = true;
        for (int p = 0; p < m && stable; ++p) stable = labels[sigma[p]] == labels[p];
        if (stable) ++fixed;
      } while (std::next_permutation(labels.begin(), labels.end()));
      values[c] = fixed;
    }
    return values;
  };

  const Rational order(factorial(m));
  auto dot = [&](const std::vector<Rational>& f, const std::vector<Rational>& g) {
    Rational s = 0;
    for (std::size_t c = 0; c < n; ++c) s += Rational(sizes[c]) * f[c] * g[c];
    return s / order;
  };

  // shapes are lexicographically descending, which refines dominance, so
  // every constituent of the tabloid character other than the new
  // irreducible has already been found.
  std::vector<std::vector<Rational>> irreducible;
  for (const auto& mu : shapes) {
    std::vector<Rational> chi = tabloid_character(mu);
    for (const auto& prev : irreducible) {
      const Rational coeff = dot(chi, prev);
      for (std::size_t c = 0; c < n; ++c) chi[c] -= coeff * prev[c];
    }
    if (dot(chi, chi) != 1) {
      throw ConsistencyError("projection for " + mu.to_string() +
                             " is not irreducible");
    }
    irreducible.push_back(std::move(chi));
  }

  // Columns in class order (identity first), rows in shape order.
  std::vector<std::int64_t> values(n * n);
  std::vector<ConjugacyClass> classes;
  std::vector<YoungDiagram> rows;
  for (std::size_t c = 0; c < n; ++c) {
    const Partition& type = shapes[n - 1 - c];
    classes.push_back({CycleType(type), sizes[index.at(type)]});
  }
  for (std::size_t r = 0; r < n; ++r) {
    rows.emplace_back(shapes[r]);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t source = index.at(classes[c].type.cycles());
      values[r * n + c] = to_int64(to_integer(irreducible[r][source], "character value"));
    }
  }
  return CharacterTable(m, std::move(rows), std::move(classes), std::move(values));
}

// Cache

const CharacterTable& character_table(int m) {
  static std::array<std::once_flag, kDefaultMaxDegree + 1> once;
  static std::array<std::unique_ptr<const CharacterTable>, kDefaultMaxDegree + 1>
      tables;
  if (m < 1 || m > kDefaultMaxDegree) {
    throw SizeError("character table degree " + std::to_string(m) +
                    " outside [1, " + std::to_string(kDefaultMaxDegree) + "]");
  }
  std::call_once(once[m], [m] {
    tables[m] = std::make_unique<const CharacterTable>(murnaghan_nakayama_table(m));
  });
  return *tables[m];
}

std::int64_t character(const YoungDiagram& d, const CycleType& c) {
  if (d.size() != c.size()) {
    throw ShapeError("diagram " + d.to_string() + " and cycle type " +
                     c.to_string() + " have different degrees");
  }
  return character_table(d.size()).value(d, c);
}

ClassFunction character_of(const YoungDiagram& d) {
  const auto& table = character_table(d.size());
  return table.character(table.row_index(d.shape()));
}

ClassFunction permutation_character(int m) {
  ClassFunction f{m, {}};
  for (const auto& c : conjugacy_classes(m)) f.values.emplace_back(c.type.fixed_points());
  return f;
}

ClassFunction regular_character(int m) {
  ClassFunction f{m, {}};
  for (const auto& c : conjugacy_classes(m)) {
    f.values.emplace_back(c.type.fixed_points() == m ? Rational(factorial(m))
                                                     : Rational(0));
  }
  return f;
}

RestrictionPair restrict_to_transposition(const YoungDiagram& d) {
  const int m = d.size();
  if (m < 2) {
    throw PreconditionError("restriction to a transposition needs degree >= 2");
  }
  const BigInt at_identity = character(d, CycleType::identity(m));
  const BigInt at_swap = character(d, CycleType::transposition(m));
  const BigInt twice_alpha = at_identity + at_swap;
  const BigInt twice_beta = at_identity - at_swap;
  if (twice_alpha % 2 != 0 || twice_alpha < 0 || twice_beta < 0) {
    throw ConsistencyError("invalid S_2 restriction for " + d.to_string());
  }
  return {twice_alpha / 2, twice_beta / 2};
}

BigInt standard_tensor_multiplicity(const YoungDiagram& d) {
  const ClassFunction chi = character_of(d);
  return to_integer(inner_product(permutation_character(d.size()) * chi, chi),
                    "standard tensor multiplicity");
}

}  // namespace gentaut
