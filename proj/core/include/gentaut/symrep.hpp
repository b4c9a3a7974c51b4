#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gentaut/numeric.hpp"
#include "gentaut/partition.hpp"

namespace gentaut {

/// Cycle lengths of a conjugacy class of S_m.
class CycleType {
 public:
  explicit CycleType(Partition cycles);
  explicit CycleType(std::vector<int> cycles)
      : CycleType(Partition::canonical(cycles)) {}

  static CycleType identity(int m);
  /// (2,1,...,1); requires m >= 2.
  static CycleType transposition(int m);

  const Partition& cycles() const noexcept { return cycles_; }
  int size() const noexcept { return cycles_.size(); }
  int fixed_points() const { return cycles_.multiplicity(1); }
  std::string to_string() const { return cycles_.to_string(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  Partition cycles_;
};

struct ConjugacyClass {
  CycleType type;
  BigInt size;
};

/// Conjugacy classes of S_m, identity first (the reverse of
/// enumerate_partitions(m)), each with size m! / prod_l (l^{m_l} m_l!).
std::vector<ConjugacyClass> conjugacy_classes(int m,
                                              int max_m = kDefaultMaxDegree);

/// A class function on S_m, one value per conjugacy class in the order of
/// conjugacy_classes(m).
struct ClassFunction {
  int degree = 0;
  std::vector<Rational> values;
};

ClassFunction operator*(const ClassFunction& f, const ClassFunction& g);

/// (1/m!) sum_c |c| f(c) g(c). Characters of S_m are real, so no
/// conjugation is needed.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

class CharacterTable {
 public:
  CharacterTable(int degree, std::vector<YoungDiagram> irreducibles,
                 std::vector<ConjugacyClass> classes,
                 std::vector<std::int64_t> values);

  int degree() const noexcept { return degree_; }
  const std::vector<YoungDiagram>& irreducibles() const noexcept {
    return irreducibles_;
  }
  const std::vector<ConjugacyClass>& classes() const noexcept {
    return classes_;
  }

  std::int64_t at(std::size_t row, std::size_t col) const {
    return values_.at(row * classes_.size() + col);
  }
  std::int64_t value(const YoungDiagram& d, const CycleType& c) const;

  std::size_t row_index(const Partition& shape) const;
  std::size_t column_index(const Partition& cycles) const;

  ClassFunction character(std::size_t row) const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.degree_ == b.degree_ && a.values_ == b.values_;
  }

 private:
  int degree_;
  std::vector<YoungDiagram> irreducibles_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::int64_t> values_;  // row-major
  std::map<Partition, std::size_t> index_;
  std::map<Partition, std::size_t> column_;
};

/// Fresh table from the Murnaghan-Nakayama rule (border strips removed on
/// beta-sets, memoised per column). Rows follow enumerate_partitions(m),
/// columns follow conjugacy_classes(m).
CharacterTable murnaghan_nakayama_table(int m, int max_m = kDefaultMaxDegree);

/// Independent oracle path for m <= 7: class sizes by enumerating all m!
/// permutations, permutation characters on tabloids by explicit fixed-point
/// counts, irreducibles by orthogonal projection in dominance order.
CharacterTable brute_force_character_table(int m);

inline constexpr int kMaxBruteForceDegree = 7;

/// Cached table for degree m (1 <= m <= kDefaultMaxDegree). Built at most
/// once per degree, read-only afterwards; safe to call concurrently.
const CharacterTable& character_table(int m);

/// chi_d(c); throws ShapeError when d and c have different degrees.
std::int64_t character(const YoungDiagram& d, const CycleType& c);

ClassFunction character_of(const YoungDiagram& d);

/// Character of the permutation representation on m points: the number of
/// fixed points of each cycle type.
ClassFunction permutation_character(int m);

/// Character of the regular representation: m! at the identity, 0 elsewhere.
ClassFunction regular_character(int m);

/// Multiplicities of the trivial (alpha) and sign (beta) representations in
/// the restriction of W_d to the S_2 generated by a transposition.
struct RestrictionPair {
  BigInt alpha;
  BigInt beta;
  friend bool operator==(const RestrictionPair&,
                         const RestrictionPair&) = default;
};

/// Throws PreconditionError when d has degree < 2.
RestrictionPair restrict_to_transposition(const YoungDiagram& d);

/// <chi_V chi_d, chi_d> with V the permutation representation; equals
/// 1 + multiplicity of W_d in (standard rep) (x) W_d.
BigInt standard_tensor_multiplicity(const YoungDiagram& d);

}  // namespace gentaut
