#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gentaut/numeric.hpp"

namespace gentaut {

/// Largest n accepted by partition and conjugacy-class enumeration.
inline constexpr int kDefaultMaxDegree = 14;

/// Largest number of cosets enumerate_cosets() will materialise.
inline constexpr std::uint64_t kDefaultMaxCosets = 1'000'000;

/// A partition of n: positive parts in non-increasing order. The empty
/// partition (n = 0) is allowed because double reductions of small
/// compositions produce it.
class Partition {
 public:
  Partition() = default;

  /// Throws ValidationError unless `parts` is non-increasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts into canonical order and drops zero parts. Negative parts throw.
  static Partition canonical(std::span<const int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  /// "(2,1)"; the empty partition renders as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Ordered block sizes (lambda_1, ..., lambda_k) attached to bundle blocks.
/// Block j occupies positions [offset(j), offset(j) + part(j)) of 0..n-1.
class LabeledComposition {
 public:
  /// Throws ValidationError unless non-empty with every part >= 1.
  explicit LabeledComposition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int blocks() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t j) const { return parts_.at(j); }

  Partition canonical() const { return Partition::canonical(parts_); }

  int offset(int block) const;
  /// Block label of a 0-based position under the identity labelling.
  int block_of(int position) const;
  /// Labels of positions 0..n-1 for the identity coset.
  std::vector<int> identity_labels() const;

  std::string to_string() const;

  friend bool operator==(const LabeledComposition&,
                         const LabeledComposition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A partition of m >= 1 naming an irreducible representation of S_m.
class YoungDiagram {
 public:
  explicit YoungDiagram(Partition shape);
  explicit YoungDiagram(std::vector<int> rows)
      : YoungDiagram(Partition(std::move(rows))) {}

  static YoungDiagram trivial(int m);
  static YoungDiagram sign(int m);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<int>& rows() const noexcept { return shape_.parts(); }
  int size() const noexcept { return shape_.size(); }
  std::string to_string() const { return shape_.to_string(); }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.shape_ <=> b.shape_;
  }

 private:
  Partition shape_;
};

/// A right coset of the Young subgroup S_lambda in S_n, stored as the block
/// label carried by every position: labels[p] = j iff g(p) lies in block j.
class LabeledSetPartition {
 public:
  LabeledSetPartition(std::vector<int> labels, bool identity)
      : labels_(std::move(labels)), identity_(identity) {}

  const std::vector<int>& labels() const noexcept { return labels_; }
  int label(int position) const { return labels_.at(position); }
  int size() const noexcept { return static_cast<int>(labels_.size()); }
  bool is_identity() const noexcept { return identity_; }

  /// "1|1|2" with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const LabeledSetPartition&,
                         const LabeledSetPartition&) = default;

 private:
  std::vector<int> labels_;
  bool identity_ = false;
};

/// All partitions of n in lexicographically descending order.
/// Throws SizeError unless 1 <= n <= max_n.
std::vector<Partition> enumerate_partitions(int n,
                                            int max_n = kDefaultMaxDegree);

bool is_rectangular(const YoungDiagram& d);

/// Dimension of the irreducible representation, by the hook-length formula.
BigInt dimension(const YoungDiagram& d);

/// Index of the Young subgroup: n! / (lambda_1! ... lambda_k!).
BigInt index_p(const LabeledComposition& lambda);
BigInt index_p(const Partition& lambda);

/// Decrement block `i` (0-based), drop a zero part, re-sort.
Partition reduce_once(const LabeledComposition& lambda, int i);

/// Decrement blocks i and j (twice if i == j), drop zeros, re-sort.
/// Throws PreconditionError when i == j and lambda_i < 2.
Partition reduce_twice(const LabeledComposition& lambda, int i, int j);

/// p_{lambda(i)} for every block and p_{lambda(i,j)} for every valid ordered
/// pair; (i,i) is present only when lambda_i >= 2.
struct ReducedIndices {
  std::vector<BigInt> single;
  std::map<std::pair<int, int>, BigInt> pairs;
};

ReducedIndices p_reduced(const LabeledComposition& lambda);

/// All cosets S_lambda \ S_n in lexicographic order of their label
/// sequences; the identity coset comes first and is flagged.
/// Throws SizeError when index_p(lambda) exceeds max_cosets.
std::vector<LabeledSetPartition> enumerate_cosets(
    const LabeledComposition& lambda,
    std::uint64_t max_cosets = kDefaultMaxCosets);

/// All compositions of n (ordered tuples of positive integers), in
/// lexicographically descending order. Used by parameter sweeps.
std::vector<LabeledComposition> enumerate_compositions(int n);

}  // namespace gentaut
