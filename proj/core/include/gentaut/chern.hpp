#pragma once

#include <cstdint>
#include <vector>

#include "gentaut/classes.hpp"
#include "gentaut/numeric.hpp"
#include "gentaut/partition.hpp"

namespace gentaut {

/// One block of the input datum: lambda_i copies of a bundle E_i of the given
/// rank and first Chern class, twisted by the irreducible S_{lambda_i}
/// representation `rep`.
struct Block {
  int size;
  int rank;
  DivisorClass c1;  // surface class; the zero class stands for O_S
  YoungDiagram rep;
};

/// Validated input of the induced bundle G_lambda^W(E_1, ..., E_k).
class BundleSpec {
 public:
  /// Throws ValidationError unless every block has size >= 1, rank >= 1,
  /// a representation of degree `size` and a c1 without delta term.
  explicit BundleSpec(std::vector<Block> blocks);

  const LabeledComposition& lambda() const noexcept { return lambda_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(int i) const { return blocks_.at(i); }
  int k() const noexcept { return lambda_.blocks(); }
  int n() const noexcept { return lambda_.size(); }

  /// s = prod r_i^{lambda_i}, the rank of the box product.
  const BigInt& s() const noexcept { return s_; }
  /// w = prod w_i, the dimension of the tensor product of the reps.
  const BigInt& w() const noexcept { return w_; }
  const BigInt& w_i(int i) const { return dims_.at(i); }

 private:
  std::vector<Block> blocks_;
  LabeledComposition lambda_;
  BigInt s_;
  BigInt w_;
  std::vector<BigInt> dims_;
};

/// Rank p_lambda * s * w of G_lambda^W (and of F_lambda^W).
BigInt rank_G(const BundleSpec& spec);

/// B = s w sum_i p_{lambda(i)} / r_i c1(E_i). Integral by construction;
/// throws ConsistencyError otherwise.
DivisorClass b_class(const BundleSpec& spec);

/// The delta coefficient R from the closed formula built on p-reductions and
/// the S_2 restriction multiplicities (alpha_i, beta_i).
BigInt r_number(const BundleSpec& spec);

/// c1(F) = B - R delta.
DivisorClass c1(const BundleSpec& spec);

/// Rank of the sign-twisted transposition invariants on the diagonal, by
/// the trace identity rank = (dim - trace(tau)) / 2 summed over explicitly
/// enumerated cosets. Independent of r_number(). Zero when n < 2.
BigInt invariant_restriction_rank(const BundleSpec& spec,
                                  std::uint64_t max_cosets = kDefaultMaxCosets);

/// B - rank_inv delta.
DivisorClass c1_via_blowup(const DivisorClass& b, const BigInt& rank_inv);

enum class GeneratingVariant { Trivial, Sign, Regular };

struct GeneratingInput {
  int rank;
  DivisorClass c1;
};

/// Generating polynomial in t_1..t_k (k = inputs.size() <= n):
///   trivial: r_t^{n-1} c1(E_t) - r_t^{n-2} C(r_t, 2)   delta
///   sign:    r_t^{n-1} c1(E_t) - r_t^{n-2} C(r_t+1, 2) delta
///   regular: n! r_t^{n-1} c1(E_t) - (n!/2) r_t^n        delta
/// The binomials are graded (exterior/symmetric square ranks), so the
/// coefficient of t^lambda is c1 of the bundle with all-trivial or all-sign
/// representations. Throws PreconditionError when n < 2 or k > n.
ClassPolynomial generating_polynomial(int n,
                                      const std::vector<GeneratingInput>& inputs,
                                      GeneratingVariant variant);

/// n! r^{n-1} e - (n!/2) r^n delta.
DivisorClass regular_checksum(int n, int rank, const DivisorClass& e);

/// sum over W |- n of dim(W) c1(F_{(n)}^W(E)); the independent side of the
/// regular checksum.
DivisorClass regular_representation_c1_sum(int n, int rank,
                                           const DivisorClass& e);

}  // namespace gentaut
