#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gentaut/chern.hpp"
#include "gentaut/numeric.hpp"
#include "gentaut/partition.hpp"

namespace gentaut {

using DimMatrix = std::vector<std::vector<std::int64_t>>;

/// Largest block count accepted by check_conditions().
inline constexpr int kMaxConditionBlocks = 10;

/// Dimensions of Hom and Ext^1 between the block bundles E_1..E_k, plus the
/// isomorphism-class label and slope of each. Row index is the source:
/// hom[i][j] = dim Hom(E_i, E_j).
struct HomTable {
  int k = 0;
  DimMatrix hom;
  DimMatrix ext1;
  std::optional<DimMatrix> ext2;  // accepted, unused
  std::vector<std::string> labels;
  std::vector<Rational> slopes;
  bool locally_free = true;  // recorded only

  std::int64_t end1_self(int i) const { return ext1.at(i).at(i); }
  bool is_simple(int i) const { return hom.at(i).at(i) == 1; }

  /// Throws ValidationError on wrong shapes, negative entries, hom[i][i] < 1,
  /// or equal labels with different slopes.
  void validate() const;

  nlohmann::json to_json() const;
  /// Parses {"k", "hom", "ext1", "labels", "slopes"[, "ext2",
  /// "locally_free"]} and validates. Throws ParseError / ValidationError.
  static HomTable from_json(const nlohmann::json& j);
};

/// Ordered set partition I_1 < ... < I_l of 0-based block indices.
using OrderedSetPartition = std::vector<std::vector<int>>;

struct ConditionReport {
  bool distinct_ok = false;
  std::optional<OrderedSetPartition> homvanish_partition;
  std::vector<std::string> witnesses;
};

/// True iff `partition` covers 0..k-1 exactly once and satisfies the three
/// vanishing requirements: every E_j simple; Hom(E_i, E_j) = 0 for distinct
/// i, j in one part; Hom(E_j, E_i) = Ext^1(E_j, E_i) = 0 whenever i lies in
/// an earlier part than j.
bool satisfies_homvanish(const HomTable& table,
                         const OrderedSetPartition& partition);

/// Distinctness of labels, and an ordered set partition satisfying the
/// vanishing condition when one exists. The partition returned has the
/// largest possible number of parts; parts are ordered by a topological sort
/// with smallest-index tie breaking. When none exists, `witnesses` names the
/// violated constraints. Throws SizeError when k > max_k.
ConditionReport check_conditions(const HomTable& table,
                                 int max_k = kMaxConditionBlocks);

/// Kunneth dimensions of Ext^*(E, g^*E) in degrees 0 and 1 for one coset.
struct KunnethDims {
  BigInt degree0;
  BigInt degree1;
};

KunnethDims kunneth_dims(const LabeledComposition& lambda,
                         const LabeledSetPartition& coset,
                         const HomTable& table);

struct CosetKunneth {
  LabeledSetPartition coset;
  KunnethDims dims;
};

struct Ext1VanishingReport {
  bool vanishes = true;
  std::optional<CosetKunneth> witness;  // first violating coset
  std::uint64_t nontrivial_cosets = 0;
};

/// Checks Ext^1(E, g^*E) = 0 for every nontrivial coset g.
Ext1VanishingReport offdiagonal_ext1_vanishing(
    const LabeledComposition& lambda, const HomTable& table,
    std::uint64_t max_cosets = kDefaultMaxCosets);

struct EndDimensions {
  BigInt end0;
  BigInt end1;
  /// Per-block multiplicity <chi_V chi_W, chi_W> of End^1(E_i).
  std::vector<BigInt> multiplicities;
  /// False when some nontrivial coset carries Ext^1; end1 is then only the
  /// identity-coset contribution.
  bool general_formula_applies = true;
  std::optional<CosetKunneth> obstruction;
};

/// Equivariant End^0 and End^1 of G_lambda^W. Throws PreconditionError when
/// some block bundle is not simple, ShapeError when the table does not match.
EndDimensions equivariant_end_dims(const BundleSpec& spec,
                                   const HomTable& table);

struct ModuliDimension {
  BigInt image_dim;    // sum_i dim End^1(E_i)
  BigInt tangent_dim;  // dim End^1 of the generalised tautological bundle
  bool is_component() const { return image_dim == tangent_dim; }
};

/// Tangent dimension of the image component. With rectangular reps both
/// numbers agree; otherwise the mismatch is reported. Throws
/// NotApplicableError when off-diagonal Ext^1 survives.
ModuliDimension moduli_component_dim(const HomTable& table,
                                     const BundleSpec& spec);

/// prod_j cross[j][j]^{lambda_j}: the identity-coset Hom between the
/// induced bundles of two specs sharing lambda and reps. Throws ShapeError
/// on mismatched specs and NotApplicableError when an off-diagonal cross
/// Hom is nonzero.
BigInt hom_between(const BundleSpec& a, const BundleSpec& b,
                   const DimMatrix& cross);

/// sum_i lambda_i mu_i.
Rational slope_of_induced(const LabeledComposition& lambda,
                          std::span<const Rational> slopes);

struct CosetWitness {
  LabeledSetPartition coset;
  int position;  // 0-based i with label(F_i) != label(F_g(i)), mu(F_i) >= mu(F_g(i))
};

struct StabilityCertificate {
  std::vector<CosetWitness> witnesses;
  /// Nontrivial cosets without a witness. Each is diagonal: every position
  /// is sent to a block with the same isomorphism label, so g^*E ~ E.
  std::vector<LabeledSetPartition> failures;
  bool certified() const { return failures.empty(); }
};

/// Per-coset Hom-vanishing witnesses for every nontrivial coset.
StabilityCertificate stability_certificate(
    const LabeledComposition& lambda, const HomTable& table,
    std::uint64_t max_cosets = kDefaultMaxCosets);

/// True iff every position of `coset` keeps its isomorphism label.
bool is_diagonal_coset(const LabeledComposition& lambda,
                       const LabeledSetPartition& coset,
                       const HomTable& table);

}  // namespace gentaut
