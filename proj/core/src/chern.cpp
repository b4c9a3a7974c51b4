#include "gentaut/chern.hpp"

#include "gentaut/errors.hpp"
#include "gentaut/symrep.hpp"

namespace gentaut {

namespace {

LabeledComposition composition_of(const std::vector<Block>& blocks) {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(b.size);
  return LabeledComposition(std::move(sizes));
}

}  // namespace

BundleSpec::BundleSpec(std::vector<Block> blocks)
    : blocks_(std::move(blocks)), lambda_(composition_of(blocks_)), s_(1), w_(1) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    const std::string where = "block " + std::to_string(i + 1);
    if (b.rank < 1) throw ValidationError(where + ": rank must be positive");
    if (b.rep.size() != b.size) {
      throw ValidationError(where + ": representation " + b.rep.to_string() +
                            " is not a partition of " + std::to_string(b.size));
    }
    if (b.c1.delta_coeff() != 0) {
      throw ValidationError(where + ": c1 must be a surface class");
    }
    s_ *= boost::multiprecision::pow(BigInt(b.rank), b.size);
    dims_.push_back(dimension(b.rep));
    w_ *= dims_.back();
  }
}

BigInt rank_G(const BundleSpec& spec) {
  return index_p(spec.lambda()) * spec.s() * spec.w();
}

DivisorClass b_class(const BundleSpec& spec) {
  const auto reduced = p_reduced(spec.lambda());
  DivisorClass sum;
  for (int i = 0; i < spec.k(); ++i) {
    sum += Rational(reduced.single[i], spec.block(i).rank) * spec.block(i).c1;
  }
  sum *= Rational(spec.s() * spec.w());
  require_integral(sum, "B class of " + spec.lambda().to_string());
  return sum;
}

BigInt r_number(const BundleSpec& spec) {
  const auto reduced = p_reduced(spec.lambda());
  Rational inner = 0;
  for (int i = 0; i < spec.k(); ++i) {
    for (int j = i + 1; j < spec.k(); ++j) inner += reduced.pairs.at({i, j});
  }
  for (int i = 0; i < spec.k(); ++i) {
    const Block& b = spec.block(i);
    if (b.size < 2) continue;
    const auto [alpha, beta] = restrict_to_transposition(b.rep);
    const BigInt r = b.rank;
    const BigInt wedge = binomial(r, 2);
    const BigInt sym = binomial(r + 1, 2);
    inner += Rational(reduced.pairs.at({i, i}) * (alpha * wedge + beta * sym),
                      r * r * spec.w_i(i));
  }
  return to_integer(inner * Rational(spec.s() * spec.w()),
                    "R number of " + spec.lambda().to_string());
}

DivisorClass c1(const BundleSpec& spec) {
  DivisorClass out = b_class(spec) - DivisorClass::delta(Rational(r_number(spec)));
  require_integral(out, "c1 of " + spec.lambda().to_string());
  return out;
}

BigInt invariant_restriction_rank(const BundleSpec& spec, std::uint64_t max_cosets) {
  // A single point has no diagonal.
  if (spec.n() < 2) return 0;
  const auto cosets = enumerate_cosets(spec.lambda(), max_cosets);
  // Non-equivariantly every coset summand has rank s w.
  const BigInt dim = BigInt(cosets.size()) * spec.s() * spec.w();
  BigInt trace = 0;
  for (const auto& coset : cosets) {
    // Cosets with positions 1 and 2 in different blocks are swapped in
    // pairs by tau and contribute nothing to the trace.
    const int i = coset.label(0);
    if (coset.label(1) != i) continue;
    const Block& b = spec.block(i);
    const BigInt r = b.rank;
    // tau swaps the two E_i factors (trace r_i on E_i (x) E_i) and acts on
    // W_i through its restriction; the remaining factors are inert.
    const BigInt chi_tau = character(b.rep, CycleType::transposition(b.size));
    trace += r * chi_tau * (spec.s() / (r * r)) * (spec.w() / spec.w_i(i));
  }
  // The sign twist negates tau, so invariants have rank (dim - trace) / 2.
  const BigInt twice = dim - trace;
  if (twice % 2 != 0 || twice < 0) {
    throw ConsistencyError("odd invariant count for " + spec.lambda().to_string());
  }
  return twice / 2;
}

DivisorClass c1_via_blowup(const DivisorClass& b, const BigInt& rank_inv) {
  return b - DivisorClass::delta(Rational(rank_inv));
}

ClassPolynomial generating_polynomial(int n,
                                      const std::vector<GeneratingInput>& inputs,
                                      GeneratingVariant variant) {
  if (n < 2) throw PreconditionError("generating polynomial needs n >= 2");
  const int k = static_cast<int>(inputs.size());
  if (k < 1 || k > n) {
    throw PreconditionError("generating polynomial needs between 1 and n inputs");
  }
  std::vector<Rational> ranks;
  ClassPolynomial c1_t(k);
  for (int i = 0; i < k; ++i) {
    if (inputs[i].rank < 1) throw ValidationError("input rank must be positive");
    if (inputs[i].c1.delta_coeff() != 0) {
      throw ValidationError("input c1 must be a surface class");
    }
    ranks.emplace_back(inputs[i].rank);
    Exponents e(k, 0);
    e[i] = 1;
    c1_t.add_term(e, inputs[i].c1);
  }
  const RationalPolynomial r_t = linear_form(ranks);

  RationalPolynomial delta_rank(k);
  Rational scale = 1;
  switch (variant) {
    case GeneratingVariant::Trivial:
      delta_rank = pow(r_t, n - 2) * graded_binom_poly(r_t, 0);
      break;
    case GeneratingVariant::Sign:
      delta_rank = pow(r_t, n - 2) * graded_binom_poly(r_t, 1);
      break;
    case GeneratingVariant::Regular:
      scale = Rational(factorial(n));
      delta_rank = Rational(factorial(n), 2) * pow(r_t, n);
      break;
  }
  ClassPolynomial out = scale * (pow(r_t, n - 1) * c1_t);
  out -= delta_rank * ClassPolynomial::constant(k, DivisorClass::delta());
  return out;
}

DivisorClass regular_checksum(int n, int rank, const DivisorClass& e) {
  if (n < 2) throw PreconditionError("regular checksum needs n >= 2");
  const BigInt r = rank;
  const BigInt nf = factorial(n);
  return Rational(nf * boost::multiprecision::pow(r, n - 1)) * e -
         DivisorClass::delta(Rational(nf * boost::multiprecision::pow(r, n), 2));
}

DivisorClass regular_representation_c1_sum(int n, int rank, const DivisorClass& e) {
  DivisorClass sum;
  for (const auto& shape : enumerate_partitions(n)) {
    YoungDiagram w(shape);
    const BigInt dim = dimension(w);
    sum += Rational(dim) * c1(BundleSpec({Block{n, rank, e, w}}));
  }
  return sum;
}

}  // namespace gentaut
