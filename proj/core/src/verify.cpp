#include "gentaut/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gentaut/chern.hpp"
#include "gentaut/classes.hpp"
#include "gentaut/errors.hpp"
#include "gentaut/symrep.hpp"

namespace gentaut {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what();
    }
  }

  // Runs `body`, turning library exceptions into a recorded failure.
  void guard(const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, [&] { return where + ": " + e.what(); });
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string symbol_for(int block) { return "e" + std::to_string(block + 1); }

int sweep_rank(int block) { return block % 3 + 1; }

// Every tuple of irreducible reps, one per block of lambda.
void for_each_rep_choice(const LabeledComposition& lambda,
                         const std::function<void(const std::vector<YoungDiagram>&)>& f) {
  std::vector<std::vector<Partition>> options;
  for (int part : lambda.parts()) options.push_back(enumerate_partitions(part));
  std::vector<std::size_t> idx(options.size(), 0);
  while (true) {
    std::vector<YoungDiagram> reps;
    for (std::size_t b = 0; b < options.size(); ++b) reps.emplace_back(options[b][idx[b]]);
    f(reps);
    std::size_t b = 0;
    while (b < idx.size() && ++idx[b] == options[b].size()) idx[b++] = 0;
    if (b == idx.size()) return;
  }
}

// Every rank tuple in {1, 2, 3}^k.
void for_each_rank_choice(int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> ranks(k, 1);
  while (true) {
    f(ranks);
    int b = 0;
    while (b < k && ++ranks[b] == 4) ranks[b++] = 1;
    if (b == k) return;
  }
}

BundleSpec make_spec(const LabeledComposition& lambda, const std::vector<YoungDiagram>& reps,
                     const std::vector<int>& ranks) {
  std::vector<Block> blocks;
  for (int b = 0; b < lambda.blocks(); ++b) {
    blocks.push_back(Block{lambda[b], ranks[b], DivisorClass::symbol(symbol_for(b)), reps[b]});
  }
  return BundleSpec(std::move(blocks));
}

std::string describe(const LabeledComposition& lambda, const std::vector<YoungDiagram>& reps,
                     const std::vector<int>& ranks) {
  std::string out = "lambda=" + lambda.to_string() + " reps=";
  for (const auto& r : reps) out += r.to_string();
  out += " ranks=";
  for (int r : ranks) out += std::to_string(r) + ",";
  out.pop_back();
  return out;
}

CheckResult check_cosets(int max_n) {
  Recorder rec("cosets");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_compositions(n)) {
      rec.guard(lambda.to_string(), [&] {
        const auto cosets = enumerate_cosets(lambda);
        const BigInt p = index_p(lambda);
        rec.expect(BigInt(cosets.size()) == p, [&] {
          return lambda.to_string() + ": " + std::to_string(cosets.size()) +
                 " cosets, multinomial " + to_string(p);
        });
        std::set<std::vector<int>> distinct;
        for (const auto& c : cosets) distinct.insert(c.labels());
        rec.expect(distinct.size() == cosets.size() && cosets.front().is_identity(), [&] {
          return lambda.to_string() + ": repeated cosets or identity not first";
        });

        const auto reduced = p_reduced(lambda);
        BigInt pascal = 0;
        for (const auto& q : reduced.single) pascal += q;
        rec.expect(pascal == p, [&] {
          return lambda.to_string() + ": sum of single reductions " + to_string(pascal);
        });
        if (n < 2) return;
        for (int i = 0; i < lambda.blocks(); ++i) {
          BigInt row = 0;
          for (int j = 0; j < lambda.blocks(); ++j) {
            if (auto it = reduced.pairs.find({i, j}); it != reduced.pairs.end()) row += it->second;
          }
          rec.expect(row == reduced.single[i], [&] {
            return lambda.to_string() + ": pair reductions of block " + std::to_string(i + 1) +
                   " sum to " + to_string(row);
          });
        }
      });
    }
  }
  return rec.take();
}

CheckResult check_characters(int max_n) {
  Recorder rec("characters");
  for (int m = 1; m <= max_n; ++m) {
    rec.guard("S_" + std::to_string(m), [&] {
      const CharacterTable& table = character_table(m);
      if (m <= std::min(max_n, 6)) {
        rec.expect(table == brute_force_character_table(m), [&] {
          return "S_" + std::to_string(m) + ": Murnaghan-Nakayama and brute force differ";
        });
      }
      const auto& irreps = table.irreducibles();
      BigInt squares = 0;
      for (std::size_t a = 0; a < irreps.size(); ++a) {
        const BigInt d = dimension(irreps[a]);
        squares += d * d;
        rec.expect(d == table.value(irreps[a], CycleType::identity(m)), [&] {
          return irreps[a].to_string() + ": hook length differs from chi(id)";
        });
        for (std::size_t b = a; b < irreps.size(); ++b) {
          const Rational ip = inner_product(table.character(a), table.character(b));
          rec.expect(ip == (a == b ? 1 : 0), [&] {
            return irreps[a].to_string() + " vs " + irreps[b].to_string() +
                   ": inner product " + to_string(ip);
          });
        }
        if (m >= 2) {
          const auto [alpha, beta] = restrict_to_transposition(irreps[a]);
          rec.expect(alpha + beta == d, [&] {
            return irreps[a].to_string() + ": alpha + beta != dim";
          });
        }
      }
      rec.expect(squares == factorial(m), [&] {
        return "S_" + std::to_string(m) + ": sum of squared dimensions " + to_string(squares);
      });
    });
  }
  return rec.take();
}

CheckResult check_rectangular(int max_n) {
  Recorder rec("rectangular");
  for (int m = 1; m <= max_n; ++m) {
    for (const auto& shape : enumerate_partitions(m)) {
      const YoungDiagram d(shape);
      rec.guard(d.to_string(), [&] {
        const BigInt mult = standard_tensor_multiplicity(d);
        rec.expect((mult == 1) == is_rectangular(d), [&] {
          return d.to_string() + ": multiplicity " + to_string(mult);
        });
      });
    }
  }
  return rec.take();
}

CheckResult check_rank(int max_n) {
  Recorder rec("rank");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_compositions(n)) {
      for_each_rep_choice(lambda, [&](const std::vector<YoungDiagram>& reps) {
        for_each_rank_choice(lambda.blocks(), [&](const std::vector<int>& ranks) {
          rec.guard(describe(lambda, reps, ranks), [&] {
            const BundleSpec spec = make_spec(lambda, reps, ranks);
            const BigInt closed = r_number(spec);
            const BigInt oracle = invariant_restriction_rank(spec);
            rec.expect(closed == oracle, [&] {
              return describe(lambda, reps, ranks) + ": R = " + to_string(closed) +
                     ", trace oracle " + to_string(oracle);
            });
            const DivisorClass direct = c1(spec);
            rec.expect(direct == c1_via_blowup(b_class(spec), oracle) && direct.is_integral(),
                       [&] { return describe(lambda, reps, ranks) + ": c1 mismatch"; });
          });
        });
      });
    }
  }
  return rec.take();
}

CheckResult check_generating(int max_n) {
  Recorder rec("generating");
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<GeneratingInput> inputs;
      std::vector<int> ranks;
      for (int b = 0; b < k; ++b) {
        ranks.push_back(sweep_rank(b));
        inputs.push_back({ranks.back(), DivisorClass::symbol(symbol_for(b))});
      }
      for (auto variant : {GeneratingVariant::Trivial, GeneratingVariant::Sign}) {
        const bool sign = variant == GeneratingVariant::Sign;
        rec.guard("n=" + std::to_string(n), [&] {
          const ClassPolynomial poly = generating_polynomial(n, inputs, variant);
          for (const auto& lambda : enumerate_compositions(n)) {
            if (lambda.blocks() != k) continue;
            std::vector<YoungDiagram> reps;
            for (int part : lambda.parts()) {
              reps.push_back(sign ? YoungDiagram::sign(part) : YoungDiagram::trivial(part));
            }
            const DivisorClass expected = c1(make_spec(lambda, reps, ranks));
            const DivisorClass got = coefficient_of(poly, lambda.parts());
            rec.expect(got == expected, [&] {
              return std::string(sign ? "sign " : "trivial ") + lambda.to_string() + ": " +
                     got.to_string() + " vs " + expected.to_string();
            });
          }
        });
      }
    }
    for (int r = 1; r <= 3; ++r) {
      rec.guard("regular n=" + std::to_string(n), [&] {
        const DivisorClass e = DivisorClass::symbol("e");
        const ClassPolynomial poly =
            generating_polynomial(n, {GeneratingInput{r, e}}, GeneratingVariant::Regular);
        rec.expect(coefficient_of(poly, {n}) == regular_checksum(n, r, e), [&] {
          return "regular variant n=" + std::to_string(n) + " r=" + std::to_string(r);
        });
      });
    }
  }
  return rec.take();
}

CheckResult check_regular(int max_n) {
  Recorder rec("regular");
  const DivisorClass e = DivisorClass::symbol("e");
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 1; r <= 3; ++r) {
      rec.guard("n=" + std::to_string(n), [&] {
        const DivisorClass sum = regular_representation_c1_sum(n, r, e);
        const DivisorClass expected = regular_checksum(n, r, e);
        rec.expect(sum == expected, [&] {
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                 sum.to_string() + " vs " + expected.to_string();
        });
      });
    }
  }
  return rec.take();
}

}  // namespace

std::vector<CheckResult> run_verification(int max_n) {
  if (max_n < 1 || max_n > 7) throw SizeError("verification degree must lie in 1..7");
  return {check_cosets(max_n),     check_characters(max_n), check_rectangular(max_n),
          check_rank(max_n),       check_generating(max_n), check_regular(max_n)};
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace gentaut
