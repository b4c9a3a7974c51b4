// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "gentaut/chern.hpp"
#include "gentaut/errors.hpp"
#include "gentaut/ext.hpp"
#include "gentaut/symrep.hpp"

using namespace gentaut;
namespace fs = std::filesystem;

namespace {

// Every DivisorClass produced by the sweeps passes through here (AC9).
struct IntegralityLedger {
  std::uint64_t seen = 0;
  std::uint64_t bad = 0;
  std::string first_bad;

  const DivisorClass& note(const DivisorClass& c) {
    ++seen;
    if (!c.is_integral() && bad++ == 0) first_bad = c.to_string();
    return c;
  }
};

IntegralityLedger ledger;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

DivisorClass sym(const std::string& name, Rational c = 1) { return DivisorClass::symbol(name, c); }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("gentaut_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

std::string write_spec(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

std::string taut_spec(int n, int r) {
  std::ostringstream s;
  s << R"({"n":)" << n << R"(,"blocks":[{"size":)" << n - 1 << R"(,"rank":1,"c1":"0","rep":[)"
    << n - 1 << R"(]},{"size":1,"rank":)" << r << R"(,"c1":"e","rep":[1]}]})";
  return s.str();
}

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
    blocks.push_back(Block{lambda[b], ranks[b], sym("e" + std::to_string(b + 1)), reps[b]});
  }
  return BundleSpec(std::move(blocks));
}

// 1. (n-1, 1) with the trivial line bundle prints exactly "1*e - r*delta".
Outcome ac1(const fs::path& dir) {
  Outcome o;
  for (int n = 2; n <= 10; ++n) {
    for (int r = 1; r <= 5; ++r) {
      const std::string path = write_spec(dir, "taut.json", taut_spec(n, r));
      std::ostringstream out, err;
      const int code = cli::dispatch({"chern", "--spec", path}, out, err);
      const std::string expected = "1*e - " + std::to_string(r) + "*delta\n";
      if (code != 0 || out.str() != expected) {
        o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " printed '" + out.str() + "'");
      }
      ledger.note(DivisorClass::parse(out.str().substr(0, out.str().size() - 1)));
    }
  }
  return o;
}

// 2. lambda = (1, ..., 1): (n-1)! s (sum c1(E_i)/r_i - (n/2) delta).
Outcome ac2() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const LabeledComposition lambda(std::vector<int>(n, 1));
    const std::vector<YoungDiagram> reps(n, YoungDiagram::trivial(1));
    for_each_rank_choice(n, [&](const std::vector<int>& ranks) {
      BigInt s = 1;
      DivisorClass sum;
      for (int i = 0; i < n; ++i) {
        s *= ranks[i];
        sum += sym("e" + std::to_string(i + 1), Rational(1, ranks[i]));
      }
      const DivisorClass expected =
          Rational(factorial(n - 1) * s) * (sum - DivisorClass::delta(Rational(n, 2)));
      if (ledger.note(c1(make_spec(lambda, reps, ranks))) != expected) {
        o.fail("n=" + std::to_string(n) + " mismatch");
      }
    });
  }
  return o;
}

// 3. Closed-form R against the trace oracle, every composition, rep tuple
//    and rank tuple in {1,2,3}.
Outcome ac3(std::uint64_t& cases) {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : enumerate_compositions(n)) {
      for_each_rep_choice(lambda, [&](const std::vector<YoungDiagram>& reps) {
        for_each_rank_choice(lambda.blocks(), [&](const std::vector<int>& ranks) {
          ++cases;
          const BundleSpec spec = make_spec(lambda, reps, ranks);
          const BigInt oracle = invariant_restriction_rank(spec);
          if (r_number(spec) != oracle) o.fail(lambda.to_string() + " R differs from trace");
          if (ledger.note(c1(spec)) != c1_via_blowup(b_class(spec), oracle)) {
            o.fail(lambda.to_string() + " c1 differs from blow-up composition");
          }
        });
      });
    }
  }
  return o;
}

// 4. Coefficient extraction for both variants.
Outcome ac4() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<GeneratingInput> inputs;
      std::vector<int> ranks;
      for (int b = 0; b < k; ++b) {
        ranks.push_back(b % 3 + 1);
        inputs.push_back({ranks.back(), sym("e" + std::to_string(b + 1))});
      }
      for (auto variant : {GeneratingVariant::Trivial, GeneratingVariant::Sign}) {
        const ClassPolynomial poly = generating_polynomial(n, inputs, variant);
        for (const auto& [e, cls] : poly.terms()) ledger.note(cls);
        for (const auto& lambda : enumerate_compositions(n)) {
          if (lambda.blocks() != k) continue;
          std::vector<YoungDiagram> reps;
          for (int part : lambda.parts()) {
            reps.push_back(variant == GeneratingVariant::Sign ? YoungDiagram::sign(part)
                                                              : YoungDiagram::trivial(part));
          }
          if (coefficient_of(poly, lambda.parts()) != c1(make_spec(lambda, reps, ranks))) {
            o.fail(lambda.to_string() + (variant == GeneratingVariant::Sign ? " sign" : " trivial"));
          }
        }
      }
    }
  }
  return o;
}

// 5. Regular-representation checksum.
Outcome ac5() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const DivisorClass sum = ledger.note(regular_representation_c1_sum(n, r, sym("e")));
      if (sum != ledger.note(regular_checksum(n, r, sym("e")))) {
        o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
  }
  return o;
}

// 6. Representation-theory suite.
Outcome ac6() {
  Outcome o;
  for (int m = 1; m <= 10; ++m) {
    const CharacterTable& t = character_table(m);
    if (m <= 6 && !(t == brute_force_character_table(m))) o.fail("MN vs brute force at m=" + std::to_string(m));
    BigInt squares = 0;
    for (std::size_t a = 0; a < t.irreducibles().size(); ++a) {
      const YoungDiagram& d = t.irreducibles()[a];
      const BigInt dim = dimension(d);
      squares += dim * dim;
      for (std::size_t b = 0; b < t.irreducibles().size(); ++b) {
        if (inner_product(t.character(a), t.character(b)) != (a == b ? 1 : 0)) {
          o.fail("orthogonality at " + d.to_string());
        }
      }
      if (m >= 2) {
        const auto [alpha, beta] = restrict_to_transposition(d);
        if (alpha + beta != dim) o.fail("alpha + beta at " + d.to_string());
      }
      if ((standard_tensor_multiplicity(d) == 1) != is_rectangular(d)) {
        o.fail("rectangularity criterion at " + d.to_string());
      }
    }
    if (squares != factorial(m)) o.fail("sum of squares at m=" + std::to_string(m));
  }
  return o;
}

// 7. Random tables with l = k and rectangular reps; a hook replacement
//    strictly raises end1.
Outcome ac7() {
  Outcome o;
  std::mt19937 rng(20241015);
  std::uniform_int_distribution<int> k_dist(1, 3), size_dist(1, 4), entry(0, 3), self(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = k_dist(rng);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(size_dist(rng));
    const int big = std::uniform_int_distribution<int>(0, k - 1)(rng);
    sizes[big] = std::max(sizes[big], 3);

    // Each block its own part, in a random order.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> position(k);
    for (int a = 0; a < k; ++a) position[order[a]] = a;
    HomTable table;
    table.k = k;
    table.hom.assign(k, std::vector<std::int64_t>(k, 0));
    table.ext1.assign(k, std::vector<std::int64_t>(k, 0));
    for (int i = 0; i < k; ++i) {
      table.hom[i][i] = 1;
      table.ext1[i][i] = self(rng);
      table.labels.push_back("F" + std::to_string(i));
      table.slopes.emplace_back(entry(rng), 1 + entry(rng));
      for (int j = 0; j < k; ++j) {
        if (position[i] < position[j]) {
          table.hom[i][j] = entry(rng);
          table.ext1[i][j] = entry(rng);
        }
      }
    }

    std::vector<Block> blocks;
    BigInt self_sum = 0;
    for (int i = 0; i < k; ++i) {
      std::vector<int> divisors;
      for (int d = 1; d <= sizes[i]; ++d) {
        if (sizes[i] % d == 0) divisors.push_back(d);
      }
      const int rows = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
      blocks.push_back(Block{sizes[i], 1 + entry(rng), sym("e" + std::to_string(i + 1)),
                             YoungDiagram(std::vector<int>(rows, sizes[i] / rows))});
      self_sum += table.end1_self(i);
    }

    const ConditionReport report = check_conditions(table);
    if (!report.homvanish_partition || static_cast<int>(report.homvanish_partition->size()) != k) {
      o.fail("trial " + std::to_string(trial) + ": no partition with l = k");
      continue;
    }
    const BundleSpec spec(blocks);
    const EndDimensions end = equivariant_end_dims(spec, table);
    if (!end.general_formula_applies || end.end0 != 1 || end.end1 != self_sum) {
      o.fail("trial " + std::to_string(trial) + ": end1 " + to_string(end.end1) + " vs " +
             to_string(self_sum));
    }
    if (!moduli_component_dim(table, spec).is_component()) {
      o.fail("trial " + std::to_string(trial) + ": moduli mismatch with rectangular reps");
    }

    std::vector<Block> hooked = blocks;
    hooked[big].rep = YoungDiagram({sizes[big] - 1, 1});
    const EndDimensions bigger = equivariant_end_dims(BundleSpec(hooked), table);
    if (bigger.end1 <= end.end1) o.fail("trial " + std::to_string(trial) + ": hook did not raise end1");
  }
  return o;
}

// 8. Certificates exist iff labels are distinct; equal labels fail exactly
//    on diagonal cosets.
Outcome ac8() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : enumerate_compositions(n)) {
      const int k = lambda.blocks();
      // Every labelling of the blocks up to renaming (restricted growth).
      std::vector<int> label(k, 0);
      while (true) {
        HomTable t;
        t.k = k;
        t.hom.assign(k, std::vector<std::int64_t>(k, 0));
        t.ext1.assign(k, std::vector<std::int64_t>(k, 0));
        for (int i = 0; i < k; ++i) {
          t.hom[i][i] = 1;
          t.labels.push_back("L" + std::to_string(label[i]));
          t.slopes.emplace_back(label[i] % 3, 2);
        }
        const int distinct = *std::max_element(label.begin(), label.end()) + 1;
        const StabilityCertificate cert = stability_certificate(lambda, t);
        if (cert.certified() != (distinct == k)) o.fail(lambda.to_string() + " certification");
        for (const auto& f : cert.failures) {
          if (!is_diagonal_coset(lambda, f, t)) o.fail(lambda.to_string() + " non-diagonal failure");
        }
        int i = k - 1;
        while (i > 0) {
          const int cap = *std::max_element(label.begin(), label.begin() + i) + 1;
          if (label[i] < cap) break;
          label[i--] = 0;
        }
        if (i == 0) break;
        ++label[i];
      }
    }
  }
  // Two blocks of the same bundle: every nontrivial coset is a failure.
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const LabeledComposition lambda({a, b});
      HomTable t;
      t.k = 2;
      t.hom = {{1, 1}, {1, 1}};
      t.ext1 = {{0, 0}, {0, 0}};
      t.labels = {"E", "E"};
      t.slopes = {Rational(1, 2), Rational(1, 2)};
      const auto cert = stability_certificate(lambda, t);
      if (!cert.witnesses.empty() || BigInt(cert.failures.size()) != index_p(lambda) - 1) {
        o.fail("same-label " + lambda.to_string());
      }
    }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  if (ledger.seen == 0) o.fail("no classes recorded");
  if (ledger.bad != 0) o.fail(std::to_string(ledger.bad) + " non-integral, first " + ledger.first_bad);
  return o;
}

Outcome ac10(const fs::path& dir, double& s12_seconds, double& chern_seconds) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const CharacterTable table = murnaghan_nakayama_table(12);
  s12_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (table.irreducibles().size() != 77) o.fail("S_12 has 77 irreducibles");
  if (s12_seconds >= 5.0) o.fail("S_12 table took too long");

  const std::string path = write_spec(
      dir, "n10.json",
      R"({"n":10,"blocks":[{"size":4,"rank":2,"c1":"e1","rep":[2,1,1]},{"size":3,"rank":3,"c1":"e2","rep":[2,1]},)"
      R"({"size":2,"rank":1,"c1":"0","rep":[1,1]},{"size":1,"rank":2,"c1":"e3","rep":[1]}]})");
  std::ostringstream out, err;
  t0 = std::chrono::steady_clock::now();
  const int code = cli::dispatch({"chern", "--spec", path}, out, err);
  chern_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (code != 0) o.fail("chern at n=10 failed: " + err.str());
  if (chern_seconds >= 0.1) o.fail("chern at n=10 took too long");
  return o;
}

}  // namespace

int main() {
  const fs::path dir = scratch_dir();
  bool all = true;
  auto report = [&](int id, const std::string& name, double limit,
                    const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && s >= limit) o.fail("exceeded " + std::to_string(limit) + " s");
    all = all && o.ok;
    std::cout << "AC" << id << (id < 10 ? "  " : " ") << (o.ok ? "PASS" : "FAIL") << "  " << name
              << "  (" << std::fixed << std::setprecision(3) << s << " s)";
    if (!o.ok) std::cout << "  " << o.detail;
    std::cout << std::endl;
  };

  std::uint64_t ac3_cases = 0;
  double s12 = 0, chern10 = 0;
  report(1, "tautological specialisation, 2<=n<=10, 1<=r<=5", 1.0, [&] { return ac1(dir); });
  report(2, "all-singleton specialisation, n<=6, ranks 1..3", 1.0, ac2);
  report(3, "closed-form R vs trace oracle, full sweep n<=6", 60.0, [&] { return ac3(ac3_cases); });
  report(4, "generating-polynomial extraction, both variants, n<=6", 10.0, ac4);
  report(5, "regular-representation checksum, n<=7, r<=3", 30.0, ac5);
  report(6, "character tables, restriction and rectangularity, m<=10", 30.0, ac6);
  report(7, "end1 on 100 random vanishing tables, hook raises end1", 10.0, ac7);
  report(8, "stability certificates iff distinct labels, n<=6", 10.0, ac8);
  report(9, "integrality of every emitted class", 0.0, ac9);
  report(10, "performance: S_12 table < 5 s, chern n=10 < 100 ms", 0.0,
         [&] { return ac10(dir, s12, chern10); });
  std::cout << "AC3 swept " << ac3_cases << " (lambda, W, rank) tuples; " << ledger.seen
            << " classes checked for integrality; S_12 " << std::setprecision(4) << s12
            << " s; chern n=10 " << chern10 * 1000 << " ms" << std::endl;

  std::error_code ec;
  fs::remove_all(dir, ec);
  return all ? 0 : 1;
}
