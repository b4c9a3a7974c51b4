#include <gtest/gtest.h>

#include <thread>

#include "gentaut/errors.hpp"
#include "gentaut/symrep.hpp"
#include "oracles.hpp"

using namespace gentaut;

TEST(Symrep, ClassesOfS2AndS3) {
  const auto two = conjugacy_classes(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].type, CycleType::identity(2));
  EXPECT_EQ(two[0].size, 1);
  EXPECT_EQ(two[1].type, CycleType(std::vector<int>{2}));
  EXPECT_EQ(two[1].size, 1);

  std::map<std::string, BigInt> sizes;
  for (const auto& c : conjugacy_classes(3)) sizes[c.type.to_string()] = c.size;
  EXPECT_EQ(sizes["(1,1,1)"], 1);
  EXPECT_EQ(sizes["(2,1)"], 3);
  EXPECT_EQ(sizes["(3)"], 2);
}

TEST(Symrep, ClassSizesMatchPermutationCount) {
  for (int m = 1; m <= 7; ++m) {
    std::map<Partition, BigInt> counted;
    for (const auto& g : oracle::all_permutations(m)) counted[Partition(oracle::cycle_lengths(g))] += 1;
    const auto classes = conjugacy_classes(m);
    ASSERT_EQ(classes.size(), counted.size());
    for (const auto& c : classes) EXPECT_EQ(c.size, counted[c.type.cycles()]) << c.type.to_string();
  }
  for (const auto& c : conjugacy_classes(4)) {
    if (c.type == CycleType(std::vector<int>{2, 2})) EXPECT_EQ(c.size, 3);
  }
  EXPECT_THROW(conjugacy_classes(15), SizeError);
}

TEST(Symrep, CharacterExamples) {
  for (const auto& c : conjugacy_classes(5)) EXPECT_EQ(character(YoungDiagram::trivial(5), c.type), 1);
  EXPECT_EQ(character(YoungDiagram::sign(3), CycleType(std::vector<int>{3})), 1);
  EXPECT_EQ(character(YoungDiagram::sign(3), CycleType::transposition(3)), -1);
  EXPECT_EQ(character(YoungDiagram({2, 1}), CycleType::identity(3)), 2);
  EXPECT_EQ(character(YoungDiagram({2, 1}), CycleType(std::vector<int>{3})), -1);
  EXPECT_THROW(character(YoungDiagram({2, 1}), CycleType::identity(4)), ShapeError);
}

TEST(Symrep, MurnaghanNakayamaMatchesBruteForce) {
  for (int m = 1; m <= kMaxBruteForceDegree; ++m) {
    EXPECT_EQ(murnaghan_nakayama_table(m), brute_force_character_table(m)) << m;
  }
  EXPECT_THROW(brute_force_character_table(8), SizeError);
}

TEST(Symrep, Orthogonality) {
  for (int m = 1; m <= 10; ++m) {
    const CharacterTable& t = character_table(m);
    const std::size_t n = t.irreducibles().size();
    BigInt squares = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const BigInt d = dimension(t.irreducibles()[a]);
      squares += d * d;
      EXPECT_EQ(t.at(a, 0), d) << "identity column first";
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_EQ(inner_product(t.character(a), t.character(b)), a == b ? 1 : 0);
      }
    }
    EXPECT_EQ(squares, factorial(m));
  }
}

// Column orthogonality: sum_chi chi(c) chi(c') = delta_{cc'} |centraliser(c)|.
TEST(Symrep, ColumnOrthogonality) {
  const int m = 6;
  const CharacterTable& t = character_table(m);
  const std::size_t n = t.classes().size();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      std::int64_t sum = 0;
      for (std::size_t r = 0; r < n; ++r) sum += t.at(r, c) * t.at(r, d);
      const BigInt expected = c == d ? factorial(m) / t.classes()[c].size : BigInt(0);
      EXPECT_EQ(BigInt(sum), expected);
    }
  }
}

TEST(Symrep, RegularAndPermutationCharacters) {
  for (int m = 1; m <= 6; ++m) {
    const ClassFunction reg = regular_character(m);
    const ClassFunction perm = permutation_character(m);
    for (const auto& shape : enumerate_partitions(m)) {
      const YoungDiagram d(shape);
      EXPECT_EQ(inner_product(reg, character_of(d)), Rational(dimension(d)));
    }
    // The permutation representation is trivial + standard.
    const Rational expected_standard = m >= 2 ? 1 : 0;
    EXPECT_EQ(inner_product(perm, character_of(YoungDiagram::trivial(m))), 1);
    if (m >= 2) {
      EXPECT_EQ(inner_product(perm, character_of(YoungDiagram({m - 1, 1}))), expected_standard);
    }
  }
}

TEST(Symrep, RestrictionToTransposition) {
  EXPECT_EQ(restrict_to_transposition(YoungDiagram::trivial(4)), (RestrictionPair{1, 0}));
  EXPECT_EQ(restrict_to_transposition(YoungDiagram::sign(4)), (RestrictionPair{0, 1}));
  EXPECT_EQ(restrict_to_transposition(YoungDiagram({2, 1})), (RestrictionPair{1, 1}));
  EXPECT_THROW(restrict_to_transposition(YoungDiagram({1})), PreconditionError);
  for (int m = 2; m <= 10; ++m) {
    for (const auto& shape : enumerate_partitions(m)) {
      const YoungDiagram d(shape);
      const auto [alpha, beta] = restrict_to_transposition(d);
      EXPECT_EQ(alpha + beta, dimension(d));
      // Transposing the diagram swaps the roles of trivial and sign.
      std::vector<int> conj;
      for (int c = 0; c < shape[0]; ++c) {
        int h = 0;
        for (int row : shape.parts()) h += row > c;
        conj.push_back(h);
      }
      const auto swapped = restrict_to_transposition(YoungDiagram(conj));
      EXPECT_EQ(swapped.alpha, beta);
      EXPECT_EQ(swapped.beta, alpha);
    }
  }
}

TEST(Symrep, StandardTensorMultiplicity) {
  EXPECT_EQ(standard_tensor_multiplicity(YoungDiagram::trivial(5)), 1);
  EXPECT_EQ(standard_tensor_multiplicity(YoungDiagram({2, 1})), 2);
  EXPECT_EQ(standard_tensor_multiplicity(YoungDiagram({2, 2})), 1);
  for (int m = 1; m <= 10; ++m) {
    for (const auto& shape : enumerate_partitions(m)) {
      const YoungDiagram d(shape);
      EXPECT_EQ(standard_tensor_multiplicity(d) == 1, is_rectangular(d)) << d.to_string();
    }
  }
}

TEST(Symrep, CacheIsSharedAcrossThreads) {
  std::vector<const CharacterTable*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&seen, i] { seen[i] = &character_table(9); });
  }
  for (auto& t : threads) t.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
  EXPECT_EQ(*seen.front(), murnaghan_nakayama_table(9));
}
