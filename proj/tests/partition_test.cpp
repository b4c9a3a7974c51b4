#include <gtest/gtest.h>

#include <set>

#include "gentaut/errors.hpp"
#include "gentaut/partition.hpp"
#include "oracles.hpp"

using namespace gentaut;

namespace {

LabeledComposition comp(std::vector<int> parts) { return LabeledComposition(std::move(parts)); }

}  // namespace

TEST(Partition, RejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), ValidationError);
  EXPECT_THROW(Partition({2, 0}), ValidationError);
  EXPECT_THROW(LabeledComposition({}), ValidationError);
  EXPECT_THROW(LabeledComposition({2, 0}), ValidationError);
  EXPECT_EQ(Partition::canonical(std::vector<int>{1, 0, 3}), Partition({3, 1}));
}

TEST(Partition, EnumerateSmall) {
  EXPECT_EQ(enumerate_partitions(1), std::vector<Partition>{Partition({1})});
  const std::vector<Partition> three{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
  EXPECT_EQ(enumerate_partitions(3), three);
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
  EXPECT_THROW(enumerate_partitions(0), SizeError);
  EXPECT_THROW(enumerate_partitions(15), SizeError);
}

TEST(Partition, EnumerationMatchesCountRecurrence) {
  for (int n = 1; n <= 14; ++n) {
    const auto parts = enumerate_partitions(n);
    EXPECT_EQ(parts.size(), oracle::partition_count(n)) << n;
    EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend())) << n;
    EXPECT_EQ(std::set<Partition>(parts.begin(), parts.end()).size(), parts.size());
  }
}

TEST(Partition, Rectangular) {
  EXPECT_TRUE(is_rectangular(YoungDiagram({5})));
  EXPECT_TRUE(is_rectangular(YoungDiagram({3, 3})));
  EXPECT_TRUE(is_rectangular(YoungDiagram({1, 1, 1})));
  EXPECT_FALSE(is_rectangular(YoungDiagram({2, 1})));
}

TEST(Partition, HookLengthMatchesTableaux) {
  EXPECT_EQ(dimension(YoungDiagram::sign(6)), 1);
  EXPECT_EQ(dimension(YoungDiagram({2, 2})), 2);
  for (int m = 2; m <= 9; ++m) EXPECT_EQ(dimension(YoungDiagram({m - 1, 1})), m - 1);
  for (int m = 1; m <= 9; ++m) {
    for (const auto& p : enumerate_partitions(m)) {
      EXPECT_EQ(dimension(YoungDiagram(p)), oracle::count_syt(p.parts())) << p.to_string();
    }
  }
}

TEST(Partition, IndexP) {
  EXPECT_EQ(index_p(comp({5})), 1);
  EXPECT_EQ(index_p(comp({1, 1, 1})), 6);
  EXPECT_EQ(index_p(comp({2, 1})), 3);
  EXPECT_EQ(index_p(Partition{}), 1);
}

TEST(Partition, Reductions) {
  EXPECT_EQ(reduce_once(comp({2, 1}), 0), Partition({1, 1}));
  EXPECT_EQ(reduce_once(comp({6}), 0), Partition({5}));
  EXPECT_EQ(reduce_once(comp({2, 1}), 1), Partition({2}));
  EXPECT_EQ(reduce_twice(comp({2, 1}), 0, 1), Partition({1}));
  EXPECT_EQ(reduce_twice(comp({6}), 0, 0), Partition({4}));
  EXPECT_EQ(reduce_twice(comp({2, 2}), 0, 0), Partition({2}));
  EXPECT_EQ(reduce_once(comp({1, 3}), 1), Partition({2, 1}));
  EXPECT_THROW(reduce_once(comp({2, 1}), 2), IndexError);
  EXPECT_THROW(reduce_twice(comp({2, 1}), 1, 1), PreconditionError);
}

TEST(Partition, PReducedExample) {
  const auto r = p_reduced(comp({2, 1}));
  EXPECT_EQ(r.single, (std::vector<BigInt>{2, 1}));
  EXPECT_EQ(r.pairs.at({0, 1}), 1);
  EXPECT_EQ(r.pairs.at({0, 0}), 1);
  EXPECT_FALSE(r.pairs.contains({1, 1}));

  const auto full = p_reduced(comp({4}));
  EXPECT_EQ(full.single, std::vector<BigInt>{1});
  EXPECT_EQ(full.pairs.at({0, 0}), 1);
}

TEST(Partition, CosetsSmall) {
  EXPECT_EQ(enumerate_cosets(comp({4})).size(), 1u);
  EXPECT_EQ(enumerate_cosets(comp({1, 1})).size(), 2u);
  const auto c = enumerate_cosets(comp({2, 1}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_TRUE(c.front().is_identity());
  EXPECT_EQ(c.front().to_string(), "1|1|2");
  EXPECT_EQ(c[1].to_string(), "1|2|1");
  EXPECT_EQ(c[2].to_string(), "2|1|1");
  EXPECT_THROW(enumerate_cosets(comp({1, 1, 1, 1}), 10), SizeError);
}

// Counting cosets by the labels at positions 1 and 2 reproduces the
// reduced indices.
TEST(Partition, CosetCountsMatchReductions) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : enumerate_compositions(n)) {
      const auto cosets = enumerate_cosets(lambda);
      ASSERT_EQ(BigInt(cosets.size()), index_p(lambda)) << lambda.to_string();
      const auto reduced = p_reduced(lambda);
      std::map<int, BigInt> first;
      std::map<std::pair<int, int>, BigInt> pair;
      for (const auto& c : cosets) {
        first[c.label(0)] += 1;
        if (n >= 2) pair[{c.label(0), c.label(1)}] += 1;
      }
      for (int i = 0; i < lambda.blocks(); ++i) {
        EXPECT_EQ(first[i], reduced.single[i]) << lambda.to_string();
      }
      if (n < 2) continue;
      for (const auto& [key, count] : reduced.pairs) {
        EXPECT_EQ(pair[key], count) << lambda.to_string();
      }
    }
  }
}

// Grouping all n! permutations by their label sequence gives exactly the
// enumerated cosets, each of size |S_lambda|.
TEST(Partition, CosetsMatchPermutationGrouping) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : enumerate_compositions(n)) {
      std::map<std::vector<int>, int> groups;
      for (const auto& g : oracle::all_permutations(n)) {
        ++groups[oracle::coset_labels(lambda, g)];
      }
      const auto cosets = enumerate_cosets(lambda);
      ASSERT_EQ(groups.size(), cosets.size()) << lambda.to_string();
      const BigInt stabiliser = factorial(n) / index_p(lambda);
      for (const auto& c : cosets) {
        ASSERT_TRUE(groups.contains(c.labels()));
        EXPECT_EQ(BigInt(groups[c.labels()]), stabiliser);
      }
      EXPECT_EQ(cosets.front().labels(), lambda.identity_labels());
    }
  }
}

TEST(Partition, Compositions) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_compositions(n).size(), 1u << (n - 1));
  }
}
