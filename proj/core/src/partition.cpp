#include "gentaut/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gentaut/errors.hpp"

namespace gentaut {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

BigInt multinomial(int n, std::span<const int> parts) {
  BigInt result = factorial(n);
  for (int p : parts) result /= factorial(p);
  return result;
}

}  // namespace

// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw ValidationError("partition " + join_parts(parts_) +
                            " has a non-positive part");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition " + join_parts(parts_) +
                            " is not non-increasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::canonical(std::span<const int> parts) {
  std::vector<int> sorted;
  sorted.reserve(parts.size());
  for (int p : parts) {
    if (p < 0) throw ValidationError("negative part in composition");
    if (p > 0) sorted.push_back(p);
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return Partition(std::move(sorted));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const { return join_parts(parts_); }

// LabeledComposition

LabeledComposition::LabeledComposition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("composition has no blocks");
  for (int p : parts_) {
    if (p < 1) {
      throw ValidationError("composition " + join_parts(parts_) +
                            " has a non-positive block size");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int LabeledComposition::offset(int block) const {
  if (block < 0 || block >= blocks()) {
    throw IndexError("block index " + std::to_string(block) +
                     " out of range for " + to_string());
  }
  return std::accumulate(parts_.begin(), parts_.begin() + block, 0);
}

int LabeledComposition::block_of(int position) const {
  if (position < 0 || position >= n_) {
    throw IndexError("position " + std::to_string(position) +
                     " out of range for " + to_string());
  }
  int end = 0;
  for (int j = 0; j < blocks(); ++j) {
    end += parts_[j];
    if (position < end) return j;
  }
  return blocks() - 1;  // unreachable
}

std::vector<int> LabeledComposition::identity_labels() const {
  std::vector<int> labels;
  labels.reserve(n_);
  for (int j = 0; j < blocks(); ++j) labels.insert(labels.end(), parts_[j], j);
  return labels;
}

std::string LabeledComposition::to_string() const { return join_parts(parts_); }

// YoungDiagram

YoungDiagram::YoungDiagram(Partition shape) : shape_(std::move(shape)) {
  if (shape_.size() < 1) throw ValidationError("empty Young diagram");
}

YoungDiagram YoungDiagram::trivial(int m) { return YoungDiagram({m}); }

YoungDiagram YoungDiagram::sign(int m) {
  return YoungDiagram(std::vector<int>(std::max(m, 0), 1));
}

// LabeledSetPartition

std::string LabeledSetPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += "|";
    out += std::to_string(labels_[i] + 1);
  }
  return out;
}

// Operations

std::vector<Partition> enumerate_partitions(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw SizeError("partition degree " + std::to_string(n) +
                    " outside [1, " + std::to_string(max_n) + "]");
  }
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first gives lexicographically descending order.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_rectangular(const YoungDiagram& d) {
  const auto& rows = d.rows();
  return std::adjacent_find(rows.begin(), rows.end(), std::not_equal_to<>()) ==
         rows.end();
}

BigInt dimension(const YoungDiagram& d) {
  const auto& rows = d.rows();
  std::vector<int> cols(rows.empty() ? 0 : rows.front(), 0);
  for (int r : rows) {
    for (int c = 0; c < r; ++c) ++cols[c];
  }
  BigInt hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      hooks *= (rows[i] - j - 1) + (cols[j] - static_cast<int>(i) - 1) + 1;
    }
  }
  return factorial(d.size()) / hooks;
}

BigInt index_p(const LabeledComposition& lambda) {
  return multinomial(lambda.size(), lambda.parts());
}

BigInt index_p(const Partition& lambda) {
  return multinomial(lambda.size(), lambda.parts());
}

Partition reduce_once(const LabeledComposition& lambda, int i) {
  if (i < 0 || i >= lambda.blocks()) {
    throw IndexError("block index " + std::to_string(i) + " out of range for " +
                     lambda.to_string());
  }
  std::vector<int> parts = lambda.parts();
  --parts[i];
  return Partition::canonical(parts);
}

Partition reduce_twice(const LabeledComposition& lambda, int i, int j) {
  for (int b : {i, j}) {
    if (b < 0 || b >= lambda.blocks()) {
      throw IndexError("block index " + std::to_string(b) +
                       " out of range for " + lambda.to_string());
    }
  }
  if (i == j && lambda[i] < 2) {
    throw PreconditionError("double reduction of block " + std::to_string(i) +
                            " needs size >= 2 in " + lambda.to_string());
  }
  std::vector<int> parts = lambda.parts();
  --parts[i];
  --parts[j];
  return Partition::canonical(parts);
}

ReducedIndices p_reduced(const LabeledComposition& lambda) {
  ReducedIndices out;
  const int k = lambda.blocks();
  out.single.reserve(k);
  for (int i = 0; i < k; ++i) out.single.push_back(index_p(reduce_once(lambda, i)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j && lambda[i] < 2) continue;
      out.pairs.emplace(std::pair{i, j}, index_p(reduce_twice(lambda, i, j)));
    }
  }
  return out;
}

std::vector<LabeledSetPartition> enumerate_cosets(
    const LabeledComposition& lambda, std::uint64_t max_cosets) {
  const BigInt count = index_p(lambda);
  if (count > max_cosets) {
    throw SizeError("coset count " + count.str() + " of " + lambda.to_string() +
                    " exceeds bound " + std::to_string(max_cosets));
  }
  std::vector<LabeledSetPartition> out;
  out.reserve(count.convert_to<std::size_t>());
  const std::vector<int> identity = lambda.identity_labels();
  std::vector<int> labels = identity;  // sorted, hence lexicographically first
  do {
    out.emplace_back(labels, labels == identity);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::vector<LabeledComposition> enumerate_compositions(int n) {
  if (n < 1) throw SizeError("composition degree must be positive");
  std::vector<LabeledComposition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace gentaut
