#pragma once

#include <string>
#include <vector>

#include "ratnc/types.hpp"

namespace ratnc {

// Set partition of [n], canonicalized: elements ascending within blocks,
// blocks ordered by minimum.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  static SetPartition singletons(int n);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[i]; }
  int block_index_of(int element) const;
  bool same_block(int x, int y) const {
    return block_index_of(x) == block_index_of(y);
  }

  bool is_noncrossing() const;
  SetPartition rotated(int shift = 1) const;   // i -> i + shift (mod n)
  SetPartition reflected() const;              // i -> n + 1 - i
  SetPartition reflected_fix_last() const;     // i -> n - i for i < n, n -> n

  bool operator==(const SetPartition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }
  bool operator<(const SetPartition& o) const { return blocks_ < o.blocks_; }
  std::string text() const;  // {1,2}|{3,6}|...

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> owner_;  // element -> block index
};

// Kreweras complement: the coarsest partition of the primed positions
// noncrossing with P, primes interleaved after their labels. Squares to the
// inverse rotation under this convention.
SetPartition kreweras(const SetPartition& p);  // throws not_noncrossing
SetPartition kreweras_inverse(const SetPartition& p);

bool mutually_noncrossing(const SetPartition& p1, const SetPartition& p2);

// All noncrossing partitions of [n], lexicographic on canonical block lists.
std::vector<SetPartition> all_noncrossing(int n);

}  // namespace ratnc
