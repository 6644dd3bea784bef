#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ratnc/dyck.hpp"
#include "ratnc/partition.hpp"

namespace ratnc {

// The pair (P,Q) of rank-labeled partitions of [b-1].  Construction checks
// only structural validity (partitions of the same ground set, nonnegative
// ranks); membership in NC(a,b) is a separate question, because candidate
// pairs are first-class objects for the membership test.
class LabeledPair {
 public:
  LabeledPair(CoprimePair pair, SetPartition p, std::vector<long long> p_ranks,
              SetPartition q, std::vector<long long> q_ranks);

  const CoprimePair& pair() const { return pair_; }
  const SetPartition& p() const { return p_; }
  const SetPartition& q() const { return q_; }
  long long p_rank(int block_index) const { return p_ranks_[block_index]; }
  long long q_rank(int block_index) const { return q_ranks_[block_index]; }
  const std::vector<long long>& p_ranks() const { return p_ranks_; }
  const std::vector<long long>& q_ranks() const { return q_ranks_; }
  long long rank_sum() const;

  bool operator==(const LabeledPair& o) const {
    return pair_ == o.pair_ && p_ == o.p_ && q_ == o.q_ &&
           p_ranks_ == o.p_ranks_ && q_ranks_ == o.q_ranks_;
  }
  bool operator<(const LabeledPair& o) const;
  std::string text() const;

 private:
  CoprimePair pair_;
  SetPartition p_, q_;
  std::vector<long long> p_ranks_, q_ranks_;
};

// The laser construction: P from visibility classes, Q from shared laser
// targets, ranks from run lengths.
LabeledPair pi_map(const DyckPath& d);

struct RankSequences {
  std::vector<long long> sp;    // p_1..p_{b-1}
  std::vector<long long> sq;    // q_1..q_{b-1}
  std::vector<long long> runs;  // R(P,Q), length b
};
RankSequences rank_sequences(const LabeledPair& pq);

// Run vector R(P,Q) of the candidate lattice path; height_mismatch when the
// path would not reach (b,a).  The result may still dip below the diagonal
// for non-members.
std::vector<int> candidate_runs(const LabeledPair& pq);
DyckPath pair_to_path(const LabeledPair& pq);

// Label shift i -> i+m (mod b-1) on both partitions, ranks carried.  No
// membership requirement; used to materialize rotations of candidates.
LabeledPair shift_pair(const LabeledPair& pq, int m);

// Group actions on members (throw not_member otherwise).
LabeledPair rotate_pair(const LabeledPair& pq, int m = 1);
LabeledPair reflect_pair(const LabeledPair& pq);

// Path-existence oracle: candidate runs build a valid path whose pi image
// equals the pair.  Independent of the rank-condition characterization.
bool is_realized(const LabeledPair& pq);

std::vector<LabeledPair> enumerate_nc(const CoprimePair& p,
                                      long long cap = kDefaultPathCap);

nlohmann::json pair_to_json(const LabeledPair& pq);
LabeledPair pair_from_json(const nlohmann::json& j);

bool visible(const DyckPath& d, int i, int j);  // exposed for tests

}  // namespace ratnc
