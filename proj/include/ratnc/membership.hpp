#pragma once

#include <string>
#include <vector>

#include "ratnc/labeled_pair.hpp"

namespace ratnc {

struct BlockRef {
  char side;  // 'P' or 'Q'
  int index;  // canonical block index on that side
};

BlockRef resolve_p_block(const LabeledPair& pq, int min_element);
BlockRef resolve_q_block(const LabeledPair& pq, const std::vector<int>& block);

// The partial order on blocks of a pair: P-interval containment, Q-max inside
// a P-interval, and Q-reflexivity.
bool block_leq(const LabeledPair& pq, const BlockRef& bprime,
               const BlockRef& b);

// Exact bounds of the rank condition for a P-block:
//   (max-min+1) a/b <= sum of ranks below <= (max-min+1) a/b + a/b,
// compared as integers after clearing the denominator b.
struct RankConditionReport {
  BlockRef block;
  long long lower_num, upper_num, denom;  // bounds as lower_num/denom etc.
  long long achieved;
  bool holds;
};
RankConditionReport rank_condition(const LabeledPair& pq, int p_index);

// The intrinsic membership test: ranks sum to a, Q ranks below a/b,
// Q = krew(P), and the rank condition for all P-blocks of every rotation.
struct MemberVerdict {
  bool member = false;
  int violated = 0;     // 1..4, 0 when member
  int rotation = 0;     // offending m for condition 4
  std::string block;    // offending block for condition 4
};
MemberVerdict check_member(const LabeledPair& pq);

// Lemma-level merge operations on members.
LabeledPair merge_p_blocks(const LabeledPair& pq, int p_index_a,
                           int p_index_b);
bool covers_q_block(const LabeledPair& pq, int p_index, int q_index);
LabeledPair absorb_q_block(const LabeledPair& pq, int p_index, int q_index);

// Rank bookkeeping of the q-merge alone (no cover check); exposed because the
// closure sweeps validate it against the membership oracle directly.
LabeledPair absorb_q_bookkeeping(const LabeledPair& pq, int p_index,
                                 int q_index);

}  // namespace ratnc
