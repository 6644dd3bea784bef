#include "ratnc/membership.hpp"

#include <algorithm>

namespace ratnc {

BlockRef resolve_p_block(const LabeledPair& pq, int min_element) {
  for (int i = 0; i < pq.p().block_count(); ++i)
    if (pq.p().block(i).front() == min_element) return {'P', i};
  throw nc_error(errc::unresolved_block,
                 "no P block with minimum " + std::to_string(min_element));
}

BlockRef resolve_q_block(const LabeledPair& pq, const std::vector<int>& block) {
  std::vector<int> key = block;
  std::sort(key.begin(), key.end());
  for (int i = 0; i < pq.q().block_count(); ++i)
    if (pq.q().block(i) == key) return {'Q', i};
  throw nc_error(errc::unresolved_block, "no such Q block");
}

namespace {

std::pair<int, int> interval(const SetPartition& sp, int i) {
  return {sp.block(i).front(), sp.block(i).back()};
}

}  // namespace

bool block_leq(const LabeledPair& pq, const BlockRef& bp, const BlockRef& b) {
  if (bp.side == 'P' && b.side == 'P') {
    auto [lo1, hi1] = interval(pq.p(), bp.index);
    auto [lo2, hi2] = interval(pq.p(), b.index);
    return lo2 <= lo1 && hi1 <= hi2;
  }
  if (bp.side == 'Q' && b.side == 'P') {
    auto [lo, hi] = interval(pq.p(), b.index);
    int mx = pq.q().block(bp.index).back();
    return lo <= mx && mx <= hi;
  }
  if (bp.side == 'Q' && b.side == 'Q') return bp.index == b.index;
  return false;
}

RankConditionReport rank_condition(const LabeledPair& pq, int p_index) {
  const auto& pr = pq.pair();
  auto [lo, hi] = interval(pq.p(), p_index);
  long long span = hi - lo + 1;
  long long achieved = 0;
  for (int i = 0; i < pq.p().block_count(); ++i) {
    auto [l2, h2] = interval(pq.p(), i);
    if (lo <= l2 && h2 <= hi) achieved += pq.p_rank(i);
  }
  for (int i = 0; i < pq.q().block_count(); ++i) {
    int mx = pq.q().block(i).back();
    if (lo <= mx && mx <= hi) achieved += pq.q_rank(i);
  }
  RankConditionReport rep;
  rep.block = {'P', p_index};
  rep.denom = pr.b;
  rep.lower_num = span * pr.a;
  rep.upper_num = (span + 1) * pr.a;
  rep.achieved = achieved;
  rep.holds = rep.lower_num <= achieved * pr.b &&
              achieved * pr.b <= rep.upper_num;
  return rep;
}

MemberVerdict check_member(const LabeledPair& pq) {
  const auto& pr = pq.pair();
  MemberVerdict v;
  if (pq.rank_sum() != pr.a) {
    v.violated = 1;
    return v;
  }
  for (int i = 0; i < pq.q().block_count(); ++i) {
    if (!below_slope(pq.q_rank(i), pr)) {
      v.violated = 2;
      v.block = "{" + std::to_string(pq.q().block(i).front()) + ",...}";
      return v;
    }
  }
  if (!pq.p().is_noncrossing() || !(kreweras(pq.p()) == pq.q())) {
    v.violated = 3;
    return v;
  }
  for (int m = 1; m <= pr.b - 1; ++m) {
    LabeledPair rotated = shift_pair(pq, m);
    for (int i = 0; i < rotated.p().block_count(); ++i) {
      auto rep = rank_condition(rotated, i);
      if (!rep.holds) {
        v.violated = 4;
        v.rotation = m;
        const auto& blk = rotated.p().block(i);
        std::string s = "{";
        for (std::size_t t = 0; t < blk.size(); ++t)
          s += (t ? "," : "") + std::to_string(blk[t]);
        v.block = s + "}";
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

LabeledPair merge_p_blocks(const LabeledPair& pq, int ia, int ib) {
  if (ia == ib) throw nc_error(errc::bad_input, "merge needs two blocks");
  if (!is_realized(pq))
    throw nc_error(errc::not_member, "merge requires a member pair");
  std::vector<std::vector<int>> blocks;
  std::vector<long long> ranks;
  std::vector<int> merged;
  for (int x : pq.p().block(ia)) merged.push_back(x);
  for (int x : pq.p().block(ib)) merged.push_back(x);
  std::sort(merged.begin(), merged.end());
  blocks.push_back(merged);
  ranks.push_back(pq.p_rank(ia) + pq.p_rank(ib));
  for (int i = 0; i < pq.p().block_count(); ++i) {
    if (i == ia || i == ib) continue;
    blocks.push_back(pq.p().block(i));
    ranks.push_back(pq.p_rank(i));
  }
  std::vector<std::size_t> idx(blocks.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return blocks[x].front() < blocks[y].front();
  });
  std::vector<std::vector<int>> ob;
  std::vector<long long> orr;
  for (std::size_t i : idx) {
    ob.push_back(blocks[i]);
    orr.push_back(ranks[i]);
  }
  SetPartition pprime(pq.p().n(), std::move(ob));
  if (!pprime.is_noncrossing())
    throw nc_error(errc::would_cross, "merged P blocks would cross");

  // Q' = krew(P'); a Q' block inherits the rank of the Q block sharing its
  // maximum, and gets 0 otherwise.
  SetPartition qprime = kreweras(pprime);
  std::vector<long long> qranks;
  for (int i = 0; i < qprime.block_count(); ++i) {
    int mx = qprime.block(i).back();
    long long r = 0;
    for (int j = 0; j < pq.q().block_count(); ++j)
      if (pq.q().block(j).back() == mx) r = pq.q_rank(j);
    qranks.push_back(r);
  }
  return LabeledPair(pq.pair(), std::move(pprime), std::move(orr),
                     std::move(qprime), std::move(qranks));
}

bool covers_q_block(const LabeledPair& pq, int p_index, int q_index) {
  BlockRef b{'P', p_index}, bp{'Q', q_index};
  if (!block_leq(pq, bp, b)) return false;
  // no strictly intermediate block; only P blocks can sit strictly between
  for (int i = 0; i < pq.p().block_count(); ++i) {
    if (i == p_index) continue;
    BlockRef c{'P', i};
    if (block_leq(pq, bp, c) && block_leq(pq, c, b)) return false;
  }
  return true;
}

LabeledPair absorb_q_bookkeeping(const LabeledPair& pq, int p_index,
                                 int q_index) {
  std::vector<long long> pr = pq.p_ranks();
  std::vector<long long> qr = pq.q_ranks();
  pr[p_index] += qr[q_index];
  qr[q_index] = 0;
  return LabeledPair(pq.pair(), pq.p(), std::move(pr), pq.q(), std::move(qr));
}

LabeledPair absorb_q_block(const LabeledPair& pq, int p_index, int q_index) {
  if (!is_realized(pq))
    throw nc_error(errc::not_member, "absorb requires a member pair");
  if (!covers_q_block(pq, p_index, q_index))
    throw nc_error(errc::not_cover, "P block does not cover the Q block");
  return absorb_q_bookkeeping(pq, p_index, q_index);
}

}  // namespace ratnc
