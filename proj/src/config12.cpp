#include "ratnc/config12.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ratnc {

void Config12::canonicalize() {
  std::sort(balls.begin(), balls.end());
  for (auto& a : arcs)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(arcs.begin(), arcs.end());
}

std::string Config12::text() const {
  std::ostringstream os;
  os << "balls=";
  for (std::size_t i = 0; i < balls.size(); ++i)
    os << (i ? "," : "") << balls[i];
  os << " arcs=";
  for (std::size_t i = 0; i < arcs.size(); ++i)
    os << (i ? "," : "") << arcs[i].first << "-" << arcs[i].second;
  return os.str();
}

void validate_config(const Config12& c) {
  std::set<int> used;
  auto take = [&](int x) {
    if (x < 1 || x > c.n - 1)
      throw nc_error(errc::bad_input, "config element out of range");
    if (!used.insert(x).second)
      throw nc_error(errc::bad_input, "balls and arcs must be disjoint");
  };
  for (int b : c.balls) take(b);
  for (const auto& a : c.arcs) {
    if (a.first == a.second)
      throw nc_error(errc::bad_input, "degenerate arc");
    take(a.first);
    take(a.second);
  }
  for (std::size_t i = 0; i < c.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < c.arcs.size(); ++j) {
      auto [a1, a2] = c.arcs[i];
      auto [b1, b2] = c.arcs[j];
      if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2))
        throw nc_error(errc::bad_input, "crossing arcs");
    }
}

Config12 to_config12(const DyckPath& d) {
  const auto& p = d.pair();
  if (p.a != p.b + 1)
    throw nc_error(errc::wrong_shape, "config12 needs an (n+1,n)-Dyck path");
  Config12 c;
  c.n = p.b;
  for (int i = 1; i <= p.b - 1; ++i) {
    if (!d.fires(i)) continue;
    int t = laser_target(d, i);
    if (t == i)
      c.balls.push_back(i);
    else
      c.arcs.emplace_back(i, t);
  }
  c.canonicalize();
  validate_config(c);
  return c;
}

Config12 pair_to_config12(const LabeledPair& pq) {
  const auto& p = pq.pair();
  if (p.a != p.b + 1)
    throw nc_error(errc::wrong_shape, "config12 needs shape (n+1,n)");
  int n = p.b;
  Config12 c;
  c.n = n;
  std::set<std::pair<int, int>> arcs;
  for (int i = 0; i < pq.p().block_count(); ++i) {
    const auto& blk = pq.p().block(i);
    int from = blk.front() == 1 ? n - 1 : blk.front() - 1;
    int to = blk.back();
    if (from == to) continue;  // the full block wraps onto itself, no arc
    // a wrap arc can retrace another block's arc; the chord is drawn once
    arcs.insert({std::min(from, to), std::max(from, to)});
  }
  c.arcs.assign(arcs.begin(), arcs.end());
  for (int i = 0; i < pq.q().block_count(); ++i)
    if (pq.q_rank(i) > 0) {
      if (pq.q().block(i).size() != 1)
        throw std::logic_error("nontrivial Q blocks must be singletons here");
      c.balls.push_back(pq.q().block(i).front());
    }
  c.canonicalize();
  validate_config(c);
  return c;
}

DyckPath config12_to_path(const Config12& c) {
  validate_config(c);
  int n = c.n;
  CoprimePair pr(n + 1, n);
  // Q blocks: arc connectivity plus singletons; balls are the rank-1 blocks
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : c.arcs) parent[find(a.first)] = find(a.second);
  std::vector<std::vector<int>> groups(n);
  for (int x = 1; x <= n - 1; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> qblocks;
  for (auto& g : groups)
    if (!g.empty()) qblocks.push_back(std::move(g));
  std::sort(qblocks.begin(), qblocks.end());
  std::vector<long long> qranks;
  for (const auto& b : qblocks)
    qranks.push_back(b.size() == 1 && std::binary_search(c.balls.begin(),
                                                         c.balls.end(), b[0])
                         ? 1
                         : 0);
  SetPartition q(n - 1, qblocks);
  SetPartition p = kreweras_inverse(q);

  // P ranks are pinned by path validity: search the compositions and insist
  // on a unique member.
  long long remaining = (n + 1);
  for (long long r : qranks) remaining -= r;
  int k = p.block_count();
  std::vector<long long> pranks(k, 0);
  std::vector<LabeledPair> found;
  std::function<void(int, long long)> rec = [&](int i, long long left) {
    if (i == k) {
      if (left != 0) return;
      LabeledPair cand(pr, p, pranks, q, qranks);
      if (is_realized(cand)) found.push_back(cand);
      return;
    }
    for (long long r = 1; r <= left - (k - 1 - i); ++r) {
      pranks[i] = r;
      rec(i + 1, left - r);
    }
  };
  rec(0, remaining);
  if (found.size() != 1)
    throw nc_error(errc::not_parking_function,
                   "configuration does not determine a unique path");
  return pair_to_path(found.front());
}

Config12 rotate_config(const Config12& c) {
  Config12 out;
  out.n = c.n;
  int n = c.n - 1;  // elements live in [n]
  for (int b : c.balls) out.balls.push_back(b % n + 1);
  for (const auto& a : c.arcs)
    out.arcs.emplace_back(a.first % n + 1, a.second % n + 1);
  out.canonicalize();
  return out;
}

std::vector<Config12> enumerate_configs(int n) {
  // choose ball set and noncrossing arc set over [n-1], all disjoint
  int m = n - 1;
  std::vector<Config12> out;
  std::vector<int> state(m + 1, 0);  // 0 free, 1 ball, 2 arc endpoint
  std::vector<std::pair<int, int>> arcs;
  std::function<void(int)> rec = [&](int x) {
    if (x > m) {
      Config12 c;
      c.n = n;
      for (int i = 1; i <= m; ++i)
        if (state[i] == 1) c.balls.push_back(i);
      c.arcs = arcs;
      c.canonicalize();
      try {
        validate_config(c);
      } catch (const nc_error&) {
        return;
      }
      out.push_back(std::move(c));
      return;
    }
    if (state[x] != 0) {
      rec(x + 1);
      return;
    }
    state[x] = 0;  // unmarked
    rec(x + 1);
    state[x] = 1;  // ball
    rec(x + 1);
    state[x] = 0;
    for (int y = x + 1; y <= m; ++y) {
      if (state[y] != 0) continue;
      state[x] = state[y] = 2;
      arcs.emplace_back(x, y);
      rec(x + 1);
      arcs.pop_back();
      state[x] = state[y] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ratnc
