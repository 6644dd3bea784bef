#include "ratnc/labeled_pair.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace ratnc {

namespace {

// ---------------------------------------------------------------------------
// Exact geometry over Q[eps], eps an infinitesimal.  Labels are nudged down
// by eps to encode the convention that label i lies strictly below its own
// laser; every other coordinate is an exact rational.
// ---------------------------------------------------------------------------

struct Frac {
  long long n = 0, d = 1;
};

Frac make_frac(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min() ||
      d > std::numeric_limits<long long>::max())
    throw nc_error(errc::resource_limit, "geometry coordinates too large");
  return {static_cast<long long>(n), static_cast<long long>(d)};
}

Frac fsub(const Frac& a, const Frac& b) {
  return make_frac(static_cast<__int128>(a.n) * b.d -
                       static_cast<__int128>(b.n) * a.d,
                   static_cast<__int128>(a.d) * b.d);
}
Frac fmul(const Frac& a, const Frac& b) {
  return make_frac(static_cast<__int128>(a.n) * b.n,
                   static_cast<__int128>(a.d) * b.d);
}
int fsign(const Frac& a) { return a.n < 0 ? -1 : (a.n > 0 ? 1 : 0); }
int fcmp(const Frac& a, const Frac& b) { return fsign(fsub(a, b)); }

// value = r + e*eps
struct EFrac {
  Frac r, e;
};
int esign(const EFrac& a) {
  int s = fsign(a.r);
  return s != 0 ? s : fsign(a.e);
}
EFrac esub(const EFrac& a, const EFrac& b) {
  return {fsub(a.r, b.r), fsub(a.e, b.e)};
}
int ecmp(const EFrac& a, const EFrac& b) { return esign(esub(a, b)); }

struct Pt {
  Frac x;   // x never carries eps
  EFrac y;
};

Pt pt(long long x, long long y, long long eps_coeff = 0) {
  return {{x, 1}, {{y, 1}, {eps_coeff, 1}}};
}

// sign of cross(B-A, C-A)
int orient(const Pt& a, const Pt& b, const Pt& c) {
  Frac dx1 = fsub(b.x, a.x), dx2 = fsub(c.x, a.x);
  EFrac dy1 = esub(b.y, a.y), dy2 = esub(c.y, a.y);
  Frac r = fsub(fmul(dx1, dy2.r), fmul(dx2, dy1.r));
  Frac e = fsub(fmul(dx1, dy2.e), fmul(dx2, dy1.e));
  return esign({r, e});
}

bool between(const Frac& lo, const Frac& v, const Frac& hi) {
  return fcmp(lo, v) <= 0 && fcmp(v, hi) <= 0;
}
bool ebetween(const EFrac& lo, const EFrac& v, const EFrac& hi) {
  return ecmp(lo, v) <= 0 && ecmp(v, hi) <= 0;
}

// c collinear with (a,b) assumed; is c within the bounding box?
bool on_segment(const Pt& a, const Pt& b, const Pt& c) {
  Frac xlo = a.x, xhi = b.x;
  if (fcmp(xlo, xhi) > 0) std::swap(xlo, xhi);
  EFrac ylo = a.y, yhi = b.y;
  if (ecmp(ylo, yhi) > 0) std::swap(ylo, yhi);
  return between(xlo, c.x, xhi) && ebetween(ylo, c.y, yhi);
}

bool seg_intersect(const Pt& p1, const Pt& p2, const Pt& p3, const Pt& p4) {
  int d1 = orient(p3, p4, p1);
  int d2 = orient(p3, p4, p2);
  int d3 = orient(p1, p2, p3);
  int d4 = orient(p1, p2, p4);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(p3, p4, p1)) return true;
  if (d2 == 0 && on_segment(p3, p4, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, p3)) return true;
  if (d4 == 0 && on_segment(p1, p2, p4)) return true;
  return false;
}

struct LaserSeg {
  int source;
  Pt from, to;
};

std::vector<LaserSeg> laser_segments(const DyckPath& d) {
  const auto& p = d.pair();
  std::vector<LaserSeg> out;
  for (int i = 1; i <= p.b - 1; ++i) {
    if (!d.fires(i)) continue;
    int t = laser_target(d, i);
    long long hk = d.height(t + 1);
    // terminates where H_i + (a/b)(x - i) = H_{t+1}
    Frac xstar = make_frac(
        static_cast<__int128>(i) * p.a + static_cast<__int128>(p.b) * (hk - d.height(i)),
        p.a);
    out.push_back({i, pt(i, d.height(i)), Pt{xstar, {{hk, 1}, {0, 1}}}});
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

std::vector<std::vector<int>> uf_blocks(UnionFind& uf, int n) {
  std::vector<std::vector<int>> groups(n + 1);
  for (int i = 1; i <= n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  // canonical block order so parallel rank vectors line up
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace

bool visible(const DyckPath& d, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return true;
  Pt a = pt(i, d.height(i), -1);
  Pt b = pt(j, d.height(j), -1);
  // vertical walls strictly between the labels
  for (int m = i + 1; m < j; ++m) {
    if (d.height(m) == d.height(m + 1)) continue;
    if (seg_intersect(a, b, pt(m, d.height(m)), pt(m, d.height(m + 1))))
      return false;
  }
  // east steps overlapping the x-range
  for (int k = i + 1; k <= j; ++k) {
    if (seg_intersect(a, b, pt(k - 1, d.height(k)), pt(k, d.height(k))))
      return false;
  }
  for (const auto& ls : laser_segments(d))
    if (seg_intersect(a, b, ls.from, ls.to)) return false;
  return true;
}

LabeledPair pi_map(const DyckPath& d) {
  const auto& pr = d.pair();
  int n = pr.b - 1;

  // Q: labels joined to their laser targets
  UnionFind ufq(n);
  std::vector<int> target(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    if (!d.fires(i)) continue;
    target[i] = laser_target(d, i);
    ufq.unite(i, target[i]);
  }
  auto qblocks = uf_blocks(ufq, n);
  std::vector<long long> qranks;
  for (const auto& blk : qblocks) {
    long long rank = 0;
    int common = -1;
    for (int x : blk) {
      if (target[x] < 0) continue;
      if (common == -1)
        common = target[x];
      else if (common != target[x])
        throw std::logic_error("laser targets disagree within a Q block");
    }
    if (common != -1) rank = d.runs()[common];  // run above the west endpoint
    qranks.push_back(rank);
  }

  // P: visibility classes
  UnionFind ufp(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (visible(d, i, j)) ufp.unite(i, j);
  auto pblocks = uf_blocks(ufp, n);
  std::vector<long long> pranks;
  for (const auto& blk : pblocks)
    pranks.push_back(d.runs()[blk.front() - 1]);  // run before min(B)

  return LabeledPair(pr, SetPartition(n, std::move(pblocks)), std::move(pranks),
                     SetPartition(n, std::move(qblocks)), std::move(qranks));
}

LabeledPair::LabeledPair(CoprimePair pair, SetPartition p,
                         std::vector<long long> p_ranks, SetPartition q,
                         std::vector<long long> q_ranks)
    : pair_(pair),
      p_(std::move(p)),
      q_(std::move(q)),
      p_ranks_(std::move(p_ranks)),
      q_ranks_(std::move(q_ranks)) {
  if (p_.n() != pair_.b - 1 || q_.n() != pair_.b - 1)
    throw nc_error(errc::bad_input, "partitions must live on [b-1]");
  if (static_cast<int>(p_ranks_.size()) != p_.block_count() ||
      static_cast<int>(q_ranks_.size()) != q_.block_count())
    throw nc_error(errc::bad_input, "one rank per block required");
  for (long long r : p_ranks_)
    if (r < 0) throw nc_error(errc::bad_input, "negative rank");
  for (long long r : q_ranks_)
    if (r < 0) throw nc_error(errc::bad_input, "negative rank");
}

long long LabeledPair::rank_sum() const {
  long long s = 0;
  for (long long r : p_ranks_) s += r;
  for (long long r : q_ranks_) s += r;
  return s;
}

bool LabeledPair::operator<(const LabeledPair& o) const {
  if (!(p_ == o.p_)) return p_ < o.p_;
  if (p_ranks_ != o.p_ranks_) return p_ranks_ < o.p_ranks_;
  if (!(q_ == o.q_)) return q_ < o.q_;
  return q_ranks_ < o.q_ranks_;
}

std::string LabeledPair::text() const {
  auto side = [](const SetPartition& sp, const std::vector<long long>& ranks) {
    std::ostringstream os;
    for (int i = 0; i < sp.block_count(); ++i) {
      if (i) os << '|';
      os << '{';
      const auto& b = sp.block(i);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (j) os << ',';
        os << b[j];
      }
      os << "}:" << ranks[i];
    }
    return os.str();
  };
  return "P=" + side(p_, p_ranks_) + " Q=" + side(q_, q_ranks_);
}

RankSequences rank_sequences(const LabeledPair& pq) {
  int n = pq.pair().b - 1;
  RankSequences rs;
  rs.sp.assign(n + 1, 0);
  rs.sq.assign(n + 1, 0);
  for (int i = 0; i < pq.p().block_count(); ++i)
    rs.sp[pq.p().block(i).front()] = pq.p_rank(i);
  for (int i = 0; i < pq.q().block_count(); ++i)
    rs.sq[pq.q().block(i).back()] = pq.q_rank(i);
  rs.sp.erase(rs.sp.begin());  // 1-based to 0-based storage
  rs.sq.erase(rs.sq.begin());
  rs.runs.resize(pq.pair().b);
  rs.runs[0] = rs.sp[0];
  for (int k = 2; k <= n; ++k)
    rs.runs[k - 1] = std::max(rs.sp[k - 1], rs.sq[k - 2]);
  rs.runs[n] = rs.sq[n - 1];
  return rs;
}

std::vector<int> candidate_runs(const LabeledPair& pq) {
  auto rs = rank_sequences(pq);
  long long total = 0;
  std::vector<int> runs;
  runs.reserve(rs.runs.size());
  for (long long r : rs.runs) {
    total += r;
    runs.push_back(static_cast<int>(r));
  }
  if (total != pq.pair().a)
    throw nc_error(errc::height_mismatch,
                   "candidate path has height " + std::to_string(total));
  return runs;
}

DyckPath pair_to_path(const LabeledPair& pq) {
  return DyckPath(pq.pair(), candidate_runs(pq));
}

namespace {

LabeledPair relabel(const LabeledPair& pq,
                    const std::function<int(int)>& map_p,
                    const std::function<int(int)>& map_q) {
  auto apply = [](const SetPartition& sp, const std::vector<long long>& ranks,
                  const std::function<int(int)>& f) {
    std::vector<std::pair<std::vector<int>, long long>> items;
    for (int i = 0; i < sp.block_count(); ++i) {
      std::vector<int> nb;
      for (int x : sp.block(i)) nb.push_back(f(x));
      std::sort(nb.begin(), nb.end());
      items.emplace_back(std::move(nb), ranks[i]);
    }
    std::sort(items.begin(), items.end());
    std::vector<std::vector<int>> blocks;
    std::vector<long long> rk;
    for (auto& [b, r] : items) {
      blocks.push_back(std::move(b));
      rk.push_back(r);
    }
    return std::make_pair(SetPartition(sp.n(), std::move(blocks)),
                          std::move(rk));
  };
  auto [np, npr] = apply(pq.p(), pq.p_ranks(), map_p);
  auto [nq, nqr] = apply(pq.q(), pq.q_ranks(), map_q);
  return LabeledPair(pq.pair(), std::move(np), std::move(npr), std::move(nq),
                     std::move(nqr));
}

}  // namespace

LabeledPair shift_pair(const LabeledPair& pq, int m) {
  int n = pq.pair().b - 1;
  int s = ((m % n) + n) % n;
  auto f = [n, s](int x) { return (x - 1 + s) % n + 1; };
  return relabel(pq, f, f);
}

LabeledPair rotate_pair(const LabeledPair& pq, int m) {
  if (!is_realized(pq))
    throw nc_error(errc::not_member, "pair is not in NC(a,b)");
  return shift_pair(pq, m);
}

LabeledPair reflect_pair(const LabeledPair& pq) {
  if (!is_realized(pq))
    throw nc_error(errc::not_member, "pair is not in NC(a,b)");
  int n = pq.pair().b - 1;
  auto rfn = [n](int x) { return n + 1 - x; };
  auto rfn_q = [n](int x) { return x == n ? n : n - x; };
  return relabel(pq, rfn, rfn_q);
}

bool is_realized(const LabeledPair& pq) {
  try {
    DyckPath d(pq.pair(), candidate_runs(pq));
    return pi_map(d) == pq;
  } catch (const nc_error&) {
    return false;
  }
}

std::vector<LabeledPair> enumerate_nc(const CoprimePair& p, long long cap) {
  std::vector<LabeledPair> out;
  for_each_path(p, [&](const DyckPath& d) { out.push_back(pi_map(d)); }, cap);
  return out;
}

nlohmann::json pair_to_json(const LabeledPair& pq) {
  nlohmann::json j;
  j["a"] = pq.pair().a;
  j["b"] = pq.pair().b;
  auto side = [](const SetPartition& sp, const std::vector<long long>& ranks) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < sp.block_count(); ++i)
      arr.push_back({{"block", sp.block(i)}, {"rank", ranks[i]}});
    return arr;
  };
  j["P"] = side(pq.p(), pq.p_ranks());
  j["Q"] = side(pq.q(), pq.q_ranks());
  return j;
}

LabeledPair pair_from_json(const nlohmann::json& j) {
  try {
    CoprimePair pr(j.at("a").get<int>(), j.at("b").get<int>());
    auto side = [&](const char* key) {
      std::vector<std::vector<int>> blocks;
      std::vector<long long> ranks;
      for (const auto& item : j.at(key)) {
        blocks.push_back(item.at("block").get<std::vector<int>>());
        ranks.push_back(item.at("rank").get<long long>());
      }
      // ranks follow their blocks through canonical reordering
      std::vector<std::size_t> idx(blocks.size());
      std::iota(idx.begin(), idx.end(), 0);
      for (auto& b : blocks) std::sort(b.begin(), b.end());
      std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return blocks[x] < blocks[y];
      });
      std::vector<std::vector<int>> ob;
      std::vector<long long> orr;
      for (std::size_t i : idx) {
        ob.push_back(blocks[i]);
        orr.push_back(ranks[i]);
      }
      return std::make_pair(SetPartition(pr.b - 1, std::move(ob)),
                            std::move(orr));
    };
    auto [p, prk] = side("P");
    auto [q, qrk] = side("Q");
    return LabeledPair(pr, std::move(p), std::move(prk), std::move(q),
                       std::move(qrk));
  } catch (const nlohmann::json::exception& e) {
    throw nc_error(errc::bad_input, std::string("bad pair JSON: ") + e.what());
  }
}

}  // namespace ratnc
