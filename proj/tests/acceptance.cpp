// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ratnc/config12.hpp"
#include "ratnc/membership.hpp"
#include "ratnc/parking.hpp"
#include "ratnc/qpoly.hpp"
#include "ratnc/sieving.hpp"

using namespace ratnc;

namespace {

long long binom_ll(long long n, long long k) { return binomial(n, k); }

std::vector<CoprimePair> coprime_pairs_up_to(int max_sum) {
  std::vector<CoprimePair> out;
  for (int a = 1; a <= max_sum - 2; ++a)
    for (int b = 2; a + b <= max_sum; ++b)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

// all structural candidates (P, krew(P)) with nonnegative rank labelings
// summing to a, capped deterministically
long long sweep_candidates(const CoprimePair& pr, long long cap,
                           const std::function<void(const LabeledPair&)>& fn) {
  long long produced = 0;
  for (const auto& p : all_noncrossing(pr.b - 1)) {
    if (produced >= cap) break;
    SetPartition q = kreweras(p);
    int np = p.block_count(), nq = q.block_count();
    std::vector<long long> ranks(np + nq, 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
      if (produced >= cap) return;
      if (i == np + nq) {
        if (left != 0) return;
        ++produced;
        fn(LabeledPair(pr, p,
                       std::vector<long long>(ranks.begin(), ranks.begin() + np),
                       q,
                       std::vector<long long>(ranks.begin() + np, ranks.end())));
        return;
      }
      for (long long r = 0; r <= left; ++r) {
        ranks[i] = r;
        rec(i + 1, left - r);
      }
    };
    rec(0, pr.a);
  }
  return produced;
}

struct Criterion {
  int id;
  std::string label;
  std::function<bool(std::string&)> run;
};

bool seq_equals(const std::vector<long long>& v, const std::string& expect) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s == expect;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "enumeration counts for a+b <= 16", [](std::string& note) {
    int pairs = 0;
    for (const auto& pr : coprime_pairs_up_to(16)) {
      long long want = binom_ll(pr.a + pr.b, pr.a) / (pr.a + pr.b);
      long long got = 0;
      for_each_path(pr, [&](const DyckPath&) { ++got; });
      if (got != want) return false;
      ++pairs;
    }
    note = std::to_string(pairs) + " pairs";
    return true;
  }});

  criteria.push_back({2, "pi round trips", [](std::string& note) {
    long long objects = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {3, 5}, {5, 3}, {7, 4}, {4, 7}, {10, 7}}) {
      std::set<std::string> images;
      for (const auto& d : enumerate_paths(CoprimePair(a, b))) {
        LabeledPair pq = pi_map(d);
        if (!(pair_to_path(pq) == d)) return false;
        if (!images.insert(pq.text()).second) return false;  // injectivity
        if (!(pi_map(pair_to_path(pq)) == pq)) return false;
        ++objects;
      }
    }
    note = std::to_string(objects) + " objects";
    return true;
  }});

  criteria.push_back({3, "worked figures reproduce exactly", [](std::string&) {
    DyckPath fig1(CoprimePair(10, 7), {2, 1, 2, 2, 2, 0, 1});
    if (pi_map(fig1).text() !=
        "P={1,2}:2|{3,6}:2|{4}:2|{5}:2 Q={1}:1|{2,6}:1|{3,4,5}:0")
      return false;
    std::vector<std::pair<int, int>> lasers{{1, 1}, {2, 6}, {3, 5}, {4, 5}, {6, 6}};
    if (laser_set(fig1) != lasers) return false;
    DyckPath fig2(CoprimePair(10, 7), {3, 0, 2, 3, 0, 1, 1});
    auto rs = rank_sequences(pi_map(fig2));
    return seq_equals(rs.sp, "3,0,2,3,0,0") && seq_equals(rs.sq, "0,0,0,0,1,1");
  }});

  criteria.push_back({4, "rotation operator intertwines with rot^-1", [](std::string& note) {
    long long paths = 0;
    for (auto [a, b] :
         std::vector<std::pair<int, int>>{{7, 4}, {10, 7}, {7, 3}}) {
      for (const auto& d : enumerate_paths(CoprimePair(a, b))) {
        if (!(pi_map(d.rot_prime()) == shift_pair(pi_map(d), -1))) return false;
        DyckPath cur = d;
        for (int i = 0; i < b - 1; ++i) cur = cur.rot_prime();
        if (!(cur == d)) return false;
        ++paths;
      }
    }
    note = std::to_string(paths) + " paths";
    return true;
  }});

  criteria.push_back({5, "membership equals the path oracle", [](std::string& note) {
    // the paper's 7,4 non-member first
    LabeledPair bad(CoprimePair(7, 4), SetPartition(3, {{1, 3}, {2}}), {5, 1},
                    SetPartition(3, {{1, 2}, {3}}), {1, 0});
    auto v = check_member(bad);
    if (v.member || v.violated != 4 || is_realized(bad)) return false;
    long long candidates = 0, members = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {3, 5}, {5, 3}, {7, 4}, {4, 7}, {10, 7}}) {
      CoprimePair pr(a, b);
      bool ok = true;
      long long m = 0;
      candidates += sweep_candidates(pr, 100000, [&](const LabeledPair& c) {
        bool mine = check_member(c).member;
        if (mine != is_realized(c)) ok = false;
        m += mine;
      });
      if (!ok) return false;
      // candidate sweeps must rediscover every member they reach
      if (m > static_cast<long long>(enumerate_paths(pr).size())) return false;
      members += m;
    }
    note = std::to_string(candidates) + " candidates, " +
           std::to_string(members) + " members";
    return true;
  }});

  criteria.push_back({6, "merge closure with exact bookkeeping", [](std::string& note) {
    // worked p-merge instance
    DyckPath nonc(CoprimePair(10, 7), {3, 0, 2, 3, 0, 1, 1});
    LabeledPair pq = pi_map(nonc);
    LabeledPair merged = merge_p_blocks(pq, 0, 1);
    if (merged.text() !=
        "P={1,2,3,6}:5|{4,5}:3 Q={1}:0|{2}:0|{3,5}:1|{4}:0|{6}:1")
      return false;
    if (!(pair_to_path(merged).runs() ==
          std::vector<int>{5, 0, 0, 3, 0, 1, 1}))
      return false;
    // worked q-merge printed outcome (its stated target is not a cover, so
    // the bookkeeping is applied directly and must land in NC(10,7))
    auto q35 = resolve_q_block(pq, {3, 5});
    auto p36 = resolve_p_block(pq, 3);
    if (covers_q_block(pq, p36.index, q35.index)) return false;
    LabeledPair printed = absorb_q_bookkeeping(pq, p36.index, q35.index);
    if (printed.text() !=
        "P={1,2}:3|{3,6}:3|{4,5}:3 Q={1}:0|{2,6}:1|{3,5}:0|{4}:0")
      return false;
    if (!is_realized(printed)) return false;
    if (!(pair_to_path(printed).runs() ==
          std::vector<int>{3, 0, 3, 3, 0, 0, 1}))
      return false;
    long long merges = 0, absorbs = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{10, 7}, {7, 4}}) {
      for (const auto& d : enumerate_paths(CoprimePair(a, b))) {
        LabeledPair m = pi_map(d);
        for (int i = 0; i < m.p().block_count(); ++i) {
          for (int j = i + 1; j < m.p().block_count(); ++j) {
            try {
              LabeledPair r = merge_p_blocks(m, i, j);
              ++merges;
              if (!is_realized(r)) return false;
              if (r.rank_sum() != a) return false;
            } catch (const nc_error& e) {
              if (e.kind() != errc::would_cross) return false;
            }
          }
          for (int qj = 0; qj < m.q().block_count(); ++qj) {
            if (!covers_q_block(m, i, qj)) continue;
            LabeledPair r = absorb_q_block(m, i, qj);
            ++absorbs;
            if (!is_realized(r)) return false;
            if (r.p_rank(i) != m.p_rank(i) + m.q_rank(qj)) return false;
            if (r.q_rank(qj) != 0) return false;
          }
        }
      }
    }
    note = std::to_string(merges) + " merges, " + std::to_string(absorbs) +
           " absorbs";
    return true;
  }});

  criteria.push_back({7, "fixed point counts match the closed form", [](std::string& note) {
    if (count_fixed(CoprimePair(10, 7), 3).brute != 56) return false;
    if (count_fixed(CoprimePair(10, 7), 1).brute != 2) return false;
    int checks = 0;
    for (const auto& pr : coprime_pairs_up_to(14)) {
      for (int d = 1; d < pr.b - 1; ++d) {
        if ((pr.b - 1) % d != 0) continue;
        auto fc = count_fixed(pr, d);
        if (!fc.match()) return false;
        ++checks;
      }
    }
    note = std::to_string(checks) + " (pair,d) checks";
    return true;
  }});

  criteria.push_back({8, "S^d bijection with rotation equivariance", [](std::string& note) {
    // worked 11,7 example
    CoprimePair pr117(11, 7);
    DModSeq good{3, {0, 3, 0}, {0, 1, 1}};
    DModSeq noble = noble_conjugate(good, pr117);
    if (!(noble.p == std::vector<long long>{3, 0, 0} &&
          noble.q == std::vector<long long>{1, 1, 0}))
      return false;
    std::vector<long long> combined(3);
    for (int i = 0; i < 3; ++i)
      combined[i] = std::max(noble.p[i], noble.q[(i + 2) % 3]);
    if (!(combined == std::vector<long long>{3, 1, 1})) return false;
    if (!(l_map_runs(noble, pr117) ==
          std::vector<int>{3, 1, 1, 3, 1, 1, 1}))
      return false;
    long long checks = 0;
    for (const auto& pr : coprime_pairs_up_to(14)) {
      for (int d = 1; d < pr.b - 1; ++d) {
        if ((pr.b - 1) % d != 0) continue;
        auto fixed = enumerate_ncd(pr, d);
        std::set<std::string> images;
        for (const auto& pq : fixed) {
          DModSeq s = d_mod_sequences(pq, d);
          if (!is_good(s, pr)) return false;
          if (!(sd_inverse(s, pr) == pq)) return false;
          if (!(d_mod_sequences(shift_pair(pq, 1), d) == seq_rotate(s)))
            return false;
          std::string key;
          for (auto x : s.p) key += std::to_string(x) + ",";
          for (auto x : s.q) key += std::to_string(x) + ";";
          images.insert(key);
          ++checks;
        }
        if (images.size() != fixed.size()) return false;
        long long formula =
            binom_ll(static_cast<long long>(pr.a) * d / (pr.b - 1) + d, d);
        if (static_cast<long long>(fixed.size()) != formula) return false;
      }
    }
    note = std::to_string(checks) + " fixed points";
    return true;
  }});

  criteria.push_back({9, "cyclic sieving", [](std::string& note) {
    long long rows = 0;
    for (const auto& pr : coprime_pairs_up_to(13)) {
      for (const auto& row : verify_csp_catalan(pr)) {
        if (!row.match) return false;
        ++rows;
      }
    }
    for (auto [a, b] :
         std::vector<std::pair<int, int>>{{3, 5}, {5, 3}, {7, 4}, {4, 7}}) {
      CoprimePair pr(a, b);
      for (int k = 1; k <= a; ++k)
        for (const auto& row : verify_csp_narayana(pr, k)) {
          if (!row.match) return false;
          ++rows;
        }
      std::vector<long long> r(a, 0);
      std::function<bool(int, long long, long long)> rec =
          [&](int i, long long left, long long blocks) -> bool {
        if (i == a) {
          if (left != 0 || blocks > b) return true;
          for (const auto& row : verify_csp_kreweras(pr, r)) {
            if (!row.match) return false;
            ++rows;
          }
          return true;
        }
        for (long long v = 0; (i + 1) * v <= left; ++v) {
          r[i] = v;
          bool ok = rec(i + 1, left - (i + 1) * v, blocks + v);
          r[i] = 0;
          if (!ok) return false;
        }
        return true;
      };
      if (!rec(0, a, 0)) return false;
    }
    note = std::to_string(rows) + " evaluations";
    return true;
  }});

  criteria.push_back({10, "(1,2)-configuration bijection", [](std::string& note) {
    long long mapped = 0;
    for (int n : {3, 4, 5, 6}) {
      auto paths = enumerate_paths(CoprimePair(n + 1, n));
      auto configs = enumerate_configs(n);
      if (paths.size() != configs.size()) return false;
      std::set<Config12> image;
      for (const auto& d : paths) {
        Config12 c = to_config12(d);
        if (!(c == pair_to_config12(pi_map(d)))) return false;
        if (!image.insert(c).second) return false;
        if (!(config12_to_path(c) == d)) return false;
        Config12 rotated = rotate_config(c);
        if (!(rotated == pair_to_config12(shift_pair(pi_map(d), 1))))
          return false;
        ++mapped;
      }
      for (const auto& c : configs)
        if (!image.count(c)) return false;
    }
    // 7,6 instance via both routes (figure data not in the text corpus)
    DyckPath d76(CoprimePair(7, 6), {2, 2, 1, 1, 1, 0});
    if (!(to_config12(d76) == pair_to_config12(pi_map(d76)))) return false;
    if (!(config12_to_path(to_config12(d76)) == d76)) return false;
    note = std::to_string(mapped) + " paths";
    return true;
  }});

  criteria.push_back({11, "parking characters", [](std::string& note) {
    // worked 9,4 example vector
    LabeledPair base = pi_map(DyckPath(CoprimePair(9, 4), {3, 2, 2, 2}));
    ParkFn ex(base, {1, 3, 0, 2, 0, 0, 3, 1, 2});
    if (!(phi(ex) == std::vector<int>{2, 4, 1, 3, 1, 1, 4, 2, 3})) return false;
    long long sweeps = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {2, 3}, {3, 2}, {3, 4}, {4, 3}, {3, 5}, {5, 3}}) {
      CoprimePair pr(a, b);
      auto park = enumerate_park(pr);
      if (static_cast<long long>(park.size()) != ipow(b, a - 1)) return false;
      for (const auto& w : all_permutations(a))
        for (int d = 0; d <= b - 2; ++d) {
          long long brute = 0;
          for (const auto& pf : park)
            if (act(w, d, pf) == pf) ++brute;
          if (brute != character_formula(w, d, pr)) return false;
          ++sweeps;
        }
    }
    for (int q : {2, 3})
      for (int b : {3, 5})
        for (const auto& w : all_permutations(4))
          if (!eq7_identity(w, q, b).match()) return false;
    note = std::to_string(sweeps) + " (w,d) characters";
    return true;
  }});

  criteria.push_back({12, "q-analog polynomial sanity", [](std::string& note) {
    long long polys = 0;
    for (const auto& pr : coprime_pairs_up_to(13)) {
      QPoly cat = q_catalan(pr);  // construction asserts zero remainders
      for (long long c : cat.coeffs())
        if (c < 0) return false;
      if (cat.eval_at_one() != rational_catalan_count(pr)) return false;
      if (cat.degree() != (pr.a - 1) * (pr.b - 1)) return false;
      ++polys;
    }
    for (auto [a, b] :
         std::vector<std::pair<int, int>>{{3, 5}, {5, 3}, {7, 4}, {4, 7}}) {
      CoprimePair pr(a, b);
      std::map<long long, long long> by_k;
      std::map<std::vector<long long>, long long> by_r;
      for (const auto& pq : enumerate_nc(pr)) {
        ++by_k[positive_block_count(pq)];
        ++by_r[rank_profile(pq)];
      }
      for (int k = 1; k <= a; ++k) {
        QPoly nar = q_narayana(pr, k);
        for (long long c : nar.coeffs())
          if (c < 0) return false;
        if (nar.eval_at_one() != by_k[k]) return false;
        ++polys;
      }
      std::vector<long long> r(a, 0);
      std::function<bool(int, long long, long long)> rec =
          [&](int i, long long left, long long blocks) -> bool {
        if (i == a) {
          if (left != 0 || blocks > b) return true;
          QPoly kr = q_kreweras(pr, r);
          for (long long c : kr.coeffs())
            if (c < 0) return false;
          if (kr.eval_at_one() != by_r[r]) return false;
          ++polys;
          return true;
        }
        for (long long v = 0; (i + 1) * v <= left; ++v) {
          r[i] = v;
          bool ok = rec(i + 1, left - (i + 1) * v, blocks + v);
          r[i] = 0;
          if (!ok) return false;
        }
        return true;
      };
      if (!rec(0, a, 0)) return false;
    }
    note = std::to_string(polys) + " polynomials";
    return true;
  }});

  bool all_ok = true;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
              << c.label;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << " [" << ms << " ms]" << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
