#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>

#include "oracles.hpp"
#include "ratnc/qpoly.hpp"
#include "ratnc/sieving.hpp"

using namespace ratnc;

TEST_CASE("q-integer building blocks") {
  CHECK(QPoly::q_int(4).coeffs() == std::vector<long long>{1, 1, 1, 1});
  CHECK(QPoly::q_int(0).is_zero());
  CHECK(QPoly::q_factorial(0) == QPoly::constant(1));
  CHECK(QPoly::q_factorial(3).coeffs() ==
        std::vector<long long>{1, 2, 2, 1});
  CHECK(QPoly::q_binomial(4, 2).coeffs() ==
        std::vector<long long>{1, 1, 2, 1, 1});
  CHECK(QPoly::q_binomial(4, 2).eval_at_one() == 6);
  CHECK(QPoly::q_binomial(3, 5).is_zero());
}

TEST_CASE("division guards") {
  CHECK_THROWS_AS(QPoly::q_int(5).divided_by(QPoly::q_int(3)), nc_error);
  CHECK(QPoly::q_int(6).divided_by(QPoly::q_int(3)).coeffs() ==
        std::vector<long long>{1, 0, 0, 1});
}

TEST_CASE("q-catalan basics") {
  QPoly cat35 = q_catalan(CoprimePair(3, 5));
  CHECK(cat35.eval_at_one() == 7);
  CHECK(cat35.degree() == 8);  // (a-1)(b-1)
  for (long long c : cat35.coeffs()) CHECK(c >= 0);
  QPoly cat107 = q_catalan(CoprimePair(10, 7));
  CHECK(cat107.eval_at_one() == 1144);
  CHECK(cat107.degree() == 54);
}

TEST_CASE("q-narayana splits the catalan count by block count") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{5, 3}, {3, 5}, {7, 4}}) {
    CoprimePair pr(a, b);
    long long total = 0;
    std::map<long long, long long> by_k;
    for (const auto& pq : enumerate_nc(pr)) ++by_k[positive_block_count(pq)];
    for (int k = 1; k <= a; ++k) {
      QPoly nar = q_narayana(pr, k);
      for (long long c : nar.coeffs()) CHECK(c >= 0);
      total += nar.eval_at_one();
      CHECK(nar.eval_at_one() == by_k[k]);
    }
    CHECK(total == oracle::binom(a + b, a) / (a + b));
  }
}

TEST_CASE("q-kreweras splits the catalan count by rank profile") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{7, 4}, {5, 3}}) {
    CoprimePair pr(a, b);
    std::map<std::vector<long long>, long long> by_profile;
    for (const auto& pq : enumerate_nc(pr)) ++by_profile[rank_profile(pq)];
    long long total = 0;
    // iterate all profiles with sum i*r_i = a and at most b blocks
    std::vector<long long> r(a, 0);
    std::function<void(int, long long, long long)> rec =
        [&](int i, long long left, long long k) {
          if (i == a) {
            if (left != 0 || k > b) return;
            QPoly kr = q_kreweras(pr, r);
            for (long long c : kr.coeffs()) CHECK(c >= 0);
            total += kr.eval_at_one();
            CHECK(kr.eval_at_one() == by_profile[r]);
            return;
          }
          for (long long v = 0; (i + 1) * v <= left; ++v) {
            r[i] = v;
            rec(i + 1, left - (i + 1) * v, k + v);
            r[i] = 0;
          }
        };
    rec(0, a, 0);
    CHECK(total == oracle::binom(a + b, a) / (a + b));
  }
}

TEST_CASE("profile guards") {
  CoprimePair pr(5, 3);
  CHECK_THROWS_AS(q_kreweras(pr, {1, 1, 1, 0, 0}), nc_error);  // sums to 6
  CHECK_THROWS_AS(q_kreweras(pr, {5, 0, 0, 0, 0}), nc_error);  // k > b
  CHECK_THROWS_AS(q_kreweras(pr, {1, 2}), nc_error);           // wrong length
}

TEST_CASE("cyclotomic polynomials, both routes") {
  CHECK(cyclotomic(1).coeffs() == std::vector<long long>{-1, 1});
  CHECK(cyclotomic(2).coeffs() == std::vector<long long>{1, 1});
  CHECK(cyclotomic(4).coeffs() == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic(6).coeffs() == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic(12).coeffs() == std::vector<long long>{1, 0, -1, 0, 1});
  for (int m = 1; m <= 16; ++m) CHECK(cyclotomic(m) == cyclotomic_moebius(m));
}

TEST_CASE("evaluation at roots of unity") {
  QPoly x({3, 1, 4, 1, 5});
  CHECK(eval_at_root(x, 5, 0) == 14);  // q = 1
  CHECK(eval_at_root(x, 1, 3) == 14);
  // x(-1) = 3 - 1 + 4 - 1 + 5
  CHECK(eval_at_root(x, 2, 1) == 10);
  // q + q^2 + q^3 + q^4 at a primitive 5th root is -1
  CHECK(eval_at_root(QPoly({0, 1, 1, 1, 1}), 5, 1) == -1);
  // 1 + q at i is not an integer
  CHECK_THROWS_AS(eval_at_root(QPoly({1, 1}), 4, 1), nc_error);
}

TEST_CASE("catalan evaluations meet fixed point counts") {
  QPoly cat35 = q_catalan(CoprimePair(3, 5));
  CHECK(eval_at_root(cat35, 4, 1) == count_fixed(CoprimePair(3, 5), 1).brute);
  QPoly cat107 = q_catalan(CoprimePair(10, 7));
  CHECK(eval_at_root(cat107, 6, 3) == 56);
  CHECK(eval_at_root(cat107, 2, 1) == 56);  // same root, lower order
}

TEST_CASE("csp reports for the spec's flavors") {
  for (const auto& row : verify_csp_catalan(CoprimePair(3, 5))) CHECK(row.match);
  for (int k = 1; k <= 4; ++k)
    for (const auto& row : verify_csp_narayana(CoprimePair(7, 4), k))
      CHECK(row.match);
  for (const auto& row :
       verify_csp_kreweras(CoprimePair(5, 3), {0, 1, 1, 0, 0}))
    CHECK(row.match);
}

TEST_CASE("kreweras sieving across every profile at (10,7)") {
  CoprimePair pr(10, 7);
  std::vector<long long> r(10, 0);
  long long profiles = 0;
  std::function<bool(int, long long, long long)> rec =
      [&](int i, long long left, long long blocks) -> bool {
    if (i == 10) {
      if (left != 0 || blocks > 7) return true;
      ++profiles;
      for (const auto& row : verify_csp_kreweras(pr, r))
        if (!row.match) return false;
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
  CHECK(rec(0, 10, 0));
  CHECK(profiles > 30);
}

TEST_CASE("second evaluation route agrees") {
  QPoly cat = q_catalan(CoprimePair(7, 4));
  for (int m : {2, 3, 4, 6, 12}) {
    QPoly phi = cyclotomic_moebius(m);
    for (int e = 0; e < m; ++e) {
      // reduce the residue-grouped vector against the moebius-route phi
      std::vector<long long> v(m, 0);
      for (int kk = 0; kk <= cat.degree(); ++kk)
        v[(static_cast<long long>(kk) * e) % m] += cat.coeff(kk);
      int dd = phi.degree();
      for (int i = m - 1; i >= dd; --i) {
        long long f = v[i];
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j) v[i - dd + j] -= f * phi.coeff(j);
      }
      bool integral = true;
      for (int i = 1; i < dd; ++i) integral = integral && v[i] == 0;
      if (integral) {
        CHECK(eval_at_root(cat, m, e) == v[0]);
      } else {
        CHECK_THROWS_AS(eval_at_root(cat, m, e), nc_error);
      }
    }
  }
}
