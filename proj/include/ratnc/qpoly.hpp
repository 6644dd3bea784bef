#pragma once

#include <functional>
#include <vector>

#include "ratnc/labeled_pair.hpp"

namespace ratnc {

// Integer-coefficient polynomial in q, ascending powers, exact arithmetic.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<long long> coeffs);
  static QPoly constant(long long c);
  static QPoly q_int(int n);        // [n]_q = 1 + q + ... + q^{n-1}
  static QPoly q_factorial(int n);  // [n]!_q
  static QPoly q_binomial(int n, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  long long coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }
  long long eval_at_one() const;
  bool is_zero() const { return c_.empty(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  // exact division; throws non_divisible when a remainder survives
  QPoly divided_by(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<long long> c_;
  void trim();
};

QPoly q_catalan(const CoprimePair& p);
QPoly q_narayana(const CoprimePair& p, int k);
QPoly q_kreweras(const CoprimePair& p, const std::vector<long long>& profile);

// m-th cyclotomic polynomial by recursive exact division, cached.
const QPoly& cyclotomic(int m);
// Independent route for tests: Moebius product formula.
QPoly cyclotomic_moebius(int m);

// X evaluated at the e-th power of a primitive m-th root of unity, computed
// in Z[q]/Phi_m; throws not_integer when the class has positive degree.
long long eval_at_root(const QPoly& x, int m, int e);

struct CspRow {
  int d;
  long long poly_value;
  long long fixed_count;
  bool match;
};

// One row per d in 0..b-2 comparing X(zeta^d) to the brute fixed count of
// rot^d on the filtered subset of NC(a,b).
std::vector<CspRow> csp_report(const CoprimePair& p, const QPoly& x,
                               const std::function<bool(const LabeledPair&)>& keep,
                               long long cap = kDefaultPathCap);
std::vector<CspRow> verify_csp_catalan(const CoprimePair& p,
                                       long long cap = kDefaultPathCap);
std::vector<CspRow> verify_csp_narayana(const CoprimePair& p, int k,
                                        long long cap = kDefaultPathCap);
std::vector<CspRow> verify_csp_kreweras(const CoprimePair& p,
                                        const std::vector<long long>& profile,
                                        long long cap = kDefaultPathCap);

// r_i = number of positive-rank blocks of rank i across P and Q.
std::vector<long long> rank_profile(const LabeledPair& pq);
// number of positive-rank blocks in total
long long positive_block_count(const LabeledPair& pq);

}  // namespace ratnc
