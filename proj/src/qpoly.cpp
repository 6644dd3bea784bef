#include "ratnc/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ratnc {

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly::QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(long long c) {
  return QPoly(std::vector<long long>{c});
}

QPoly QPoly::q_int(int n) {
  if (n < 0) throw nc_error(errc::bad_input, "q_int of negative n");
  return QPoly(std::vector<long long>(n, 1));
}

QPoly QPoly::q_factorial(int n) {
  QPoly r = constant(1);
  for (int k = 1; k <= n; ++k) r = r * q_int(k);
  return r;
}

QPoly QPoly::q_binomial(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  return q_factorial(n).divided_by(q_factorial(k)).divided_by(
      q_factorial(n - k));
}

long long QPoly::eval_at_one() const {
  long long s = 0;
  for (long long c : c_) s = checked_add(s, c);
  return s;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(coeff(static_cast<int>(i)),
                       -o.coeff(static_cast<int>(i)));
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  }
  return QPoly(std::move(r));
}

QPoly QPoly::divided_by(const QPoly& o) const {
  if (o.is_zero()) throw nc_error(errc::bad_input, "division by zero poly");
  if (is_zero()) return QPoly();
  std::vector<long long> rem = c_;
  int dn = degree(), dd = o.degree();
  if (dn < dd) throw nc_error(errc::non_divisible, "degree too small");
  std::vector<long long> quot(dn - dd + 1, 0);
  long long lead = o.coeff(dd);
  for (int i = dn - dd; i >= 0; --i) {
    long long top = rem[i + dd];
    if (top % lead != 0)
      throw nc_error(errc::non_divisible, "leading coefficient remainder");
    long long f = top / lead;
    quot[i] = f;
    if (f != 0)
      for (int j = 0; j <= dd; ++j)
        rem[i + j] = checked_add(rem[i + j], -checked_mul(f, o.coeff(j)));
  }
  for (long long c : rem)
    if (c != 0) throw nc_error(errc::non_divisible, "nonzero remainder");
  return QPoly(std::move(quot));
}

QPoly q_catalan(const CoprimePair& p) {
  return QPoly::q_factorial(p.a + p.b)
      .divided_by(QPoly::q_factorial(p.a))
      .divided_by(QPoly::q_factorial(p.b))
      .divided_by(QPoly::q_int(p.a + p.b));
}

QPoly q_narayana(const CoprimePair& p, int k) {
  if (k < 1 || k > p.a)
    throw nc_error(errc::bad_input, "narayana needs 1 <= k <= a");
  return (QPoly::q_binomial(p.a, k) * QPoly::q_binomial(p.b - 1, k - 1))
      .divided_by(QPoly::q_int(p.a));
}

QPoly q_kreweras(const CoprimePair& p, const std::vector<long long>& profile) {
  if (static_cast<int>(profile.size()) != p.a)
    throw nc_error(errc::bad_profile, "profile must have length a");
  long long weighted = 0, k = 0;
  for (int i = 0; i < p.a; ++i) {
    if (profile[i] < 0) throw nc_error(errc::bad_profile, "negative entry");
    weighted += static_cast<long long>(i + 1) * profile[i];
    k += profile[i];
  }
  if (weighted != p.a)
    throw nc_error(errc::bad_profile, "ranks must sum to a");
  if (k > p.b) throw nc_error(errc::bad_profile, "more blocks than b allows");
  QPoly x = QPoly::q_factorial(p.b - 1);
  for (int i = 0; i < p.a; ++i)
    x = x.divided_by(QPoly::q_factorial(static_cast<int>(profile[i])));
  return x.divided_by(QPoly::q_factorial(static_cast<int>(p.b - k)));
}

const QPoly& cyclotomic(int m) {
  static std::map<int, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw nc_error(errc::bad_input, "cyclotomic order must be >= 1");
  std::function<const QPoly&(int)> get = [&](int n) -> const QPoly& {
    auto found = cache.find(n);
    if (found != cache.end()) return found->second;
    std::vector<long long> xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    QPoly num(std::move(xn));  // q^n - 1
    for (int d = 1; d < n; ++d)
      if (n % d == 0) num = num.divided_by(get(d));
    return cache.emplace(n, std::move(num)).first->second;
  };
  return get(m);
}

namespace {

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

QPoly cyclotomic_moebius(int m) {
  // Phi_m = prod_{d|m} (q^{m/d} - 1)^{mu(d)}
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    std::vector<long long> c(m / d + 1, 0);
    c[0] = -1;
    c[m / d] = 1;
    QPoly f(std::move(c));
    if (mu == 1)
      num = num * f;
    else
      den = den * f;
  }
  return num.divided_by(den);
}

long long eval_at_root(const QPoly& x, int m, int e) {
  if (m < 1) throw nc_error(errc::bad_input, "root order must be >= 1");
  std::vector<long long> v(m, 0);
  for (int k = 0; k <= x.degree(); ++k) {
    int idx = static_cast<int>((static_cast<long long>(k) * e) % m);
    v[idx] = checked_add(v[idx], x.coeff(k));
  }
  // reduce modulo Phi_m over Z
  const QPoly& phi = cyclotomic(m);
  int dd = phi.degree();
  for (int i = m - 1; i >= dd; --i) {
    long long f = v[i];
    if (f == 0) continue;
    // Phi_m is monic
    for (int j = 0; j <= dd; ++j)
      v[i - dd + j] = checked_add(v[i - dd + j], -checked_mul(f, phi.coeff(j)));
  }
  for (int i = 1; i < dd; ++i)
    if (i < static_cast<int>(v.size()) && v[i] != 0)
      throw nc_error(errc::not_integer,
                     "evaluation is not a rational integer");
  return v.empty() ? 0 : v[0];
}

std::vector<long long> rank_profile(const LabeledPair& pq) {
  std::vector<long long> r(pq.pair().a, 0);
  for (long long v : pq.p_ranks())
    if (v > 0) r[v - 1] += 1;
  for (long long v : pq.q_ranks())
    if (v > 0) r[v - 1] += 1;
  return r;
}

long long positive_block_count(const LabeledPair& pq) {
  long long k = 0;
  for (long long v : pq.p_ranks()) k += v > 0;
  for (long long v : pq.q_ranks()) k += v > 0;
  return k;
}

std::vector<CspRow> csp_report(
    const CoprimePair& p, const QPoly& x,
    const std::function<bool(const LabeledPair&)>& keep, long long cap) {
  std::vector<LabeledPair> members;
  for_each_path(p,
                [&](const DyckPath& dp) {
                  LabeledPair pq = pi_map(dp);
                  if (keep(pq)) members.push_back(std::move(pq));
                },
                cap);
  int order = p.b - 1;
  std::vector<CspRow> rows;
  for (int d = 0; d <= order - 1; ++d) {
    long long pv = eval_at_root(x, order, d);
    long long fixed = 0;
    for (const auto& m : members)
      if (shift_pair(m, d) == m) ++fixed;
    rows.push_back({d, pv, fixed, pv == fixed});
  }
  return rows;
}

std::vector<CspRow> verify_csp_catalan(const CoprimePair& p, long long cap) {
  return csp_report(p, q_catalan(p), [](const LabeledPair&) { return true; },
                    cap);
}

std::vector<CspRow> verify_csp_narayana(const CoprimePair& p, int k,
                                        long long cap) {
  return csp_report(
      p, q_narayana(p, k),
      [k](const LabeledPair& pq) { return positive_block_count(pq) == k; },
      cap);
}

std::vector<CspRow> verify_csp_kreweras(const CoprimePair& p,
                                        const std::vector<long long>& profile,
                                        long long cap) {
  return csp_report(
      p, q_kreweras(p, profile),
      [&profile](const LabeledPair& pq) { return rank_profile(pq) == profile; },
      cap);
}

}  // namespace ratnc
