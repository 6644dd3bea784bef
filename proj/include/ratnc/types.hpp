#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ratnc {

enum class errc {
  not_coprime,
  bad_length,
  bad_sum,
  below_diagonal,
  no_north_step,
  resource_limit,
  height_mismatch,
  not_member,
  would_cross,
  not_cover,
  bad_divisor,
  not_d_invariant,
  bad_profile,
  non_divisible,
  not_integer,
  wrong_shape,
  not_parking_function,
  unresolved_block,
  not_noncrossing,
  bad_input,
};

const char* errc_name(errc k);

class nc_error : public std::runtime_error {
 public:
  nc_error(errc kind, const std::string& msg, long long detail = 0)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg),
        kind_(kind),
        detail_(detail) {}
  errc kind() const { return kind_; }
  long long detail() const { return detail_; }

 private:
  errc kind_;
  long long detail_;
};

// Height a, width b of the lattice rectangle. gcd(a,b)=1 and b>=2 so the
// label set [b-1] is nonempty.
struct CoprimePair {
  int a;
  int b;

  CoprimePair(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 2) throw nc_error(errc::bad_input, "need a>=1, b>=2");
    if (std::gcd(a, b) != 1) throw nc_error(errc::not_coprime, "gcd(a,b) != 1");
  }
  bool operator==(const CoprimePair& o) const { return a == o.a && b == o.b; }
};

// Exact slope comparisons against a/b, no floating point anywhere.
inline bool below_slope(long long len, const CoprimePair& p) {
  return len * p.b < p.a;  // len < a/b
}
inline bool above_slope(long long len, const CoprimePair& p) {
  return len * p.b > p.a;  // len > a/b
}

long long checked_mul(long long x, long long y);
long long checked_add(long long x, long long y);

// C(n,k) as an exact integer; throws resource_limit on int64 overflow.
long long binomial(long long n, long long k);

// Cat(a,b) = C(a+b,a)/(a+b)
long long rational_catalan_count(const CoprimePair& p);

long long ipow(long long base, int exp);

}  // namespace ratnc
