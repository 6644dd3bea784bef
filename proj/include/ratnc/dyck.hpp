#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratnc/types.hpp"

namespace ratnc {

// An (a,b)-Dyck path stored as its vertical run vector (n_1,...,n_b), where
// n_k is the number of north steps immediately before the k-th east step.
// Valid paths satisfy sum n_k = a and stay strictly above y = (a/b)x:
// H_k * b > a * k for 1 <= k <= b-1, with H_k the k-th prefix sum.
class DyckPath {
 public:
  DyckPath(CoprimePair pair, std::vector<int> runs);

  const CoprimePair& pair() const { return pair_; }
  const std::vector<int>& runs() const { return runs_; }
  // H_k for k in [0,b]; H_0 = 0, H_b = a.
  long long height(int k) const { return hsum_[k]; }
  // Label k sits at lattice point (k, H_k) for k in [1, b-1].
  bool fires(int label) const;

  DyckPath transposed() const;
  DyckPath rot_prime() const;
  DyckPath rotated() const;  // rot = inverse of rot', i.e. rot'^(order-1)

  std::string ne_string() const;
  std::string runs_text() const;

  bool operator==(const DyckPath& o) const {
    return pair_ == o.pair_ && runs_ == o.runs_;
  }
  bool operator<(const DyckPath& o) const { return runs_ < o.runs_; }

 private:
  CoprimePair pair_;
  std::vector<int> runs_;
  std::vector<long long> hsum_;
};

// Laser fired from label i: slope a/b ray from (i, H_i), terminating on the
// interior of the east step whose west x-coordinate is the returned target.
int laser_target(const DyckPath& d, int label);  // throws no_north_step
std::vector<std::pair<int, int>> laser_set(const DyckPath& d);

inline constexpr long long kDefaultPathCap = 10'000'000;

// All (a,b)-Dyck paths in ascending lexicographic order of run vectors.
void for_each_path(const CoprimePair& p,
                   const std::function<void(const DyckPath&)>& fn,
                   long long cap = kDefaultPathCap);
std::vector<DyckPath> enumerate_paths(const CoprimePair& p,
                                      long long cap = kDefaultPathCap);

// Accepts "3,1,2,1" or "NNNENENNENE".
DyckPath parse_path(const std::string& text, const CoprimePair& p);

// Weight labels along an arbitrary NE step sequence: origin 0, east adds -a,
// north adds +b. Coprimality makes the minimum unique on the paths we use.
struct WeightedPoint {
  long long x, y, w;
};
std::vector<WeightedPoint> weight_labels(const std::string& steps,
                                         const CoprimePair& p);
std::size_t argmin_weight(const std::vector<WeightedPoint>& pts);

std::vector<int> ne_to_runs(const std::string& steps);
std::string runs_to_ne(const std::vector<int>& runs);

}  // namespace ratnc
