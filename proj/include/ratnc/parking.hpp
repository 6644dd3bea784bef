#pragma once

#include <string>
#include <vector>

#include "ratnc/labeled_pair.hpp"
#include "ratnc/partition.hpp"

namespace ratnc {

// Permutation of [a] in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // "2,3,1" or "(1 2 3)(4)" or "(1,2,3)"
  static Permutation parse(const std::string& text, int n);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  Permutation inverse() const;
  Permutation compose(const Permutation& other) const;  // this after other
  std::vector<std::vector<int>> cycles() const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  std::string text() const;

 private:
  std::vector<int> img_;
};

std::vector<Permutation> all_permutations(int n);

inline constexpr long long kDefaultParkCap = 1'000'000;

// An (a,b)-noncrossing parking function: a member pair plus a block labeling
// f that partitions [a] with |f(B)| = rank(B).
class ParkFn {
 public:
  ParkFn(LabeledPair base, std::vector<int> owner);

  const LabeledPair& base() const { return base_; }
  // owner[i-1] identifies the block containing label i: P blocks first in
  // canonical order, then Q blocks.
  const std::vector<int>& owner() const { return owner_; }
  std::vector<std::vector<int>> label_sets() const;  // per block handle
  bool operator==(const ParkFn& o) const {
    return base_ == o.base_ && owner_ == o.owner_;
  }
  bool operator<(const ParkFn& o) const;
  std::string text() const;

 private:
  LabeledPair base_;
  std::vector<int> owner_;
};

std::vector<ParkFn> enumerate_park(const CoprimePair& p,
                                   long long cap = kDefaultParkCap);

// (w, g^t) action: w permutes the labels inside f, g^t rotates the pair
// carrying f along.
ParkFn act(const Permutation& w, int t, const ParkFn& pf);

// Rational slope parking function p_i = min(B) or max(B)+1.
std::vector<int> phi(const ParkFn& pf);
ParkFn phi_inverse(const std::vector<int>& slope_pf, const CoprimePair& p);
bool is_rational_slope_pf(const std::vector<int>& v, const CoprimePair& p);

// Multiplicity of zeta^d as an eigenvalue of w on the reflection
// representation; q = (b-1)/gcd(d, b-1).
long long mult_root(const Permutation& w, int d, const CoprimePair& p);
long long character_formula(const Permutation& w, int d, const CoprimePair& p);
long long character_brute(const Permutation& w, int d, const CoprimePair& p,
                          long long cap = kDefaultParkCap);

// All e: [a] -> {0} u [b-1] with e(w(j)) = g^d e(j); count b^{r_q(w)}.
std::vector<std::vector<int>> equivariant_functions(
    const Permutation& w, int d, const CoprimePair& p,
    long long cap = kDefaultParkCap);

bool is_admissible(const SetPartition& sigma, const Permutation& w, int q);
std::vector<SetPartition> admissible_partitions(const Permutation& w, int q);
SetPartition fibers(const ParkFn& pf);

// Both sides of the fiber-count identity: sum over admissible partitions of
// (b-1)(b-1-q)...(b-1-(t-1)q) against b^{r_q(w)}.
struct Eq7Report {
  long long lhs, rhs;
  bool match() const { return lhs == rhs; }
};
Eq7Report eq7_identity(const Permutation& w, int q, int b);

}  // namespace ratnc
