#pragma once

#include <vector>

#include "ratnc/labeled_pair.hpp"
#include "ratnc/membership.hpp"

namespace ratnc {

enum class BlockClass { central, wrapping, plain };

// Requires pq invariant under rot^d. Central: rot^d(B) = B. Wrapping: not
// central and [min,max] contains the whole <rot^d>-orbit of B.
BlockClass classify_block(const LabeledPair& pq, const BlockRef& ref, int d);

bool is_d_invariant(const LabeledPair& pq, int d);
std::vector<LabeledPair> enumerate_ncd(const CoprimePair& p, int d,
                                       long long cap = kDefaultPathCap);

struct DModSeq {
  int d;
  std::vector<long long> p, q;  // length d, 1-based values stored 0-based
  bool operator==(const DModSeq& o) const {
    return d == o.d && p == o.p && q == o.q;
  }
};

DModSeq d_mod_sequences(const LabeledPair& pq, int d);
DModSeq seq_rotate(const DModSeq& s, int times = 1);  // right cyclic shift

bool is_good(const DModSeq& s, const CoprimePair& pr);
bool is_very_good(const DModSeq& s, const CoprimePair& pr);
// Lattice path assembled from a very good pair; throws not_very_good via
// bad_input when the case split does not apply.
std::vector<int> l_map_runs(const DModSeq& s, const CoprimePair& pr);
bool is_noble_seq(const DModSeq& s, const CoprimePair& pr);

// A noble rotation of a good pair, located by the unique minimal-weight
// point of the doubled combined-run path.
DModSeq noble_conjugate(const DModSeq& s, const CoprimePair& pr);

// Inverse of d_mod_sequences on good pairs.
LabeledPair sd_inverse(const DModSeq& s, const CoprimePair& pr);

bool is_noble_pair(const LabeledPair& pq, int d);

struct FixedCount {
  long long brute, formula;
  bool match() const { return brute == formula; }
};

// |NC_d(a,b)| by filtered enumeration and by the closed form
// C(floor(ad/(b-1)) + d, d); accepts d = b-1, returning Cat(a,b).
FixedCount count_fixed(const CoprimePair& p, int d,
                       long long cap = kDefaultPathCap);

// Refinements: fixed pairs with a central block and p noncentral orbits,
// without a central block, and by full rank profile of noncentral orbits.
FixedCount count_fixed_central(const CoprimePair& p, int d, int orbits,
                               long long cap = kDefaultPathCap);
FixedCount count_fixed_nocentral(const CoprimePair& p, int d, int orbits,
                                 long long cap = kDefaultPathCap);
FixedCount count_fixed_profile(const CoprimePair& p, int d,
                               const std::vector<long long>& profile,
                               long long cap = kDefaultPathCap);

// #noncentral positive-rank block orbits by rank (index i-1 holds rank i).
std::vector<long long> orbit_rank_profile(const LabeledPair& pq, int d);
bool has_central_block(const LabeledPair& pq, int d);

}  // namespace ratnc
