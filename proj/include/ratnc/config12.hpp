#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratnc/labeled_pair.hpp"

namespace ratnc {

// Noncrossing (1,2)-configuration on [n-1]: disjoint balls and arcs, arcs
// pairwise noncrossing.  In bijection with (n+1,n)-Dyck paths.
struct Config12 {
  int n = 0;  // configurations live on [n-1]
  std::vector<int> balls;
  std::vector<std::pair<int, int>> arcs;  // (i, j) with i < j

  void canonicalize();
  bool operator==(const Config12& o) const {
    return n == o.n && balls == o.balls && arcs == o.arcs;
  }
  bool operator<(const Config12& o) const {
    return std::tie(balls, arcs) < std::tie(o.balls, o.arcs);
  }
  std::string text() const;
};

void validate_config(const Config12& c);  // disjointness and noncrossing

// Laser reading of a (n+1,n)-Dyck path: label i unmarked if it fires no
// laser, a ball when the laser is (i,i), an arc i-j otherwise.
Config12 to_config12(const DyckPath& d);  // wrong_shape unless a = b+1
// Partition reading of the same bijection, used as a cross-check.
Config12 pair_to_config12(const LabeledPair& pq);

DyckPath config12_to_path(const Config12& c);
Config12 rotate_config(const Config12& c);

std::vector<Config12> enumerate_configs(int n);

}  // namespace ratnc
