#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "oracles.hpp"
#include "ratnc/config12.hpp"

using namespace ratnc;

TEST_CASE("shape guard") {
  CHECK_THROWS_AS(to_config12(DyckPath(CoprimePair(3, 5), {1, 1, 0, 1, 0})),
                  nc_error);
}

TEST_CASE("maximal path maps to the empty configuration") {
  DyckPath mx(CoprimePair(5, 4), {5, 0, 0, 0});
  Config12 c = to_config12(mx);
  CHECK(c.balls.empty());
  CHECK(c.arcs.empty());
  CHECK(config12_to_path(c) == mx);
}

TEST_CASE("a 5,4 path with one arc and one ball") {
  DyckPath d(CoprimePair(5, 4), {2, 2, 1, 0});
  Config12 c = to_config12(d);
  CHECK(c.balls == std::vector<int>{2});
  CHECK(c.arcs == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(config12_to_path(c) == d);
}

TEST_CASE("laser route and partition route agree") {
  for (int n : {3, 4, 5, 6}) {
    for (const auto& d : enumerate_paths(CoprimePair(n + 1, n)))
      CHECK(to_config12(d) == pair_to_config12(pi_map(d)));
  }
}

TEST_CASE("bijection onto noncrossing (1,2)-configurations") {
  for (int n : {3, 4, 5, 6}) {
    auto paths = enumerate_paths(CoprimePair(n + 1, n));
    auto configs = enumerate_configs(n);
    CHECK(paths.size() == configs.size());  // both are Cat(n+1, n) = Cat(n)
    std::set<Config12> image;
    for (const auto& d : paths) {
      Config12 c = to_config12(d);
      CHECK(image.insert(c).second);
      CHECK(config12_to_path(c) == d);
    }
    for (const auto& c : configs) CHECK(image.count(c) == 1);
  }
}

TEST_CASE("classical catalan sizes") {
  CHECK(enumerate_configs(3).size() == 5);
  CHECK(enumerate_configs(4).size() == 14);
  CHECK(enumerate_configs(5).size() == 42);
}

TEST_CASE("rotation equivariance") {
  for (int n : {4, 5}) {
    for (const auto& d : enumerate_paths(CoprimePair(n + 1, n))) {
      LabeledPair pq = pi_map(d);
      Config12 lhs = pair_to_config12(shift_pair(pq, 1));
      Config12 rhs = rotate_config(pair_to_config12(pq));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("config validation") {
  Config12 bad;
  bad.n = 5;
  bad.balls = {2};
  bad.arcs = {{2, 3}};
  CHECK_THROWS_AS(validate_config(bad), nc_error);  // ball on an arc endpoint
  Config12 cross;
  cross.n = 6;
  cross.arcs = {{1, 3}, {2, 4}};
  CHECK_THROWS_AS(validate_config(cross), nc_error);
}

TEST_CASE("a 7,6 instance through both routes") {
  // stand-in for the printed 7,6 example: a path whose configuration has
  // both an arc and balls
  DyckPath d(CoprimePair(7, 6), {2, 2, 1, 1, 1, 0});
  Config12 c = to_config12(d);
  CHECK(c == pair_to_config12(pi_map(d)));
  CHECK(config12_to_path(c) == d);
  CHECK(!c.arcs.empty());
  CHECK(!c.balls.empty());
}
