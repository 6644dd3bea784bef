#include "ratnc/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ratnc {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw nc_error(errc::bad_input, "negative ground set");
  owner_.assign(n_ + 1, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw nc_error(errc::bad_input, "empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n_)
        throw nc_error(errc::bad_input, "element out of range");
      if (owner_[x] != -1)
        throw nc_error(errc::bad_input, "element in two blocks");
      owner_[x] = 0;  // mark, reindex below
    }
  }
  for (int x = 1; x <= n_; ++x)
    if (owner_[x] == -1)
      throw nc_error(errc::bad_input, "element not covered");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i)
    for (int x : blocks_[i]) owner_[x] = i;
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 1; i <= n; ++i) b.push_back({i});
  return SetPartition(n, std::move(b));
}

int SetPartition::block_index_of(int element) const {
  if (element < 1 || element > n_)
    throw nc_error(errc::bad_input, "element out of range");
  return owner_[element];
}

bool SetPartition::is_noncrossing() const {
  // balanced-parens scan: at each position the innermost open block must own it
  std::vector<int> stack;
  for (int x = 1; x <= n_; ++x) {
    int bi = owner_[x];
    if (blocks_[bi].front() == x) stack.push_back(bi);
    if (stack.empty() || stack.back() != bi) return false;
    if (blocks_[bi].back() == x) stack.pop_back();
  }
  return true;
}

SetPartition SetPartition::rotated(int shift) const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back((x - 1 + shift) % n_ + 1);
    out.push_back(std::move(nb));
  }
  return SetPartition(n_, std::move(out));
}

SetPartition SetPartition::reflected() const {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(n_ + 1 - x);
    out.push_back(std::move(nb));
  }
  return SetPartition(n_, std::move(out));
}

SetPartition SetPartition::reflected_fix_last() const {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(x == n_ ? n_ : n_ - x);
    out.push_back(std::move(nb));
  }
  return SetPartition(n_, std::move(out));
}

std::string SetPartition::text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    os << '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ',';
      os << blocks_[i][j];
    }
    os << '}';
  }
  return os.str();
}

namespace {

// Does some block of p have elements strictly on both sides of the chord
// between primed positions i+1/2 and j+1/2?  (i < j)
bool chord_separated(const SetPartition& p, int i, int j) {
  for (const auto& b : p.blocks()) {
    bool in = false, out = false;
    for (int x : b) {
      if (x > i && x <= j)
        in = true;
      else
        out = true;
    }
    if (in && out) return true;
  }
  return false;
}

}  // namespace

SetPartition kreweras(const SetPartition& p) {
  if (!p.is_noncrossing())
    throw nc_error(errc::not_noncrossing, "kreweras needs noncrossing input");
  int n = p.n();
  // primes i' and j' share a block iff no block of p separates them
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!chord_separated(p, i, j)) parent[find(i)] = find(j);
  std::vector<std::vector<int>> groups(n + 1);
  for (int i = 1; i <= n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(n, std::move(blocks));
}

SetPartition kreweras_inverse(const SetPartition& p) {
  // with this interleaving krew^2 = rot^{-1}, so krew^{-1} = krew o rot
  return kreweras(p.rotated(1));
}

bool mutually_noncrossing(const SetPartition& p1, const SetPartition& p2) {
  if (p1.n() != p2.n())
    throw nc_error(errc::bad_input, "ground sets differ");
  auto crosses = [](const SetPartition& a, const SetPartition& b) {
    for (const auto& ba : a.blocks()) {
      if (ba.size() < 2) continue;
      for (std::size_t t = 0; t + 1 < ba.size(); ++t) {
        int lo = ba[t], hi = ba[t + 1];
        for (const auto& bb : b.blocks()) {
          bool inside = false, outside = false;
          for (int x : bb) {
            if (x > lo && x < hi)
              inside = true;
            else if (x < lo || x > hi)
              outside = true;
          }
          if (inside && outside) return true;
        }
      }
    }
    return false;
  };
  return !crosses(p1, p2) && !crosses(p2, p1);
}

std::vector<SetPartition> all_noncrossing(int n) {
  // restricted growth strings, filtered
  std::vector<SetPartition> out;
  std::vector<int> rgs(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i > n) {
      std::vector<std::vector<int>> blocks(maxb + 1);
      for (int x = 1; x <= n; ++x) blocks[rgs[x]].push_back(x);
      SetPartition sp(n, std::move(blocks));
      if (sp.is_noncrossing()) out.push_back(std::move(sp));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  rgs[1] = 0;
  rec(2, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ratnc
