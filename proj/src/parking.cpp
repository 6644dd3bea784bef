#include "ratnc/parking.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ratnc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
      throw nc_error(errc::bad_input, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& text, int n) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos)
    throw nc_error(errc::bad_input, "empty permutation");
  if (text[first] == '(') {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::size_t i = first;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(')
        throw nc_error(errc::bad_input, "bad cycle notation");
      std::size_t close = text.find(')', i);
      if (close == std::string::npos)
        throw nc_error(errc::bad_input, "unclosed cycle");
      std::string body = text.substr(i + 1, close - i - 1);
      for (char& c : body)
        if (c == ',') c = ' ';
      std::istringstream is(body);
      std::vector<int> cyc;
      int v;
      while (is >> v) cyc.push_back(v);
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
        if (from < 1 || from > n)
          throw nc_error(errc::bad_input, "cycle element out of range");
        img[from - 1] = to;
      }
      i = close + 1;
    }
    return Permutation(std::move(img));
  }
  std::vector<int> img;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      img.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw nc_error(errc::bad_input, "bad one-line permutation");
    }
  }
  if (static_cast<int>(img.size()) != n)
    throw nc_error(errc::bad_input, "permutation length mismatch");
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[img_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[i - 1] = (*this)(other(i));
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<bool> seen(n() + 1, false);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int x = i;
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x);
      x = (*this)(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::text() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << img_[i];
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

ParkFn::ParkFn(LabeledPair base, std::vector<int> owner)
    : base_(std::move(base)), owner_(std::move(owner)) {
  int a = base_.pair().a;
  if (static_cast<int>(owner_.size()) != a)
    throw nc_error(errc::bad_input, "owner vector must cover [a]");
  int handles = base_.p().block_count() + base_.q().block_count();
  std::vector<long long> size(handles, 0);
  for (int h : owner_) {
    if (h < 0 || h >= handles)
      throw nc_error(errc::bad_input, "bad block handle");
    ++size[h];
  }
  for (int i = 0; i < base_.p().block_count(); ++i)
    if (size[i] != base_.p_rank(i))
      throw nc_error(errc::bad_input, "label set size must match P rank");
  for (int i = 0; i < base_.q().block_count(); ++i)
    if (size[base_.p().block_count() + i] != base_.q_rank(i))
      throw nc_error(errc::bad_input, "label set size must match Q rank");
}

std::vector<std::vector<int>> ParkFn::label_sets() const {
  int handles = base_.p().block_count() + base_.q().block_count();
  std::vector<std::vector<int>> out(handles);
  for (int i = 1; i <= base_.pair().a; ++i) out[owner_[i - 1]].push_back(i);
  return out;
}

bool ParkFn::operator<(const ParkFn& o) const {
  if (!(base_ == o.base_)) return base_ < o.base_;
  return owner_ < o.owner_;
}

std::string ParkFn::text() const {
  auto sets = label_sets();
  std::ostringstream os;
  os << base_.text() << " f=";
  for (std::size_t h = 0; h < sets.size(); ++h) {
    if (h) os << '|';
    os << '{';
    for (std::size_t j = 0; j < sets[h].size(); ++j)
      os << (j ? "," : "") << sets[h][j];
    os << '}';
  }
  return os.str();
}

std::vector<ParkFn> enumerate_park(const CoprimePair& p, long long cap) {
  long long total = 1;
  for (int i = 0; i < p.a - 1; ++i) {
    total = checked_mul(total, p.b);
    if (total > cap)
      throw nc_error(errc::resource_limit, "parking set exceeds cap");
  }
  std::vector<ParkFn> out;
  for (const auto& pq : enumerate_nc(p)) {
    // distribute [a] over the blocks respecting ranks, P blocks then Q
    std::vector<long long> want;
    for (int i = 0; i < pq.p().block_count(); ++i) want.push_back(pq.p_rank(i));
    for (int i = 0; i < pq.q().block_count(); ++i) want.push_back(pq.q_rank(i));
    std::vector<int> owner(p.a, -1);
    std::function<void(int)> rec = [&](int label) {
      if (label > p.a) {
        out.emplace_back(pq, owner);
        return;
      }
      for (std::size_t h = 0; h < want.size(); ++h) {
        if (want[h] == 0) continue;
        --want[h];
        owner[label - 1] = static_cast<int>(h);
        rec(label + 1);
        ++want[h];
      }
    };
    rec(1);
  }
  return out;
}

namespace {

// handle mapping induced by the label shift m on the base pair
ParkFn shift_parkfn(const ParkFn& pf, int m) {
  const auto& pq = pf.base();
  int n = pq.pair().b - 1;
  LabeledPair shifted = shift_pair(pq, m);
  int pcount = pq.p().block_count();
  auto map_handle = [&](int h) {
    if (h < pcount) {
      std::vector<int> img;
      for (int x : pq.p().block(h)) img.push_back((x - 1 + m % n + n) % n + 1);
      std::sort(img.begin(), img.end());
      for (int i = 0; i < shifted.p().block_count(); ++i)
        if (shifted.p().block(i) == img) return i;
    } else {
      std::vector<int> img;
      for (int x : pq.q().block(h - pcount))
        img.push_back((x - 1 + m % n + n) % n + 1);
      std::sort(img.begin(), img.end());
      for (int i = 0; i < shifted.q().block_count(); ++i)
        if (shifted.q().block(i) == img)
          return shifted.p().block_count() + i;
    }
    throw std::logic_error("shifted block not found");
  };
  std::vector<int> owner(pf.owner().size());
  for (std::size_t i = 0; i < owner.size(); ++i)
    owner[i] = map_handle(pf.owner()[i]);
  return ParkFn(std::move(shifted), std::move(owner));
}

}  // namespace

ParkFn act(const Permutation& w, int t, const ParkFn& pf) {
  if (w.n() != pf.base().pair().a)
    throw nc_error(errc::bad_input, "permutation degree must be a");
  ParkFn rotated = t == 0 ? pf : shift_parkfn(pf, t);
  // relabel: i lands where w sends it
  std::vector<int> owner(rotated.owner().size());
  for (int i = 1; i <= w.n(); ++i) owner[w(i) - 1] = rotated.owner()[i - 1];
  return ParkFn(rotated.base(), std::move(owner));
}

std::vector<int> phi(const ParkFn& pf) {
  const auto& pq = pf.base();
  int pcount = pq.p().block_count();
  std::vector<int> out(pq.pair().a);
  for (int i = 1; i <= pq.pair().a; ++i) {
    int h = pf.owner()[i - 1];
    if (h < pcount)
      out[i - 1] = pq.p().block(h).front();
    else
      out[i - 1] = pq.q().block(h - pcount).back() + 1;
  }
  return out;
}

bool is_rational_slope_pf(const std::vector<int>& v, const CoprimePair& p) {
  if (static_cast<int>(v.size()) != p.a) return false;
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  for (int i = 1; i <= p.a; ++i) {
    if (s[i - 1] < 1) return false;
    // p'_i <= (b/a)(i-1) + 1
    if (static_cast<long long>(s[i - 1] - 1) * p.a >
        static_cast<long long>(p.b) * (i - 1))
      return false;
  }
  return true;
}

ParkFn phi_inverse(const std::vector<int>& slope_pf, const CoprimePair& p) {
  if (!is_rational_slope_pf(slope_pf, p))
    throw nc_error(errc::not_parking_function,
                   "sorted sequence violates the slope condition");
  std::vector<int> runs(p.b, 0);
  for (int v : slope_pf) ++runs[v - 1];
  DyckPath d(p, runs);
  LabeledPair pq = pi_map(d);
  int pcount = pq.p().block_count();
  std::vector<int> owner(p.a, -1);
  for (int i = 1; i <= p.a; ++i) {
    int v = slope_pf[i - 1];
    bool placed = false;
    for (int h = 0; h < pcount && !placed; ++h)
      if (pq.p().block(h).front() == v && pq.p_rank(h) > 0) {
        owner[i - 1] = h;
        placed = true;
      }
    for (int h = 0; h < pq.q().block_count() && !placed; ++h)
      if (pq.q().block(h).back() + 1 == v && pq.q_rank(h) > 0) {
        owner[i - 1] = pcount + h;
        placed = true;
      }
    if (!placed)
      throw std::logic_error("slope value matches no ranked block");
  }
  return ParkFn(std::move(pq), std::move(owner));
}

long long mult_root(const Permutation& w, int d, const CoprimePair& p) {
  int order = p.b - 1;
  long long q = order / std::gcd(((d % order) + order) % order, order);
  auto cyc = w.cycles();
  if (q == 1) return static_cast<long long>(cyc.size()) - 1;
  long long count = 0;
  for (const auto& c : cyc)
    if (c.size() % q == 0) ++count;
  return count;
}

long long character_formula(const Permutation& w, int d,
                            const CoprimePair& p) {
  return ipow(p.b, static_cast<int>(mult_root(w, d, p)));
}

long long character_brute(const Permutation& w, int d, const CoprimePair& p,
                          long long cap) {
  long long fixed = 0;
  for (const auto& pf : enumerate_park(p, cap))
    if (act(w, d, pf) == pf) ++fixed;
  return fixed;
}

std::vector<std::vector<int>> equivariant_functions(const Permutation& w,
                                                    int d,
                                                    const CoprimePair& p,
                                                    long long cap) {
  int order = p.b - 1;
  long long q = order / std::gcd(((d % order) + order) % order, order);
  auto cyc = w.cycles();
  long long total = 1;
  for (const auto& c : cyc)
    if (c.size() % q == 0) {
      total = checked_mul(total, p.b);
      if (total > cap)
        throw nc_error(errc::resource_limit, "too many equivariant functions");
    }
  std::vector<std::vector<int>> out;
  std::vector<int> e(p.a + 1, 0);
  int dd = ((d % order) + order) % order;
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == cyc.size()) {
      out.emplace_back(e.begin() + 1, e.end());
      return;
    }
    const auto& c = cyc[ci];
    if (c.size() % q != 0) {
      for (int x : c) e[x] = 0;
      rec(ci + 1);
      return;
    }
    // one free choice per divisible cycle: 0 or any nonzero start value
    for (int x : c) e[x] = 0;
    rec(ci + 1);
    for (int v = 1; v <= order; ++v) {
      int cur = v;
      e[c[0]] = cur;
      for (std::size_t t = 1; t < c.size(); ++t) {
        // e(w(j)) = e(j) + d on nonzero values
        cur = (cur - 1 + dd) % order + 1;
        e[c[t]] = cur;
      }
      rec(ci + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i > n) {
      std::vector<std::vector<int>> blocks(maxb + 1);
      for (int x = 1; x <= n; ++x) blocks[rgs[x]].push_back(x);
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  rec(2, 0);
  return out;
}

}  // namespace

bool is_admissible(const SetPartition& sigma, const Permutation& w, int q) {
  auto apply = [&](const std::vector<int>& blk) {
    std::vector<int> img;
    for (int x : blk) img.push_back(w(x));
    std::sort(img.begin(), img.end());
    return img;
  };
  std::vector<std::vector<int>> blocks = sigma.blocks();
  std::sort(blocks.begin(), blocks.end());
  int fixed = 0;
  for (const auto& blk : blocks) {
    auto img = apply(blk);
    if (!std::binary_search(blocks.begin(), blocks.end(), img)) return false;
    if (img == blk) {
      ++fixed;
      continue;
    }
    // non-fixed: orbit must consist of q pairwise distinct blocks
    int orbit = 1;
    auto cur = img;
    while (cur != blk) {
      ++orbit;
      cur = apply(cur);
    }
    if (orbit != q) return false;
  }
  return fixed <= 1;
}

std::vector<SetPartition> admissible_partitions(const Permutation& w, int q) {
  std::vector<SetPartition> out;
  for (const auto& sigma : all_set_partitions(w.n()))
    if (is_admissible(sigma, w, q)) out.push_back(sigma);
  return out;
}

SetPartition fibers(const ParkFn& pf) {
  auto sets = pf.label_sets();
  std::vector<std::vector<int>> blocks;
  for (auto& s : sets)
    if (!s.empty()) blocks.push_back(std::move(s));
  return SetPartition(pf.base().pair().a, std::move(blocks));
}

Eq7Report eq7_identity(const Permutation& w, int q, int b) {
  if (q < 2) throw nc_error(errc::bad_input, "eq7 needs q >= 2");
  long long lhs = 0;
  for (const auto& sigma : admissible_partitions(w, q)) {
    // t = number of w-orbits of blocks of size q
    std::vector<std::vector<int>> blocks = sigma.blocks();
    std::sort(blocks.begin(), blocks.end());
    std::vector<bool> used(blocks.size(), false);
    long long t = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (used[i]) continue;
      std::vector<int> img;
      for (int x : blocks[i]) img.push_back(w(x));
      std::sort(img.begin(), img.end());
      if (img == blocks[i]) {
        used[i] = true;
        continue;
      }
      ++t;
      auto cur = blocks[i];
      do {
        auto it = std::lower_bound(blocks.begin(), blocks.end(), cur);
        used[it - blocks.begin()] = true;
        std::vector<int> nxt;
        for (int x : cur) nxt.push_back(w(x));
        std::sort(nxt.begin(), nxt.end());
        cur = nxt;
      } while (cur != blocks[i]);
    }
    long long prod = 1;
    for (long long j = 0; j < t; ++j)
      prod = checked_mul(prod, b - 1 - j * q);
    lhs = checked_add(lhs, prod);
  }
  long long r = 0;
  for (const auto& c : w.cycles())
    if (c.size() % q == 0) ++r;
  return {lhs, ipow(b, static_cast<int>(r))};
}

}  // namespace ratnc
