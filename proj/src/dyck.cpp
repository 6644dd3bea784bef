#include "ratnc/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace ratnc {

const char* errc_name(errc k) {
  switch (k) {
    case errc::not_coprime: return "NotCoprime";
    case errc::bad_length: return "BadLength";
    case errc::bad_sum: return "BadSum";
    case errc::below_diagonal: return "BelowDiagonal";
    case errc::no_north_step: return "NoNorthStep";
    case errc::resource_limit: return "ResourceLimit";
    case errc::height_mismatch: return "HeightMismatch";
    case errc::not_member: return "NotMember";
    case errc::would_cross: return "WouldCross";
    case errc::not_cover: return "NotCover";
    case errc::bad_divisor: return "BadDivisor";
    case errc::not_d_invariant: return "NotDInvariant";
    case errc::bad_profile: return "BadProfile";
    case errc::non_divisible: return "NonDivisible";
    case errc::not_integer: return "NotInteger";
    case errc::wrong_shape: return "WrongShape";
    case errc::not_parking_function: return "NotParkingFunction";
    case errc::unresolved_block: return "UnresolvedBlock";
    case errc::not_noncrossing: return "NotNoncrossing";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

long long checked_mul(long long x, long long y) {
  __int128 r = static_cast<__int128>(x) * y;
  if (r > std::numeric_limits<long long>::max() ||
      r < std::numeric_limits<long long>::min())
    throw nc_error(errc::resource_limit, "integer overflow");
  return static_cast<long long>(r);
}

long long checked_add(long long x, long long y) {
  __int128 r = static_cast<__int128>(x) + y;
  if (r > std::numeric_limits<long long>::max() ||
      r < std::numeric_limits<long long>::min())
    throw nc_error(errc::resource_limit, "integer overflow");
  return static_cast<long long>(r);
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<long long>::max())
      throw nc_error(errc::resource_limit, "binomial overflow");
  }
  return static_cast<long long>(r);
}

long long rational_catalan_count(const CoprimePair& p) {
  // C(a+b,a) is divisible by a+b exactly when gcd(a,b)=1
  long long n = p.a + p.b;
  __int128 r = 1;
  long long k = std::min(p.a, p.b);
  const __int128 bound =
      static_cast<__int128>(std::numeric_limits<long long>::max()) * n;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > bound) throw nc_error(errc::resource_limit, "catalan overflow");
  }
  return static_cast<long long>(r / n);
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

DyckPath::DyckPath(CoprimePair pair, std::vector<int> runs)
    : pair_(pair), runs_(std::move(runs)) {
  if (static_cast<int>(runs_.size()) != pair_.b)
    throw nc_error(errc::bad_length, "expected " + std::to_string(pair_.b) +
                                         " runs, got " +
                                         std::to_string(runs_.size()));
  hsum_.assign(pair_.b + 1, 0);
  for (int k = 1; k <= pair_.b; ++k) {
    if (runs_[k - 1] < 0)
      throw nc_error(errc::bad_input, "negative run length");
    hsum_[k] = hsum_[k - 1] + runs_[k - 1];
  }
  if (hsum_[pair_.b] != pair_.a)
    throw nc_error(errc::bad_sum, "runs sum to " +
                                      std::to_string(hsum_[pair_.b]) +
                                      ", expected " + std::to_string(pair_.a));
  for (int k = 1; k < pair_.b; ++k) {
    // strictly above y = (a/b)x; equality impossible by coprimality
    if (hsum_[k] * pair_.b <= static_cast<long long>(pair_.a) * k)
      throw nc_error(errc::below_diagonal,
                     "prefix " + std::to_string(k) + " below diagonal", k);
  }
}

bool DyckPath::fires(int label) const {
  if (label < 1 || label > pair_.b - 1)
    throw nc_error(errc::bad_input, "label out of range");
  return runs_[label] > 0;  // run n_{label+1}
}

int laser_target(const DyckPath& d, int label) {
  const auto& p = d.pair();
  if (label < 1 || label > p.b - 1)
    throw nc_error(errc::bad_input, "label out of range");
  if (!d.fires(label))
    throw nc_error(errc::no_north_step,
                   "label " + std::to_string(label) + " fires no laser");
  long long hi = d.height(label);
  for (int k = label + 1; k <= p.b; ++k) {
    // laser height at x=k exceeds path height H_k
    if (d.height(k) * p.b < hi * p.b + static_cast<long long>(p.a) * (k - label))
      return k - 1;
  }
  throw std::logic_error("laser did not terminate");
}

std::vector<std::pair<int, int>> laser_set(const DyckPath& d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d.pair().b - 1; ++i)
    if (d.fires(i)) out.emplace_back(i, laser_target(d, i));
  return out;
}

std::vector<int> ne_to_runs(const std::string& steps) {
  std::vector<int> runs;
  int cur = 0;
  for (char c : steps) {
    if (c == 'N' || c == 'n') {
      ++cur;
    } else if (c == 'E' || c == 'e') {
      runs.push_back(cur);
      cur = 0;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw nc_error(errc::bad_input, "bad step char");
    }
  }
  if (cur != 0)
    throw nc_error(errc::bad_input, "path must end with an east step");
  return runs;
}

std::string runs_to_ne(const std::vector<int>& runs) {
  std::string s;
  for (int r : runs) {
    s.append(r, 'N');
    s.push_back('E');
  }
  return s;
}

std::string DyckPath::ne_string() const { return runs_to_ne(runs_); }

std::string DyckPath::runs_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) os << ',';
    os << runs_[i];
  }
  return os.str();
}

DyckPath DyckPath::transposed() const {
  // reflect about y = -x: reverse the step word and swap N and E
  std::string s = ne_string();
  std::reverse(s.begin(), s.end());
  for (char& c : s) c = (c == 'N') ? 'E' : 'N';
  return DyckPath(CoprimePair(pair_.b, pair_.a), ne_to_runs(s));
}

namespace {

// nonempty (north, east) run pairs: D = N^{i_1}E^{j_1} ... N^{i_m}E^{j_m}
struct RunPairs {
  std::vector<long long> n, e;
};

RunPairs to_pairs(const std::vector<int>& runs) {
  RunPairs rp;
  std::size_t k = 0;
  while (k < runs.size()) {
    long long ncnt = runs[k];
    long long ecnt = 1;
    ++k;
    while (k < runs.size() && runs[k] == 0) {
      ++ecnt;
      ++k;
    }
    rp.n.push_back(ncnt);
    rp.e.push_back(ecnt);
  }
  return rp;
}

std::vector<int> from_pairs(const RunPairs& rp) {
  std::vector<int> runs;
  for (std::size_t t = 0; t < rp.n.size(); ++t) {
    runs.push_back(static_cast<int>(rp.n[t]));
    for (long long j = 1; j < rp.e[t]; ++j) runs.push_back(0);
  }
  return runs;
}

}  // namespace

DyckPath DyckPath::rot_prime() const {
  RunPairs rp = to_pairs(runs_);
  std::size_t m = rp.n.size();
  if (m == 1) return *this;  // N^a E^b

  if (rp.e[0] > 1) {
    RunPairs out = rp;
    out.e[0] -= 1;
    out.e[m - 1] += 1;
    return DyckPath(pair_, from_pairs(out));
  }

  // j_1 = 1: fire the laser from the westernmost valley, which is label 1
  int target = laser_target(*this, 1);
  int estep = target + 1;  // global east step index hit
  // locate run k and step r within E^{j_k}
  std::size_t k = 0;
  long long acc = 0;
  long long r = 0;
  for (std::size_t t = 0; t < m; ++t) {
    if (estep <= acc + rp.e[t]) {
      k = t;
      r = estep - acc;
      break;
    }
    acc += rp.e[t];
  }
  RunPairs out;
  if (r == 1) {
    for (std::size_t t = 1; t + 1 <= k; ++t) {  // N^{i_2}E^{j_2}..N^{i_{k-1}}E^{j_{k-1}}
      out.n.push_back(rp.n[t]);
      out.e.push_back(rp.e[t]);
    }
    out.n.push_back(rp.n[0]);
    out.e.push_back(rp.e[k]);
    for (std::size_t t = k + 1; t < m; ++t) {
      out.n.push_back(rp.n[t]);
      out.e.push_back(rp.e[t]);
    }
    out.n.push_back(rp.n[k]);
    out.e.push_back(1);
  } else {
    for (std::size_t t = 1; t < k; ++t) {
      out.n.push_back(rp.n[t]);
      out.e.push_back(rp.e[t]);
    }
    out.n.push_back(rp.n[k]);
    out.e.push_back(r - 1);
    out.n.push_back(rp.n[0]);
    out.e.push_back(rp.e[k] - r + 1);
    for (std::size_t t = k + 1; t < m; ++t) {
      out.n.push_back(rp.n[t]);
      out.e.push_back(rp.e[t]);
    }
    out.e.back() += 1;
  }
  return DyckPath(pair_, from_pairs(out));
}

DyckPath DyckPath::rotated() const {
  // rot = rot'^{-1}; rot' has order dividing b-1 on paths
  DyckPath prev = *this;
  DyckPath cur = rot_prime();
  while (!(cur == *this)) {
    prev = cur;
    cur = cur.rot_prime();
  }
  return prev;
}

void for_each_path(const CoprimePair& p,
                   const std::function<void(const DyckPath&)>& fn,
                   long long cap) {
  if (rational_catalan_count(p) > cap)
    throw nc_error(errc::resource_limit, "path count exceeds cap");
  if (p.b > 10000)
    throw nc_error(errc::resource_limit, "width too large to enumerate");
  std::vector<int> runs(p.b, 0);
  long long a = p.a, b = p.b;
  std::function<void(int, long long)> rec = [&](int k, long long s) {
    if (k == b) {
      runs[k - 1] = static_cast<int>(a - s);
      fn(DyckPath(p, runs));
      return;
    }
    // prefix H_k must exceed a*k/b; a*k/b is never integral for 0<k<b
    long long lo = (a * k) / b + 1;
    long long need = lo - s;
    if (need < 0) need = 0;
    for (long long v = need; s + v <= a; ++v) {
      runs[k - 1] = static_cast<int>(v);
      rec(k + 1, s + v);
    }
  };
  rec(1, 0);
}

std::vector<DyckPath> enumerate_paths(const CoprimePair& p, long long cap) {
  std::vector<DyckPath> out;
  for_each_path(p, [&](const DyckPath& d) { out.push_back(d); }, cap);
  return out;
}

DyckPath parse_path(const std::string& text, const CoprimePair& p) {
  bool ne = text.find_first_of("NnEe") != std::string::npos;
  if (ne) return DyckPath(p, ne_to_runs(text));
  std::vector<int> runs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      runs.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw nc_error(errc::bad_input, "bad run vector: " + text);
    }
  }
  return DyckPath(p, runs);
}

std::vector<WeightedPoint> weight_labels(const std::string& steps,
                                         const CoprimePair& p) {
  std::vector<WeightedPoint> pts;
  long long x = 0, y = 0, w = 0;
  pts.push_back({x, y, w});
  for (char c : steps) {
    if (c == 'N' || c == 'n') {
      ++y;
      w += p.b;
    } else if (c == 'E' || c == 'e') {
      ++x;
      w -= p.a;
    } else {
      throw nc_error(errc::bad_input, "bad step char");
    }
    pts.push_back({x, y, w});
  }
  return pts;
}

std::size_t argmin_weight(const std::vector<WeightedPoint>& pts) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].w < pts[best].w) best = i;
  return best;
}

}  // namespace ratnc
