#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ratnc/config12.hpp"
#include "ratnc/membership.hpp"
#include "ratnc/parking.hpp"
#include "ratnc/qpoly.hpp"
#include "ratnc/render.hpp"
#include "ratnc/sieving.hpp"

using namespace ratnc;

namespace {

int thread_budget() {
  const char* env = std::getenv("THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  return t > 1 ? t : 1;
}

struct Out {
  std::string path;
  std::ofstream file;
  std::ostream& stream() {
    if (!path.empty() && !file.is_open()) {
      file.open(path);
      if (!file) throw nc_error(errc::bad_input, "cannot open " + path);
    }
    return file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  }
};

std::string pair_line(const LabeledPair& pq) {
  return pair_to_json(pq).dump();
}

LabeledPair parse_pair_arg(const std::string& json, const CoprimePair& pr) {
  LabeledPair pq =
      pair_from_json(nlohmann::json::parse(json, nullptr, false));
  if (!(pq.pair() == pr))
    throw nc_error(errc::bad_input, "pair JSON disagrees with A B arguments");
  return pq;
}

std::string csp_tsv(const std::vector<CspRow>& rows, bool* all_match) {
  std::ostringstream os;
  os << "d\tformula_value\tbrute_count\tmatch\n";
  *all_match = true;
  for (const auto& r : rows) {
    os << r.d << '\t' << r.poly_value << '\t' << r.fixed_count << '\t'
       << (r.match ? "true" : "false") << '\n';
    *all_match = *all_match && r.match;
  }
  return os.str();
}

// deterministic map over an index range, optionally threaded
template <typename F>
void indexed_parallel(int count, F&& fn) {
  int threads = std::min(thread_budget(), count > 0 ? count : 1);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    futs.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    }));
  for (auto& f : futs) f.get();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"rational noncrossing partitions toolkit"};
  app.require_subcommand(1);

  int A = 0, B = 0, D = 0, N = 0;
  std::string path_text, pair_json, render = "ascii", format = "jsonl";
  std::string out_path, kreweras_profile;
  long long limit = -1;
  int narayana_k = 0, char_d = 0;
  bool dihedral = false, park_verify = false;

  auto* en = app.add_subcommand("enumerate", "all of NC(A,B) in canonical order");
  en->add_option("A", A)->required();
  en->add_option("B", B)->required();
  en->add_option("--format", format)->check(CLI::IsMember({"jsonl", "tsv"}));
  en->add_option("--limit", limit);
  en->add_option("--out", out_path);

  auto* sh = app.add_subcommand("show", "path diagram with labels and lasers");
  sh->add_option("A", A)->required();
  sh->add_option("B", B)->required();
  sh->add_option("--path", path_text)->required();
  sh->add_option("--render", render)->check(CLI::IsMember({"ascii", "svg"}));
  sh->add_option("--out", out_path);

  auto* me = app.add_subcommand("member", "membership verdict with diagnostic");
  me->add_option("A", A)->required();
  me->add_option("B", B)->required();
  me->add_option("--pair", pair_json)->required();
  me->add_option("--out", out_path);

  auto* orb = app.add_subcommand("orbit", "rotation or dihedral orbit");
  orb->add_option("A", A)->required();
  orb->add_option("B", B)->required();
  orb->add_option("--pair", pair_json)->required();
  orb->add_flag("--dihedral", dihedral);
  orb->add_option("--out", out_path);

  auto* fx = app.add_subcommand("fixed", "rot^D fixed points: formula and brute");
  fx->add_option("A", A)->required();
  fx->add_option("B", B)->required();
  fx->add_option("D", D)->required();
  fx->add_option("--out", out_path);

  auto* csp = app.add_subcommand("csp", "cyclic sieving verification sweep");
  csp->add_option("A", A)->required();
  csp->add_option("B", B)->required();
  auto* nopt = csp->add_option("--narayana", narayana_k);
  auto* kopt = csp->add_option("--kreweras", kreweras_profile);
  nopt->excludes(kopt);
  csp->add_option("--out", out_path);

  auto* pk = app.add_subcommand("park", "parking function characters");
  pk->add_option("A", A)->required();
  pk->add_option("B", B)->required();
  std::vector<std::string> char_args;
  auto* copt = pk->add_option("--char", char_args,
                              "permutation (one-line or cycles) and d")
                   ->expected(2);
  auto* vopt = pk->add_flag("--verify", park_verify);
  copt->excludes(vopt);
  pk->add_option("--out", out_path);

  auto* cf = app.add_subcommand("config12", "the (N+1,N) bijection dump");
  cf->add_option("N", N)->required();
  cf->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Out out;
  out.path = out_path;

  if (en->parsed()) {
    CoprimePair pr(A, B);
    auto& os = out.stream();
    long long count = 0;
    if (format == "tsv") os << "runs\tP\tQ\n";
    struct enough {};
    try {
      for_each_path(pr, [&](const DyckPath& d) {
        if (limit >= 0 && count >= limit) throw enough{};
        ++count;
        LabeledPair pq = pi_map(d);
        if (format == "tsv") {
          std::string t = pq.text();
          auto sp = t.find(" Q=");
          os << d.runs_text() << '\t' << t.substr(2, sp - 2) << '\t'
             << t.substr(sp + 3) << '\n';
        } else {
          os << pair_line(pq) << '\n';
        }
      });
    } catch (const enough&) {
    }
    return 0;
  }

  if (sh->parsed()) {
    CoprimePair pr(A, B);
    DyckPath d = parse_path(path_text, pr);
    out.stream() << (render == "svg" ? svg_diagram(d) : ascii_diagram(d));
    std::ostringstream ls;
    ls << "lasers=";
    auto lset = laser_set(d);
    for (std::size_t i = 0; i < lset.size(); ++i)
      ls << (i ? "," : "") << "(" << lset[i].first << "," << lset[i].second
         << ")";
    if (out.path.empty())
      out.stream() << ls.str() << '\n' << pair_line(pi_map(d)) << '\n';
    else
      std::cout << ls.str() << '\n' << pair_line(pi_map(d)) << '\n';
    return 0;
  }

  if (me->parsed()) {
    CoprimePair pr(A, B);
    LabeledPair pq = pair_from_json(nlohmann::json::parse(pair_json, nullptr,
                                                          false));
    auto v = check_member(pq);
    auto& os = out.stream();
    if (v.member) {
      os << "member=true witness=" << pair_to_path(pq).runs_text() << '\n';
    } else {
      os << "member=false condition=" << v.violated;
      if (v.violated == 4)
        os << " rotation=" << v.rotation << " block=" << v.block;
      os << '\n';
    }
    return 0;
  }

  if (orb->parsed()) {
    CoprimePair pr(A, B);
    LabeledPair pq = pair_from_json(nlohmann::json::parse(pair_json, nullptr,
                                                          false));
    if (!is_realized(pq)) throw nc_error(errc::not_member, "not in NC(a,b)");
    auto& os = out.stream();
    std::vector<LabeledPair> orbit;
    auto push_unique = [&](const LabeledPair& x) {
      for (const auto& y : orbit)
        if (y == x) return;
      orbit.push_back(x);
    };
    LabeledPair cur = pq;
    for (int i = 0; i < pr.b - 1; ++i) {
      push_unique(cur);
      cur = shift_pair(cur, 1);
    }
    if (dihedral) {
      LabeledPair ref = reflect_pair(pq);
      for (int i = 0; i < pr.b - 1; ++i) {
        push_unique(ref);
        ref = shift_pair(ref, 1);
      }
    }
    for (const auto& x : orbit) os << pair_line(x) << '\n';
    return 0;
  }

  if (fx->parsed()) {
    CoprimePair pr(A, B);
    auto fc = count_fixed(pr, D);
    out.stream() << "formula=" << fc.formula << " brute=" << fc.brute
                 << " match=" << (fc.match() ? "true" : "false") << '\n';
    return fc.match() ? 0 : 1;
  }

  if (csp->parsed()) {
    CoprimePair pr(A, B);
    std::vector<CspRow> rows;
    if (*nopt) {
      rows = verify_csp_narayana(pr, narayana_k);
    } else if (*kopt) {
      std::vector<long long> prof;
      std::stringstream ss(kreweras_profile);
      std::string tok;
      while (std::getline(ss, tok, ',')) prof.push_back(std::stoll(tok));
      rows = verify_csp_kreweras(pr, prof);
    } else {
      rows = verify_csp_catalan(pr);
    }
    bool ok = true;
    out.stream() << csp_tsv(rows, &ok);
    return ok ? 0 : 1;
  }

  if (pk->parsed()) {
    CoprimePair pr(A, B);
    auto& os = out.stream();
    if (park_verify) {
      auto perms = all_permutations(pr.a);
      auto park = enumerate_park(pr);
      os << "w\td\tformula\tbrute\tmatch\n";
      bool ok = true;
      int order = pr.b - 1;
      std::vector<std::string> lines(perms.size() *
                                     static_cast<std::size_t>(order));
      std::vector<char> fine(lines.size(), 1);
      indexed_parallel(static_cast<int>(lines.size()), [&](int idx) {
        int wi = idx / order, d = idx % order;
        long long f = character_formula(perms[wi], d, pr);
        long long brute = 0;
        for (const auto& pf : park)
          if (act(perms[wi], d, pf) == pf) ++brute;
        std::ostringstream line;
        line << perms[wi].text() << '\t' << d << '\t' << f << '\t' << brute
             << '\t' << (f == brute ? "true" : "false") << '\n';
        lines[idx] = line.str();
        fine[idx] = f == brute;
      });
      for (std::size_t i = 0; i < lines.size(); ++i) {
        os << lines[i];
        ok = ok && fine[i];
      }
      return ok ? 0 : 1;
    }
    if (!*copt) throw nc_error(errc::bad_input, "park needs --char or --verify");
    Permutation w = Permutation::parse(char_args[0], pr.a);
    char_d = std::stoi(char_args[1]);
    long long f = character_formula(w, char_d, pr);
    long long brute = character_brute(w, char_d, pr);
    os << "formula=" << f << " brute=" << brute
       << " match=" << (f == brute ? "true" : "false") << '\n';
    return f == brute ? 0 : 1;
  }

  if (cf->parsed()) {
    CoprimePair pr(N + 1, N);
    auto& os = out.stream();
    for (const auto& d : enumerate_paths(pr))
      os << d.runs_text() << '\t' << to_config12(d).text() << '\n';
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const nc_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == errc::resource_limit ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
