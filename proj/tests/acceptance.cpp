// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "acs/bounds.hpp"
#include "acs/cli.hpp"
#include "acs/construct.hpp"
#include "acs/oracle.hpp"
#include "acs/verify.hpp"
#include "support/naive.hpp"

using namespace acs;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << ":" << c.detail.str() << " ("
            << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = acs::cli::run(args, out, err);
  return {code, out.str()};
}

SetSystem all_subsets(std::uint32_t v, std::uint32_t w) {
  std::vector<std::vector<Point>> blocks;
  naive::choose(v, w, [&](const std::vector<std::size_t>& c) {
    blocks.emplace_back(c.begin(), c.end());
    return true;
  });
  return SetSystem::create(v, w, blocks);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string text(const BoundValue& b) { return format_rational(b.value); }

}  // namespace

int main() {
  const fs::path tmp = fs::temp_directory_path() / ("acs-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(tmp);

  criterion("AC1", "2-TS(5,21) of size 21 is optimal", [&](Check& c) {
    const std::string file = (tmp / "pg24.ss").string();
    const auto built = run_cli({"construct", "--family", "pg-lines", "--n", "2", "--q", "4", "-o", file});
    c.require(built.code == 0, "construct exit 0");
    const auto loaded = load_set_system(file);
    c.require(loaded.system.size() == 21 && loaded.system.v() == 21 && loaded.system.w() == 5, "v=21 w=5 M=21");
    const auto v = run_cli({"verify", file, "--property", "ts", "--t", "2", "--mode", "exhaustive"});
    c.require(v.code == 0 && v.out.find("verdict Holds") != std::string::npos, "exhaustive verify holds");
    const auto b = run_cli({"bound", "--t", "2", "--w", "5", "--v", "21"});
    c.require(b.code == 0 && b.out.find("\nspecial\t21\t21\tyes\t") != std::string::npos, "special bound row is 21");
    c.detail << " M=" << loaded.system.size() << ", exhaustive verdict Holds, special bound 21";
  });

  criterion("AC2", "2-TS(5,25) of size 30 is optimal", [&](Check& c) {
    const auto s = ag_lines(2, 5);
    const auto r = verify_ts(s, 2);
    c.require(r.holds() && r.mode == Mode::Exhaustive, "exhaustive verify holds");
    const BigInt expected = binom(25, 2) / binom(5, 2);
    c.require(expected == 30 && BigInt(s.size()) == expected, "size equals C(25,2)/C(5,2)");
    const auto special = ts_upper_special(SchemeParams::make(2, 5, 25));
    c.require(special.applicable && *special.integer_bound == BigInt(s.size()), "matches special bound");
    c.detail << " M=" << s.size() << " = C(25,2)/C(5,2) = " << expected;
  });

  criterion("AC3", "exact optimum v-w+1 when w <= t^2", [&](Check& c) {
    for (std::uint32_t v : {3u, 4u, 5u}) {
      const auto r = exhaustive_optimal(SchemeParams::make(2, 2, v), Scheme::Ts);
      c.require(r.complete && r.optimum == v - 1, "M(2," + std::to_string(v) + ") = v-1");
      c.detail << " M_2(2," << v << ")=" << r.optimum;
    }
    const auto r = exhaustive_optimal(SchemeParams::make(2, 4, 7), Scheme::Ts);
    c.require(r.complete && r.optimum == 4, "M_2(4,7) = 4");
    c.detail << " M_2(4,7)=" << r.optimum;
  });

  criterion("AC4", "TS => IPPS => CFF and TS(t) => CFF(t^2) on a mixed corpus", [&](Check& c) {
    std::vector<std::pair<std::string, SetSystem>> corpus = {
        {"pg(2,2)", pg_lines(2, 2)},
        {"pg(2,3)", pg_lines(2, 3)},
        {"pg(2,4)", pg_lines(2, 4)},
        {"ag(2,3)", ag_lines(2, 3)},
        {"ag(2,5)", ag_lines(2, 5)},
        {"inversive(2)", inversive_plane(2)},
        {"inversive(3)", inversive_plane(3)},
        {"unital(2)", hermitian_unital(2)},
        {"unital(3)", hermitian_unital(3)},
        {"trivial(10,4)", trivial_ts(10, 4)},
        {"trivial(9,3)", trivial_ts(9, 3)},
        {"greedy(12,4,2)", greedy_packing_ts(12, 4, 2)},
        {"greedy(16,5,2)", greedy_packing_ts(16, 5, 2)},
        {"ag(2,5)+1", extend_design(ag_lines(2, 5), 1, 2).first},
        {"triples(6)", all_subsets(6, 3)},
        {"triples(5)", all_subsets(5, 3)},
        {"pairs(6)", all_subsets(6, 2)},
    };
    std::mt19937 rng(404);
    for (int i = 0; i < 8; ++i)
      corpus.emplace_back("random" + std::to_string(i), SetSystem::create(9, 3, naive::random_family(rng, 9, 3, 4 + i)));

    std::size_t ts_holds = 0, ipps_holds = 0, cff_holds = 0, ts_fails = 0;
    for (const auto& [name, s] : corpus) {
      const bool ts = verify_ts(s, 2).holds();
      const bool ipps = verify_ipps(s, 2).holds();
      const bool cff = verify_cff(s, 2).holds();
      const bool cff4 = verify_cff(s, 4).holds();
      c.require(!ts || ipps, name + ": TS but not IPPS");
      c.require(!ipps || cff, name + ": IPPS but not CFF");
      c.require(!ts || cff4, name + ": 2-TS but not 4-CFF");
      ts_holds += ts;
      ts_fails += !ts;
      ipps_holds += ipps;
      cff_holds += cff;
    }
    c.require(ts_holds >= 5 && ts_fails >= 3, "corpus has positives and negatives");
    c.detail << " " << corpus.size() << " instances, TS holds " << ts_holds << ", IPPS holds " << ipps_holds
             << ", CFF holds " << cff_holds << ", exceptions 0";
  });

  criterion("AC5", "own 2-subsets of the 2-TS(5,21) blocks", [&](Check& c) {
    const auto s = pg_lines(2, 4);
    const auto floor = own_subset_min_count(SchemeParams::make(2, 5, 21));
    c.require(floor == 4, "floor C(4,1) = 4");
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::size_t b = 0; b < s.size(); ++b) {
      const auto n = enumerate_own_subsets(s, b, 2).count;
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    c.require(BigInt(lo) >= floor, "every block reaches the floor");
    c.detail << " counts " << lo << ".." << hi << " over " << s.size() << " blocks, floor 4";
  });

  criterion("AC6", "greedy packing (30,5,2)", [&](Check& c) {
    const auto g = greedy_packing_ts(30, 5, 2);
    const auto lower = ts_lower_packing(SchemeParams::make(2, 5, 30));
    c.require(text(lower) == "87/20" && *lower.integer_bound == 5, "lower bound 435/100, ceiling 5");
    c.require(verify_packing(g, 2).holds(), "2-packing");
    c.require(BigInt(g.size()) >= 5, "size >= 5");
    VerifyOptions cert;
    cert.mode = Mode::Certified;
    c.require(verify_ts(g, 2, cert).holds(), "certified TS");
    c.require(verify_ts(g, 2).holds(), "exhaustive TS");
    c.detail << " M=" << g.size() << " >= 5, packing, certified and exhaustive TS hold";
  });

  criterion("AC7", "bound table regression for (2,5,21)", [&](Check& c) {
    const auto p = SchemeParams::make(2, 5, 21);
    const auto ts = bound_report(p, Scheme::Ts);
    c.require(ts.find("sw")->value == Rational(1330, 6), "sw 1330/6");
    c.require(text(*ts.find("collins")) == "210", "collins 210");
    c.require(text(*ts.find("general")) == "51", "general 51");
    c.require(text(*ts.find("special")) == "21", "special 21");
    c.require(*ts.find("trivial-lower")->integer_bound == 17, "trivial 17");
    c.require(ts.find("packing-lower")->value == Rational(210, 100) && *ts.find("packing-lower")->integer_bound == 3,
              "packing ceil(210/100) = 3");
    const auto ipps = bound_report(p, Scheme::Ipps);
    c.require(text(*ipps.find("collins")) == "1330", "ipps collins 1330");
    c.require(text(*ipps.find("new")) == "210", "ipps new 210");
    for (const char* scheme : {"ts", "ipps"}) {
      std::ostringstream out;
      render_bound_table(out, std::string(scheme) == "ts" ? ts : ipps);
      const std::string golden = read_file(std::string(ACS_GOLDEN_DIR) + "/bound_t2_w5_v21_" + scheme + ".tsv");
      c.require(!golden.empty() && out.str() == golden, std::string(scheme) + " table byte-exact");
    }
    c.detail << " values and golden tables match";
  });

  criterion("AC8", "monotonicity grid", [&](Check& c) {
    std::size_t cells = 0, violations = 0;
    for (std::uint32_t t = 2; t <= 4; ++t)
      for (std::uint32_t w = t; w <= 4 * t * t; ++w)
        for (std::uint32_t v = w; v <= 200; ++v) {
          const auto p = SchemeParams::make(t, w, v);
          const auto general = ts_upper_general(p).value;
          if (!(general <= ts_upper_collins(p).value)) ++violations;
          if (const auto s = ts_upper_special(p); s.applicable && !(s.value <= general)) ++violations;
          if (!(cff_upper_new(p).value <= cff_upper_eff(p).value)) ++violations;
          if (ipps_new_exponent(p) > ipps_collins_exponent(p)) ++violations;
          ++cells;
        }
    c.require(violations == 0, "zero violations");
    c.detail << " " << cells << " cells, " << violations << " violations";
  });

  criterion("AC9", "proof traces re-validate", [&](Check& c) {
    const auto t6 = all_subsets(6, 3);
    const auto cover = verify_cff(t6, 4);
    c.require(cover.violated(), "triples of 6 are not 4-cover-free");
    if (cover.violated()) {
      const auto r = ts_violation_from_cff_failure(t6, 2, *cover.witness);
      const auto* tr = std::get_if<ProofTraceTs>(&r);
      c.require(tr != nullptr, "ts trace completes");
      if (tr) {
        c.require(check_witness(t6, tr->witness).valid, "evasion re-validates");
        const std::uint32_t tail = tr->sigmas[1];
        c.require(3 * tail >= t6.w() - tr->base_overlap - tr->sigmas[0], "inequality (t+1)*sum >= w-ceil-sigma_1");
        c.detail << " ts: sigma=(" << tr->sigmas[0] << "," << tr->sigmas[1] << ") F={"
                 << format_points(tr->pirate) << "} valid;";
      }
    }
    const auto t5 = all_subsets(5, 3);
    const auto r = ipps_violation_from_missing_own_subsets(t5, 2);
    const auto* tr = std::get_if<ProofTraceIpps>(&r);
    c.require(tr != nullptr, "ipps trace completes");
    if (tr) {
      c.require(check_witness(t5, tr->witness).valid, "ambiguity re-validates");
      c.detail << " ipps: T={" << format_points(tr->pirate) << "} with " << tr->witness.parent_sets.size()
               << " parent sets valid";
    }
  });

  criterion("AC10", "IPPS and IPPS* agree on random small systems", [&](Check& c) {
    std::mt19937 rng(1010);
    std::size_t n = 0, agree = 0, holds = 0;
    for (int i = 0; i < 300; ++i) {
      const std::uint32_t w = 2 + rng() % 3;
      const std::uint32_t v = w + 1 + rng() % (10 - w);
      const auto s = SetSystem::create(v, w, naive::random_family(rng, v, w, 2 + rng() % 10));
      const bool a = verify_ipps(s, 2).holds();
      const bool b = verify_ipps_star(s, 2).holds();
      agree += a == b;
      holds += a;
      ++n;
    }
    c.require(n >= 100 && agree == n, "all agree");
    c.require(holds > 0 && holds < n, "both outcomes occur");
    c.detail << " " << agree << "/" << n << " agree, " << holds << " identify parents";
  });

  fs::remove_all(tmp);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
