#include "acs/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "acs/bounds.hpp"
#include "acs/construct.hpp"
#include "acs/error.hpp"
#include "acs/oracle.hpp"
#include "acs/set_system.hpp"
#include "acs/verify.hpp"
#include "acs/witness.hpp"

namespace acs::cli {

namespace {

struct Flags {
  // shared
  std::string file;
  std::string output;
  std::uint32_t t = 0, w = 0, v = 0, n = 2, q = 0, d = 0, tau = 0;
  std::uint64_t lambda = 1;
  std::uint64_t budget = 0;
  unsigned workers = 1;
  std::string family, property, mode = "auto", scheme = "ts", kind = "ts", base, witness;
  std::optional<std::size_t> block;
  bool list = false;
};

const std::map<std::string, Scheme> kSchemes{{"ts", Scheme::Ts}, {"ipps", Scheme::Ipps}, {"cff", Scheme::Cff}};

void write_system(const Flags& f, const SetSystem& s, const std::vector<std::string>& comments, std::ostream& out) {
  if (f.output.empty() || f.output == "-") {
    render_set_system(out, s, comments);
    return;
  }
  std::ofstream file(f.output);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + f.output);
  render_set_system(file, s, comments);
}

int cmd_construct(const Flags& f, std::ostream& out) {
  std::vector<std::string> comments;
  std::optional<SetSystem> sys;
  auto describe = [&](const DesignDescriptor& d) {
    comments.push_back(" " + std::string(to_string(d.family)) + " n=" + std::to_string(d.n) + " q=" + std::to_string(d.q) +
                       ": " + std::to_string(d.tau) + "-(" + std::to_string(d.v) + "," + std::to_string(d.w) + "," +
                       std::to_string(d.lambda) + ") design");
  };
  if (f.family == "trivial") {
    sys = trivial_ts(f.v, f.w);
    comments.push_back(" trivial scheme v=" + std::to_string(f.v) + " w=" + std::to_string(f.w));
  } else if (f.family == "pg-lines") {
    sys = pg_lines(f.n, f.q);
    describe(describe_pg_lines(f.n, f.q));
  } else if (f.family == "ag-lines") {
    sys = ag_lines(f.n, f.q);
    describe(describe_ag_lines(f.n, f.q));
  } else if (f.family == "inversive-plane") {
    sys = inversive_plane(f.q);
    describe(describe_inversive_plane(f.q));
  } else if (f.family == "hermitian-unital") {
    sys = hermitian_unital(f.q);
    describe(describe_hermitian_unital(f.q));
  } else if (f.family == "greedy") {
    sys = greedy_packing_ts(f.v, f.w, f.t, f.budget ? f.budget : kDefaultGreedyBudget);
    comments.push_back(" greedy packing v=" + std::to_string(f.v) + " w=" + std::to_string(f.w) +
                       " t=" + std::to_string(f.t));
  } else if (f.family == "extend") {
    if (f.base.empty()) throw Error(ErrorCode::ParamsInvalid, "--base is required for extend");
    const auto loaded = load_set_system(f.base);
    DesignDescriptor desc;
    desc.path = f.base;
    if (auto prior = find_certificate(loaded.comments); prior && prior->d == 0) desc = prior->base;
    auto [ext, cert] = extend_design(loaded.system, f.d, f.t, desc);
    sys = std::move(ext);
    comments.push_back(" " + render_certificate(cert));
  } else {
    throw Error(ErrorCode::ParamsInvalid, "unknown family '" + f.family + "'");
  }
  write_system(f, *sys, comments, out);
  return kOk;
}

int report(const VerifyOutcome& r, std::ostream& out, std::ostream& err) {
  out << "verdict " << to_string(r.verdict) << '\n';
  if (!r.reason.empty()) out << "reason " << r.reason << '\n';
  if (r.witness) render_witness(out, *r.witness);
  err << "work " << r.work << '\n';
  switch (r.verdict) {
    case Verdict::Holds: return kOk;
    case Verdict::Violated: return kViolated;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto loaded = load_set_system(f.file);
  const SetSystem& s = loaded.system;
  const auto cert = find_certificate(loaded.comments);

  if (f.property == "design" || f.property == "packing") {
    if (f.tau < 1) throw Error(ErrorCode::ParamsInvalid, "--tau is required");
    out << "property " << f.property << " tau=" << f.tau << "\nmode exhaustive\n";
    return report(f.property == "design" ? verify_design(s, f.tau, f.lambda) : verify_packing(s, f.tau), out, err);
  }
  if (f.t < 1) throw Error(ErrorCode::ParamsInvalid, "--t is required");

  VerifyOptions opts;
  opts.budget = f.budget ? f.budget : kDefaultBudget;
  opts.workers = std::max(1u, f.workers);
  opts.certificate = cert ? &*cert : nullptr;

  auto run_mode = [&](Mode m) {
    opts.mode = m;
    if (f.property == "ts") return verify_ts(s, f.t, opts);
    if (f.property == "ipps") return verify_ipps(s, f.t, opts);
    if (f.property == "cff") return verify_cff(s, f.t, opts);
    return verify_ipps_star(s, f.t, opts);
  };
  if (f.property != "ts" && f.property != "ipps" && f.property != "cff" && f.property != "ipps-star")
    throw Error(ErrorCode::ParamsInvalid, "unknown property '" + f.property + "'");

  out << "property " << f.property << " t=" << f.t << '\n';
  if (f.mode == "exhaustive" || (f.mode == "auto" && f.property == "ipps-star")) {
    out << "mode exhaustive\n";
    return report(run_mode(Mode::Exhaustive), out, err);
  }
  if (f.mode == "certified") {
    if (f.property == "ipps-star") throw Error(ErrorCode::ParamsInvalid, "ipps-star has no certified mode");
    out << "mode certified\n";
    return report(run_mode(Mode::Certified), out, err);
  }
  if (f.mode != "auto") throw Error(ErrorCode::ParamsInvalid, "unknown mode '" + f.mode + "'");
  auto first = run_mode(Mode::Certified);
  if (first.holds()) {
    out << "mode certified\n";
    return report(first, out, err);
  }
  out << "mode exhaustive (certified: " << first.reason << ")\n";
  return report(run_mode(Mode::Exhaustive), out, err);
}

Scheme scheme_of(const std::string& name) {
  const auto it = kSchemes.find(name);
  if (it == kSchemes.end()) throw Error(ErrorCode::ParamsInvalid, "unknown scheme '" + name + "'");
  return it->second;
}

int cmd_bound(const Flags& f, std::ostream& out) {
  render_bound_table(out, bound_report(SchemeParams::make(f.t, f.w, f.v), scheme_of(f.scheme)));
  return kOk;
}

int cmd_search(const Flags& f, std::ostream& out) {
  const auto p = SchemeParams::make(f.t, f.w, f.v);
  const auto r = exhaustive_optimal(p, scheme_of(f.property), f.budget ? f.budget : kDefaultSearchBudget);
  out << "optimum " << r.optimum << "\ncomplete " << (r.complete ? "yes" : "no") << "\nnodes " << r.nodes_explored
      << '\n';
  write_system(f, r.witness_family, {" optimal family found by exhaustive search"}, out);
  return r.complete ? kOk : kInconclusive;
}

int cmd_trace(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto loaded = load_set_system(f.file);
  const SetSystem& s = loaded.system;
  if (f.t < 2) throw Error(ErrorCode::ParamsInvalid, "--t must be at least 2");

  auto blocked = [&](const TraceBlocked& b) {
    out << "blocked " << b.step << ": " << b.detail << '\n';
    return kInconclusive;
  };
  if (f.kind == "ipps") {
    const auto r = ipps_violation_from_missing_own_subsets(s, f.t);
    if (const auto* b = std::get_if<TraceBlocked>(&r)) return blocked(*b);
    const auto& tr = std::get<ProofTraceIpps>(r);
    render_trace(out, s, tr);
    render_witness(out, tr.witness);
    return kViolated;
  }
  if (f.kind != "ts") throw Error(ErrorCode::ParamsInvalid, "unknown trace kind '" + f.kind + "'");

  Witness cover;
  if (!f.witness.empty()) {
    std::ifstream in(f.witness);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + f.witness);
    cover = parse_witness(in);
  } else {
    VerifyOptions opts;
    opts.budget = f.budget ? f.budget : kDefaultBudget;
    const auto cff = verify_cff(s, f.t * f.t, opts);
    err << "work " << cff.work << '\n';
    if (!cff.violated()) {
      out << "blocked witness: no cover by at most t^2 blocks (" << to_string(cff.verdict) << ")\n";
      return kInconclusive;
    }
    cover = *cff.witness;
  }
  const auto r = ts_violation_from_cff_failure(s, f.t, cover);
  if (const auto* b = std::get_if<TraceBlocked>(&r)) return blocked(*b);
  const auto& tr = std::get<ProofTraceTs>(r);
  render_trace(out, s, tr);
  render_witness(out, tr.witness);
  return kViolated;
}

int cmd_own_subsets(const Flags& f, std::ostream& out) {
  const auto s = load_set_system(f.file).system;
  if (f.tau < 1) throw Error(ErrorCode::ParamsInvalid, "--tau is required");
  std::size_t lo = 0, hi = s.size();
  if (f.block) {
    lo = *f.block;
    hi = lo + 1;
  }
  std::size_t min_count = SIZE_MAX;
  for (std::size_t i = lo; i < hi; ++i) {
    const auto rep = enumerate_own_subsets(s, i, f.tau);
    min_count = std::min(min_count, rep.count);
    out << "block " << i << " count " << rep.count << '\n';
    if (f.list)
      for (const auto& sub : rep.own_subsets) out << "  " << format_points(sub) << '\n';
  }
  if (lo < hi) out << "minimum " << min_count << '\n';
  return kOk;
}

int cmd_check_witness(const Flags& f, std::ostream& out) {
  const auto s = load_set_system(f.file).system;
  std::ifstream in(f.witness);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + f.witness);
  const auto w = parse_witness(in);
  const auto check = check_witness(s, w);
  out << (check.valid ? "valid " : "invalid ") << witness_kind(w);
  if (!check.reason.empty()) out << ": " << check.reason;
  out << '\n';
  return check.valid ? kOk : kViolated;
}

int cmd_stats(const Flags& f, std::ostream& out) {
  const auto s = load_set_system(f.file).system;
  std::size_t lo_meet = SIZE_MAX, hi_meet = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto k = intersection_size(s.block(i), s.block(j));
      lo_meet = std::min(lo_meet, k);
      hi_meet = std::max(hi_meet, k);
    }
  std::vector<std::size_t> degree(s.v(), 0);
  for (const auto& b : s.blocks())
    for (Point p : b.points()) ++degree[p];
  const auto [dmin, dmax] = std::minmax_element(degree.begin(), degree.end());
  out << "v " << s.v() << "\nw " << s.w() << "\nm " << s.size() << '\n';
  if (s.size() >= 2) out << "intersections " << lo_meet << ".." << hi_meet << '\n';
  if (!degree.empty()) out << "degrees " << *dmin << ".." << *dmax << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Anti-collusion set systems: construct, verify, bound, search"};
  app.name("acs");
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a set system");
  construct->add_option("--family", f.family, "trivial, pg-lines, ag-lines, inversive-plane, hermitian-unital, "
                                              "extend or greedy")
      ->required();
  construct->add_option("--n", f.n, "geometry dimension");
  construct->add_option("--q", f.q, "field order");
  construct->add_option("--v", f.v, "points");
  construct->add_option("--w", f.w, "block size");
  construct->add_option("--t", f.t, "strength");
  construct->add_option("--d", f.d, "appended points");
  construct->add_option("--base", f.base, "base design file");
  construct->add_option("--budget", f.budget, "candidate limit for greedy");
  construct->add_option("-o,--output", f.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a property");
  verify->add_option("file", f.file)->required();
  verify->add_option("--property", f.property, "ts, ipps, ipps-star, cff, design or packing")->required();
  verify->add_option("--t", f.t, "strength");
  verify->add_option("--tau", f.tau, "design or packing strength");
  verify->add_option("--lambda", f.lambda, "design index");
  verify->add_option("--mode", f.mode, "auto, certified or exhaustive");
  verify->add_option("--budget", f.budget, "work limit");
  verify->add_option("--workers", f.workers, "threads");

  auto* bound = app.add_subcommand("bound", "tabulate bounds");
  bound->add_option("--t", f.t)->required();
  bound->add_option("--w", f.w)->required();
  bound->add_option("--v", f.v)->required();
  bound->add_option("--scheme", f.scheme, "ts, ipps or cff");

  auto* search = app.add_subcommand("search", "exact optimum by exhaustive search");
  search->add_option("--t", f.t)->required();
  search->add_option("--w", f.w)->required();
  search->add_option("--v", f.v)->required();
  search->add_option("--property", f.property, "ts, ipps or cff")->required();
  search->add_option("--budget", f.budget, "node limit");
  search->add_option("-o,--output", f.output, "write the optimal family here");

  auto* trace = app.add_subcommand("trace", "replay a violation argument step by step");
  trace->add_option("file", f.file)->required();
  trace->add_option("--kind", f.kind, "ts or ipps");
  trace->add_option("--t", f.t)->required();
  trace->add_option("--witness", f.witness, "cff-cover witness file (ts kind)");
  trace->add_option("--budget", f.budget, "work limit for finding a cover");

  auto* own = app.add_subcommand("own-subsets", "count own-subsets per block");
  own->add_option("file", f.file)->required();
  own->add_option("--tau", f.tau)->required();
  own->add_option("--block", f.block);
  own->add_flag("--list", f.list, "print the subsets");

  auto* check = app.add_subcommand("check-witness", "re-validate a witness");
  check->add_option("system", f.file)->required();
  check->add_option("witness", f.witness)->required();

  auto* stats = app.add_subcommand("stats", "basic parameters");
  stats->add_option("file", f.file)->required();

  std::vector<std::string> argv_store{"acs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(f, out);
    if (*verify) return cmd_verify(f, out, err);
    if (*bound) return cmd_bound(f, out);
    if (*search) return cmd_search(f, out);
    if (*trace) return cmd_trace(f, out, err);
    if (*own) return cmd_own_subsets(f, out);
    if (*check) return cmd_check_witness(f, out);
    if (*stats) return cmd_stats(f, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kInconclusive : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace acs::cli
