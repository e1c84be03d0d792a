#include "acs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "acs/combinatorics.hpp"
#include "acs/error.hpp"

namespace acs {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "certified"; }

namespace {

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

class WorkMeter {
 public:
  explicit WorkMeter(std::uint64_t budget) : budget_(budget) {}

  bool charge(std::uint64_t n = 1) {
    const auto total = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > budget_) {
      exceeded_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  bool exceeded() const { return exceeded_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exceeded_{false};
};

// Runs task(i) for i in [0, tasks) across workers and returns the violation
// with the smallest task index. Each task reports the first violation in its
// own sequential order, so the result does not depend on scheduling.
template <typename Task>
std::optional<Witness> first_violation(std::size_t tasks, unsigned workers, WorkMeter& meter, Task&& task) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{tasks};
  std::mutex mu;
  std::map<std::size_t, Witness> found;

  auto run = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks || i > best.load() || meter.exceeded()) return;
      if (auto w = task(i)) {
        std::lock_guard lock(mu);
        found.emplace(i, std::move(*w));
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  if (n == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (found.empty()) return std::nullopt;
  return std::move(found.begin()->second);
}

VerifyOutcome finish(std::optional<Witness> witness, const WorkMeter& meter, std::string holds_reason) {
  VerifyOutcome out;
  out.mode = Mode::Exhaustive;
  out.work = meter.used();
  if (witness) {
    out.verdict = Verdict::Violated;
    out.witness = std::move(witness);
    out.reason = "counterexample found";
  } else if (meter.exceeded()) {
    out.verdict = Verdict::Inconclusive;
    out.reason = "BudgetExceeded";
  } else {
    out.verdict = Verdict::Holds;
    out.reason = std::move(holds_reason);
  }
  return out;
}

// Visits all k-subsets of {0..m-1} that start with `first`, in lex order.
template <typename Fn>
bool for_each_coalition_from(std::uint32_t first, std::uint32_t m, std::uint32_t k, Fn&& fn) {
  if (k == 0 || first + k > m) return true;
  std::vector<std::uint32_t> rest = first_combination(k - 1);
  const std::uint32_t span = m - first - 1;
  Coalition c(k);
  c[0] = first;
  do {
    for (std::size_t i = 0; i + 1 < k; ++i) c[i + 1] = first + 1 + rest[i];
    if (!fn(c)) return false;
  } while (k > 1 && next_combination_lex(rest, span));
  return true;
}

// ---------------------------------------------------------------------------
// Traceability

struct UnionView {
  std::vector<Point> points;            // ascending
  std::vector<std::uint64_t> patterns;  // bit j: point lies in coalition member j
};

UnionView make_view(const SetSystem& s, const Coalition& coalition, const Bitset& u) {
  UnionView view;
  view.points = u.to_indices();
  view.patterns.resize(view.points.size(), 0);
  for (std::size_t k = 0; k < view.points.size(); ++k)
    for (std::size_t j = 0; j < coalition.size(); ++j)
      if (s.block(coalition[j]).contains(view.points[k])) view.patterns[k] |= (std::uint64_t{1} << j);
  return view;
}

// A w-subset T of the union with |T ∩ B_o| >= |T ∩ B_j| for all j. Swapping a
// non-outsider point of T for an outsider point never lowers the outsider's
// margin, so it suffices to decide with T containing all of B_o ∩ U.
class TsDecider {
 public:
  TsDecider(const SetSystem& s, const Coalition& coalition, const UnionView& view, WorkMeter& meter)
      : s_(s), coalition_(coalition), view_(view), meter_(meter) {}

  bool evades(BlockIndex outsider) {
    const Block& out = s_.block(outsider);
    const std::size_t w = s_.w();
    std::size_t a = 0;
    for (auto p : view_.points)
      if (out.contains(p)) ++a;
    if (a >= w) return true;  // the outsider block itself lies in the union
    if (a * coalition_.size() < w) return false;  // some member gets >= ceil(w/s) > a
    if (greedy(out, a)) return true;
    return exact(out, a);
  }

 private:
  bool greedy(const Block& out, std::size_t a) {
    const std::size_t sz = coalition_.size();
    std::vector<std::size_t> b(sz);
    for (std::size_t j = 0; j < sz; ++j) b[j] = intersection_size(out, s_.block(coalition_[j]));
    std::vector<bool> taken(view_.points.size(), false);
    for (std::size_t k = 0; k < view_.points.size(); ++k)
      if (out.contains(view_.points[k])) taken[k] = true;
    for (std::size_t step = a; step < s_.w(); ++step) {
      meter_.charge();
      std::size_t best = view_.points.size();
      std::size_t best_max = SIZE_MAX;
      for (std::size_t k = 0; k < view_.points.size(); ++k) {
        if (taken[k]) continue;
        std::size_t m = 0;
        for (std::size_t j = 0; j < sz; ++j) m = std::max(m, b[j] + ((view_.patterns[k] >> j) & 1U));
        if (m < best_max) {
          best_max = m;
          best = k;
        }
      }
      if (best == view_.points.size()) return false;
      taken[best] = true;
      for (std::size_t j = 0; j < sz; ++j) b[j] += (view_.patterns[best] >> j) & 1U;
    }
    return *std::max_element(b.begin(), b.end()) <= a;
  }

  bool exact(const Block& out, std::size_t a) {
    const std::size_t sz = coalition_.size();
    caps_.assign(sz, 0);
    for (std::size_t j = 0; j < sz; ++j)
      caps_[j] = static_cast<long>(a) - static_cast<long>(intersection_size(out, s_.block(coalition_[j])));
    std::map<std::uint64_t, long> counts;
    for (std::size_t k = 0; k < view_.points.size(); ++k)
      if (!out.contains(view_.points[k])) ++counts[view_.patterns[k]];
    classes_.assign(counts.begin(), counts.end());
    // Cheaper classes (fewer members hit) first.
    std::stable_sort(classes_.begin(), classes_.end(), [](const auto& x, const auto& y) {
      return std::popcount(x.first) < std::popcount(y.first);
    });
    suffix_.assign(classes_.size() + 1, 0);
    for (std::size_t k = classes_.size(); k-- > 0;) suffix_[k] = suffix_[k + 1] + classes_[k].second;
    return fill(0, static_cast<long>(s_.w() - a));
  }

  bool fill(std::size_t k, long need) {
    meter_.charge();
    if (need == 0) return true;
    if (k == classes_.size() || suffix_[k] < need) return false;
    const auto [pattern, size] = classes_[k];
    long room = std::min(size, need);
    for (std::size_t j = 0; j < caps_.size(); ++j)
      if ((pattern >> j) & 1U) room = std::min(room, caps_[j]);
    for (long x = room; x >= 0; --x) {
      for (std::size_t j = 0; j < caps_.size(); ++j)
        if ((pattern >> j) & 1U) caps_[j] -= x;
      const bool ok = fill(k + 1, need - x);
      for (std::size_t j = 0; j < caps_.size(); ++j)
        if ((pattern >> j) & 1U) caps_[j] += x;
      if (ok) return true;
    }
    return false;
  }

  const SetSystem& s_;
  const Coalition& coalition_;
  const UnionView& view_;
  WorkMeter& meter_;
  std::vector<long> caps_;
  std::vector<std::pair<std::uint64_t, long>> classes_;
  std::vector<long> suffix_;
};

// Feasibility of a violating T under per-point constraints, used to build the
// lexicographically smallest pirate set for a fixed (coalition, outsider).
class ConstrainedTs {
 public:
  enum class State { Free, In, Out };

  ConstrainedTs(const SetSystem& s, const Coalition& coalition, const UnionView& view, BlockIndex outsider)
      : s_(s), coalition_(coalition), view_(view), outsider_(s.block(outsider)) {}

  bool feasible(const std::vector<State>& state) {
    std::map<std::pair<bool, std::uint64_t>, std::pair<int, int>> bounds;
    for (std::size_t k = 0; k < view_.points.size(); ++k) {
      if (state[k] == State::Out) continue;
      auto& [lo, hi] = bounds[{!outsider_.contains(view_.points[k]), view_.patterns[k]}];
      if (state[k] == State::In) ++lo;
      ++hi;
    }
    // Key order puts outsider classes (first = false) first.
    classes_.clear();
    for (const auto& [key, lohi] : bounds) classes_.push_back({!key.first, key.second, lohi.first, lohi.second});
    sum_lo_.assign(classes_.size() + 1, 0);
    sum_hi_.assign(classes_.size() + 1, 0);
    for (std::size_t k = classes_.size(); k-- > 0;) {
      sum_lo_[k] = sum_lo_[k + 1] + classes_[k].lo;
      sum_hi_[k] = sum_hi_[k + 1] + classes_[k].hi;
    }
    b_.assign(coalition_.size(), 0);
    return search(0, static_cast<int>(s_.w()), 0);
  }

  std::vector<Point> lexmin() {
    std::vector<State> state(view_.points.size(), State::Free);
    std::size_t taken = 0;
    for (std::size_t k = 0; k < view_.points.size() && taken < s_.w(); ++k) {
      state[k] = State::In;
      if (feasible(state)) {
        ++taken;
      } else {
        state[k] = State::Out;
      }
    }
    std::vector<Point> pirate;
    for (std::size_t k = 0; k < view_.points.size(); ++k)
      if (state[k] == State::In) pirate.push_back(view_.points[k]);
    return pirate;
  }

 private:
  struct Cls {
    bool in_outsider;
    std::uint64_t pattern;
    int lo;
    int hi;
  };

  bool search(std::size_t k, int need, int a) {
    if (need < sum_lo_[k] || need > sum_hi_[k]) return false;
    if (k == classes_.size()) return std::all_of(b_.begin(), b_.end(), [&](int bj) { return bj <= a; });
    const Cls& c = classes_[k];
    if (!c.in_outsider)
      for (int bj : b_)
        if (bj > a) return false;
    const int top = std::min(c.hi, need);
    for (int step = 0; step <= top - c.lo; ++step) {
      const int x = c.in_outsider ? top - step : c.lo + step;
      for (std::size_t j = 0; j < b_.size(); ++j)
        if ((c.pattern >> j) & 1U) b_[j] += x;
      const bool ok = search(k + 1, need - x, c.in_outsider ? a + x : a);
      for (std::size_t j = 0; j < b_.size(); ++j)
        if ((c.pattern >> j) & 1U) b_[j] -= x;
      if (ok) return true;
    }
    return false;
  }

  const SetSystem& s_;
  const Coalition& coalition_;
  const UnionView& view_;
  const Block& outsider_;
  std::vector<Cls> classes_;
  std::vector<int> sum_lo_, sum_hi_;
  std::vector<int> b_;
};

std::optional<Witness> ts_coalition_witness(const SetSystem& s, std::uint32_t t, const Coalition& coalition,
                                            const Bitset& u, WorkMeter& meter) {
  const UnionView view = make_view(s, coalition, u);
  TsDecider decider(s, coalition, view, meter);
  std::optional<TsEvasion> best;
  for (BlockIndex o = 0; o < s.size(); ++o) {
    if (std::find(coalition.begin(), coalition.end(), o) != coalition.end()) continue;
    meter.charge();
    if (!decider.evades(o)) continue;
    ConstrainedTs constrained(s, coalition, view, o);
    auto pirate = constrained.lexmin();
    if (!best || pirate < best->pirate) best = TsEvasion{t, coalition, std::move(pirate), o};
  }
  if (!best) return std::nullopt;
  return Witness{std::move(*best)};
}

bool any_evader(const SetSystem& s, const Coalition& coalition, const Bitset& u, WorkMeter& meter) {
  const UnionView view = make_view(s, coalition, u);
  TsDecider decider(s, coalition, view, meter);
  for (BlockIndex o = 0; o < s.size(); ++o) {
    if (std::find(coalition.begin(), coalition.end(), o) != coalition.end()) continue;
    if (!meter.charge()) return false;
    if (decider.evades(o)) return true;
  }
  return false;
}

// Depth-first over coalitions starting with `first`, in lexicographic order
// of sorted index lists; sizes 2..max_size are checked.
std::optional<Witness> ts_task(const SetSystem& s, std::uint32_t t, std::uint32_t max_size, BlockIndex first,
                               WorkMeter& meter) {
  Coalition coalition{first};
  std::vector<Bitset> unions{s.block(first).mask()};
  std::optional<Witness> result;

  auto dfs = [&](auto&& self) -> bool {
    if (meter.exceeded()) return true;
    if (coalition.size() >= 2 && any_evader(s, coalition, unions.back(), meter)) {
      result = ts_coalition_witness(s, t, coalition, unions.back(), meter);
      return true;
    }
    if (coalition.size() == max_size) return false;
    for (BlockIndex j = coalition.back() + 1; j < s.size(); ++j) {
      coalition.push_back(j);
      unions.push_back(unions.back() | s.block(j).mask());
      const bool stop = self(self);
      unions.pop_back();
      coalition.pop_back();
      if (stop) return true;
    }
    return false;
  };
  dfs(dfs);
  return result;
}

std::uint32_t max_pairwise_intersection(const SetSystem& s) {
  std::uint32_t mu = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      mu = std::max<std::uint32_t>(mu, static_cast<std::uint32_t>(intersection_size(s.block(i), s.block(j))));
  return mu;
}

// Certified TS: a ceil(w/t^2)-packing, or a re-checked extension certificate.
std::optional<std::string> ts_certificate(const SetSystem& s, std::uint32_t t, const ExtensionCertificate* cert) {
  const std::uint32_t tau = ceil_div(s.w(), t * t);
  if (s.w() == 0 || max_pairwise_intersection(s) < tau)
    return "blocks pairwise meet in fewer than ceil(w/t^2)=" + std::to_string(tau) + " points";
  if (cert != nullptr && cert->t >= t) {
    if (check_extension_certificate(s, *cert).valid)
      return "extension certificate (d=" + std::to_string(cert->d) + ", t=" + std::to_string(cert->t) + ") re-checked";
  }
  return std::nullopt;
}

VerifyOutcome certified(Verdict verdict, std::string reason) {
  VerifyOutcome out;
  out.mode = Mode::Certified;
  out.verdict = verdict;
  out.reason = std::move(reason);
  return out;
}

// ---------------------------------------------------------------------------
// Covers

// Local masks of the blocks meeting a pirate set, indexed by pirate position.
struct LocalCoverProblem {
  std::size_t width = 0;
  std::vector<BlockIndex> ids;
  std::vector<Bitset> masks;
  std::size_t max_cover = 0;
};

LocalCoverProblem local_problem(const SetSystem& s, const std::vector<Point>& pirate,
                                const std::vector<BlockIndex>& candidates) {
  LocalCoverProblem prob;
  prob.width = pirate.size();
  for (auto id : candidates) {
    Bitset mask(pirate.size());
    for (std::size_t k = 0; k < pirate.size(); ++k)
      if (s.block(id).contains(pirate[k])) mask.set(k);
    if (mask.none()) continue;
    prob.max_cover = std::max(prob.max_cover, mask.count());
    prob.ids.push_back(id);
    prob.masks.push_back(std::move(mask));
  }
  return prob;
}

// Branches on the lowest uncovered position; every minimal cover of size <= t
// appears among the leaves.
template <typename Leaf>
bool enumerate_covers(const LocalCoverProblem& prob, std::uint32_t t, WorkMeter* meter, Leaf&& leaf) {
  Bitset uncovered(prob.width);
  for (std::size_t k = 0; k < prob.width; ++k) uncovered.set(k);
  std::vector<std::size_t> chosen;

  auto dfs = [&](auto&& self) -> bool {
    if (meter != nullptr && !meter->charge()) return false;
    const std::size_t left = uncovered.count();
    if (left == 0) return leaf(chosen);
    if (chosen.size() >= t) return true;
    if ((t - chosen.size()) * prob.max_cover < left) return true;
    const std::size_t p = uncovered.find_first();
    for (std::size_t r = 0; r < prob.masks.size(); ++r) {
      if (!prob.masks[r].test(p)) continue;
      Bitset saved = uncovered;
      uncovered.subtract(prob.masks[r]);
      chosen.push_back(r);
      const bool go_on = self(self);
      chosen.pop_back();
      uncovered = std::move(saved);
      if (!go_on) return false;
    }
    return true;
  };
  return dfs(dfs);
}

std::vector<BlockIndex> blocks_meeting(const SetSystem& s, const Bitset& region) {
  std::vector<BlockIndex> out;
  for (BlockIndex i = 0; i < s.size(); ++i)
    if (s.block(i).mask().intersects(region)) out.push_back(i);
  return out;
}

std::vector<Coalition> minimal_covers_local(const LocalCoverProblem& prob, std::uint32_t t) {
  std::set<Coalition> covers;
  enumerate_covers(prob, t, nullptr, [&](const std::vector<std::size_t>& chosen) {
    for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
      Bitset rest(prob.width);
      for (std::size_t k = 0; k < chosen.size(); ++k)
        if (k != drop) rest |= prob.masks[chosen[k]];
      if (rest.count() == prob.width) return true;  // not minimal
    }
    Coalition c;
    for (auto r : chosen) c.push_back(prob.ids[r]);
    std::sort(c.begin(), c.end());
    covers.insert(std::move(c));
    return true;
  });
  return {covers.begin(), covers.end()};
}

// True when the <= t covers of the pirate set share no block.
bool ambiguous(const LocalCoverProblem& prob, std::uint32_t t, WorkMeter& meter) {
  std::optional<std::vector<BlockIndex>> common;
  bool empty = false;
  enumerate_covers(prob, t, &meter, [&](const std::vector<std::size_t>& chosen) {
    std::vector<BlockIndex> ids;
    for (auto r : chosen) ids.push_back(prob.ids[r]);
    std::sort(ids.begin(), ids.end());
    if (!common) {
      common = std::move(ids);
    } else {
      std::vector<BlockIndex> next;
      std::set_intersection(common->begin(), common->end(), ids.begin(), ids.end(), std::back_inserter(next));
      common = std::move(next);
    }
    empty = common->empty();
    return !empty;
  });
  return empty;
}

IppsAmbiguity ambiguity_witness(const LocalCoverProblem& prob, std::uint32_t t, const std::vector<Point>& pirate) {
  IppsAmbiguity w;
  w.strength = t;
  w.pirate = pirate;
  std::vector<BlockIndex> common;
  for (auto& cover : minimal_covers_local(prob, t)) {
    if (w.parent_sets.empty()) {
      common = cover;
    } else {
      std::vector<BlockIndex> next;
      std::set_intersection(common.begin(), common.end(), cover.begin(), cover.end(), std::back_inserter(next));
      common = std::move(next);
    }
    w.parent_sets.push_back(std::move(cover));
    if (common.empty()) break;
  }
  return w;
}

// Pirate-set enumeration shared by IPPS and IPPS*: for each coalition of
// exactly min(t, M) blocks (lex order) the candidate sets drawn from its union.
template <typename Sizes>
VerifyOutcome verify_parent_identification(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts,
                                           Sizes&& sizes_for) {
  WorkMeter meter(opts.budget);
  const auto m = static_cast<std::uint32_t>(s.size());
  const std::uint32_t k = std::min(t, m);
  auto task = [&](std::size_t first) -> std::optional<Witness> {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::optional<Witness> result;
    for_each_coalition_from(static_cast<std::uint32_t>(first), m, k, [&](const Coalition& c) {
      const Bitset u = s.union_of(c);
      const auto upoints = u.to_indices();
      const auto relevant = blocks_meeting(s, u);
      for (std::size_t size : sizes_for(upoints.size())) {
        const bool go_on = for_each_subset(upoints, size, [&](const std::vector<Point>& pirate) {
          if (!meter.charge()) return false;
          Bitset key = Bitset::from_indices(s.v(), pirate);
          if (!seen.insert(std::move(key)).second) return true;
          const auto prob = local_problem(s, pirate, relevant);
          if (ambiguous(prob, t, meter)) {
            result = ambiguity_witness(prob, t, pirate);
            return false;
          }
          return !meter.exceeded();
        });
        if (!go_on) return false;
      }
      return true;
    });
    return result;
  };
  auto witness = first_violation(m == 0 ? 0 : m - k + 1, opts.workers, meter, task);
  return finish(std::move(witness), meter, "every pirate set has a common parent");
}

}  // namespace

// ---------------------------------------------------------------------------

VerifyOutcome verify_design(const SetSystem& s, std::uint32_t tau, std::uint64_t lambda) {
  if (tau < 1 || tau > s.w())
    throw Error(ErrorCode::TauOutOfRange, "tau=" + std::to_string(tau) + " outside [1, w]");

  std::map<std::vector<Point>, std::uint64_t> counts;
  std::uint64_t work = 0;
  for (const auto& b : s.blocks()) {
    for_each_subset(b.points(), tau, [&](const std::vector<Point>& sub) {
      ++counts[sub];
      ++work;
      return true;
    });
  }

  // Number of tau-subsets of the ground set, saturating.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < tau && total != UINT64_MAX; ++i) {
    const std::uint64_t num = s.v() - i;
    total = (total > UINT64_MAX / num) ? UINT64_MAX : total * num / (i + 1);
  }
  const bool all_exact =
      std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second == lambda; });
  VerifyOutcome out;
  if (all_exact && (lambda == 0 || counts.size() == total)) {
    out.verdict = Verdict::Holds;
    out.reason = "every " + std::to_string(tau) + "-subset lies in exactly " + std::to_string(lambda) + " blocks";
    out.work = work;
    return out;
  }

  // First offending tau-subset in lexicographic order.
  std::vector<Point> sub = first_combination(tau);
  do {
    ++work;
    auto it = counts.find(sub);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    if (c != lambda) {
      out.verdict = Verdict::Violated;
      out.witness = SubsetMultiplicity{sub, c, Multiplicity::Exactly, lambda};
      out.reason = "subset {" + format_points(sub) + "} lies in " + std::to_string(c) + " blocks, expected " +
                   std::to_string(lambda);
      out.work = work;
      return out;
    }
  } while (next_combination_lex(sub, s.v()));
  out.verdict = Verdict::Holds;  // unreachable when counts disagree, kept for completeness
  out.work = work;
  return out;
}

VerifyOutcome verify_packing(const SetSystem& s, std::uint32_t tau) {
  if (tau < 1 || tau > s.w())
    throw Error(ErrorCode::TauOutOfRange, "tau=" + std::to_string(tau) + " outside [1, w]");
  VerifyOutcome out;
  std::optional<std::vector<Point>> worst;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      ++out.work;
      const Bitset meet = s.block(i).mask() & s.block(j).mask();
      if (meet.count() < tau) continue;
      auto pts = meet.to_indices();
      pts.resize(tau);
      if (!worst || pts < *worst) worst = std::move(pts);
    }
  }
  if (!worst) {
    out.verdict = Verdict::Holds;
    out.reason = "pairwise intersections are below " + std::to_string(tau);
    return out;
  }
  std::uint64_t c = 0;
  for (const auto& b : s.blocks())
    if (std::all_of(worst->begin(), worst->end(), [&](Point p) { return b.contains(p); })) ++c;
  out.verdict = Verdict::Violated;
  out.reason = "subset {" + format_points(*worst) + "} lies in " + std::to_string(c) + " blocks";
  out.witness = SubsetMultiplicity{*worst, c, Multiplicity::AtMost, 1};
  return out;
}

VerifyOutcome verify_cff(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts) {
  if (t < 1) throw Error(ErrorCode::ParamsInvalid, "cover-free strength must be at least 1");

  if (opts.mode == Mode::Certified) {
    const auto mu = max_pairwise_intersection(s);
    if (static_cast<std::uint64_t>(t) * mu < s.w())
      return certified(Verdict::Holds, "t * (max pairwise intersection " + std::to_string(mu) + ") < w");
    return certified(Verdict::Inconclusive, "t * max pairwise intersection reaches w");
  }

  WorkMeter meter(opts.budget);
  const auto m = static_cast<std::uint32_t>(s.size());
  const std::uint32_t depth = std::min<std::uint32_t>(t, m == 0 ? 0 : m - 1);

  auto task = [&](std::size_t b0) -> std::optional<Witness> {
    const Block& target = s.block(b0);
    struct Cand {
      BlockIndex id;
      Bitset proj;
      std::size_t size;
    };
    std::vector<Cand> cands;
    for (BlockIndex j = 0; j < m; ++j) {
      if (j == b0) continue;
      Bitset proj(s.w());
      for (std::size_t k = 0; k < target.points().size(); ++k)
        if (s.block(j).contains(target.points()[k])) proj.set(k);
      const auto sz = proj.count();
      if (sz > 0) cands.push_back({j, std::move(proj), sz});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.size > b.size; });
    // Drop candidates whose trace on B0 is inside another kept trace.
    std::vector<Cand> kept;
    for (auto& c : cands) {
      const bool dominated =
          std::any_of(kept.begin(), kept.end(), [&](const Cand& k) { return c.proj.is_subset_of(k.proj); });
      if (!dominated) kept.push_back(std::move(c));
    }
    const std::size_t max_cover = kept.empty() ? 0 : kept.front().size;

    Bitset uncovered(s.w());
    for (std::size_t k = 0; k < s.w(); ++k) uncovered.set(k);
    Coalition chosen;
    std::optional<Witness> result;
    auto dfs = [&](auto&& self) -> bool {
      if (!meter.charge()) return true;
      const std::size_t left = uncovered.count();
      if (left == 0) {
        Coalition cover = chosen;
        std::sort(cover.begin(), cover.end());
        result = CffCover{t, static_cast<BlockIndex>(b0), std::move(cover)};
        return true;
      }
      if (chosen.size() >= depth || (depth - chosen.size()) * max_cover < left) return false;
      const std::size_t p = uncovered.find_first();
      for (const auto& c : kept) {
        if (!c.proj.test(p)) continue;
        Bitset saved = uncovered;
        uncovered.subtract(c.proj);
        chosen.push_back(c.id);
        const bool stop = self(self);
        chosen.pop_back();
        uncovered = std::move(saved);
        if (stop) return true;
      }
      return false;
    };
    dfs(dfs);
    return result;
  };

  auto witness = first_violation(m, opts.workers, meter, task);
  return finish(std::move(witness), meter, "no block lies in the union of " + std::to_string(t) + " others");
}

VerifyOutcome verify_ts(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts) {
  if (t < 1) throw Error(ErrorCode::ParamsInvalid, "traceability strength must be at least 1");

  if (opts.mode == Mode::Certified) {
    if (auto why = ts_certificate(s, t, opts.certificate)) return certified(Verdict::Holds, *why);
    return certified(Verdict::Inconclusive, "no packing or extension certificate applies");
  }

  const auto m = static_cast<std::uint32_t>(s.size());
  const std::uint32_t max_size = std::min<std::uint32_t>(t, m == 0 ? 0 : m - 1);
  if (max_size > 64) throw Error(ErrorCode::ParamsInvalid, "coalitions above 64 blocks are not supported");

  WorkMeter meter(opts.budget);
  // Singleton coalitions only tie against a duplicate block, which the data
  // model already forbids.
  auto task = [&](std::size_t first) -> std::optional<Witness> {
    if (max_size < 2) return std::nullopt;
    return ts_task(s, t, max_size, static_cast<BlockIndex>(first), meter);
  };
  auto witness = first_violation(m, opts.workers, meter, task);
  return finish(std::move(witness), meter, "no coalition of at most " + std::to_string(t) + " blocks is framed");
}

VerifyOutcome verify_ipps(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts) {
  if (t < 1) throw Error(ErrorCode::ParamsInvalid, "parent-identification strength must be at least 1");
  if (opts.mode == Mode::Certified) {
    if (auto why = ts_certificate(s, t, opts.certificate))
      return certified(Verdict::Holds, "traceability certificate: " + *why);
    return certified(Verdict::Inconclusive, "no traceability certificate applies");
  }
  const std::size_t w = s.w();
  return verify_parent_identification(s, t, opts, [w](std::size_t) { return std::vector<std::size_t>{w}; });
}

VerifyOutcome verify_ipps_star(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts) {
  if (t < 1) throw Error(ErrorCode::ParamsInvalid, "parent-identification strength must be at least 1");
  const std::size_t w = s.w();
  return verify_parent_identification(s, t, opts, [w](std::size_t union_size) {
    std::vector<std::size_t> sizes;
    for (std::size_t k = w; k <= union_size; ++k) sizes.push_back(k);
    return sizes;
  });
}

std::vector<Coalition> minimal_covers(const SetSystem& s, const std::vector<Point>& pirate, std::uint32_t t) {
  const Bitset region = Bitset::from_indices(s.v(), pirate);
  return minimal_covers_local(local_problem(s, pirate, blocks_meeting(s, region)), t);
}

WitnessCheck check_extension_certificate(const SetSystem& s, const ExtensionCertificate& cert) {
  const std::uint32_t t = cert.t;
  const std::uint32_t d = cert.d;
  if (t < 1) return {false, "certificate strength below 1"};
  const std::uint32_t tt = t * t;
  if (d >= tt) return {false, "d must be below t^2"};
  if (s.w() <= d || s.v() < d) return {false, "system too small for d appended points"};
  if (s.w() % tt != (d + 1) % tt) return {false, "w is not congruent to d+1 modulo t^2"};
  if (cert.tau != ceil_div(s.w(), tt)) return {false, "tau differs from ceil(w/t^2)"};
  const std::uint32_t base_v = s.v() - d;
  std::vector<std::vector<Point>> stripped;
  for (const auto& b : s.blocks()) {
    for (std::uint32_t p = base_v; p < s.v(); ++p)
      if (!b.contains(p)) return {false, "appended point " + std::to_string(p) + " missing from a block"};
    stripped.emplace_back(b.points().begin(), b.points().end() - d);
  }
  if (cert.tau > s.w() - d) return {false, "tau exceeds base block width"};
  const auto base = SetSystem::create(base_v, s.w() - d, std::move(stripped));
  if (!verify_design(base, cert.tau, 1).holds()) return {false, "stripped system is not a tau-(v-d, w-d, 1) design"};
  return {true, "extension certificate re-checked"};
}

}  // namespace acs
