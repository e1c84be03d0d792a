#include "acs/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "acs/combinatorics.hpp"
#include "acs/error.hpp"
#include "acs/verify.hpp"

namespace acs {

namespace {

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

bool has_property(const SetSystem& s, Scheme property, std::uint32_t t) {
  VerifyOptions opts;
  switch (property) {
    case Scheme::Ts: return verify_ts(s, t, opts).holds();
    case Scheme::Ipps: return verify_ipps(s, t, opts).holds();
    case Scheme::Cff: return verify_cff(s, t, opts).holds();
  }
  return false;
}

class FamilySearch {
 public:
  FamilySearch(const SchemeParams& p, Scheme property, std::uint64_t budget)
      : p_(p), property_(property), budget_(budget) {
    auto c = first_combination(p.w);
    do candidates_.push_back(c);
    while (next_combination_colex(c, p.v));
  }

  SearchResult run() {
    dfs(0);
    std::vector<std::vector<Point>> blocks;
    for (auto i : best_) blocks.push_back(candidates_[i]);
    SearchResult r;
    r.params = p_;
    r.property = property_;
    r.optimum = best_.size();
    r.witness_family = SetSystem::create(p_.v, p_.w, std::move(blocks));
    r.nodes_explored = nodes_;
    r.complete = complete_;
    return r;
  }

 private:
  void dfs(std::size_t start) {
    const std::size_t n = candidates_.size();
    for (std::size_t c = start; c < n; ++c) {
      if (chosen_.size() + (n - c) <= best_.size()) return;
      if (nodes_ >= budget_) {
        complete_ = false;
        return;
      }
      ++nodes_;
      chosen_.push_back(c);
      if (holds()) {
        if (chosen_.size() > best_.size()) best_ = chosen_;
        dfs(c + 1);
      }
      chosen_.pop_back();
      if (!complete_) return;
    }
  }

  bool holds() const {
    std::vector<std::vector<Point>> blocks;
    blocks.reserve(chosen_.size());
    for (auto i : chosen_) blocks.push_back(candidates_[i]);
    return has_property(SetSystem::create(p_.v, p_.w, std::move(blocks)), property_, p_.t);
  }

  SchemeParams p_;
  Scheme property_;
  std::uint64_t budget_;
  std::vector<std::vector<Point>> candidates_;
  std::vector<std::size_t> chosen_, best_;
  std::uint64_t nodes_ = 0;
  bool complete_ = true;
};

std::vector<Point> to_points(const Bitset& b) { return b.to_indices(); }

// First cover of `target` by at most `limit` blocks other than `exclude`, with
// block indices chosen in increasing order; empty optional if none exists.
std::optional<Coalition> small_cover(const SetSystem& s, const Bitset& target, BlockIndex exclude,
                                     std::uint32_t limit) {
  if (target.none()) return Coalition{};
  std::vector<BlockIndex> cand;
  for (BlockIndex i = 0; i < s.size(); ++i)
    if (i != exclude && s.block(i).mask().intersects(target)) cand.push_back(i);

  Coalition chosen;
  std::optional<Coalition> found;
  auto dfs = [&](auto&& self, std::size_t start, const Bitset& uncovered) -> bool {
    if (uncovered.none()) {
      found = chosen;
      return true;
    }
    const std::size_t slots = limit - chosen.size();
    if (slots == 0) return false;
    std::size_t best_gain = 0;
    for (std::size_t k = start; k < cand.size(); ++k)
      best_gain = std::max(best_gain, s.block(cand[k]).mask().intersection_count(uncovered));
    if (best_gain * slots < uncovered.count()) return false;
    for (std::size_t k = start; k < cand.size(); ++k) {
      const Bitset& m = s.block(cand[k]).mask();
      if (!m.intersects(uncovered)) continue;
      Bitset rest = uncovered;
      rest.subtract(m);
      chosen.push_back(cand[k]);
      if (self(self, k + 1, rest)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(dfs, 0, target);
  return found;
}

std::string block_text(const SetSystem& s, BlockIndex i) {
  return "block " + std::to_string(i) + " {" + format_points(s.block(i).points()) + "}";
}

std::string indices_text(const std::vector<BlockIndex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

SearchResult exhaustive_optimal(const SchemeParams& p, Scheme property, std::uint64_t budget) {
  return FamilySearch(p, property, budget).run();
}

CrossCheck cross_check_bounds(const SchemeParams& p, Scheme property, std::uint64_t budget) {
  CrossCheck c{exhaustive_optimal(p, property, budget), bound_report(p, property), false};
  if (!c.search.complete)
    throw Error(ErrorCode::BudgetExceeded, "search stopped after " + std::to_string(c.search.nodes_explored) + " nodes");
  const BigInt opt = c.search.optimum;
  c.consistent = c.bounds.lower <= opt && opt <= c.bounds.upper;
  return c;
}

TsTraceResult ts_violation_from_cff_failure(const SetSystem& s, std::uint32_t t, const Witness& cff_witness) {
  const auto* cover = std::get_if<CffCover>(&cff_witness);
  if (!cover) return TraceBlocked{"witness", "expected a cff-cover witness"};
  if (t < 2) return TraceBlocked{"witness", "strength must be at least 2"};
  if (const auto check = check_witness(s, cff_witness); !check.valid) return TraceBlocked{"witness", check.reason};
  const std::uint32_t r = t * t;
  if (cover->cover.size() > r)
    return TraceBlocked{"witness", "cover uses " + std::to_string(cover->cover.size()) + " blocks, more than t^2"};

  ProofTraceTs tr;
  tr.t = t;
  tr.b0 = cover->b0;
  tr.cover = cover->cover;
  std::sort(tr.cover.begin(), tr.cover.end());
  const std::uint32_t w = s.w();
  tr.base_overlap = ceil_div(w, r);
  const Bitset& b0 = s.block(tr.b0).mask();

  // B_1 maximizes |B_0 ∩ B|.
  BlockIndex first = tr.cover.front();
  std::size_t top = 0;
  for (auto i : tr.cover)
    if (const auto k = b0.intersection_count(s.block(i).mask()); k > top) {
      top = k;
      first = i;
    }
  if (top < tr.base_overlap) throw std::logic_error("pigeonhole: no cover block meets B_0 in ceil(w/t^2) points");
  tr.selected.push_back(first);
  tr.sigmas.push_back(static_cast<std::uint32_t>(top - tr.base_overlap));
  Bitset reached = b0 & s.block(first).mask();

  for (std::uint32_t i = 2; i <= t; ++i) {
    const std::uint32_t remaining = w - static_cast<std::uint32_t>(reached.count());
    if (remaining == 0)
      return TraceBlocked{"select B_" + std::to_string(i),
                          "B_0 is already covered by " + std::to_string(i - 1) + " blocks, so no sigma_" +
                              std::to_string(i) + " > 0 exists"};
    Bitset open = b0;
    open.subtract(reached);
    std::optional<BlockIndex> pick;
    std::size_t gain = 0;
    for (auto j : tr.cover) {
      if (std::find(tr.selected.begin(), tr.selected.end(), j) != tr.selected.end()) continue;
      if (const auto k = open.intersection_count(s.block(j).mask()); k > gain) {
        gain = k;
        pick = j;
      }
    }
    if (!pick)
      return TraceBlocked{"select B_" + std::to_string(i), "cover has fewer than t blocks meeting B_0"};
    const std::uint32_t floor_i = ceil_div(remaining, r - i + 1);
    if (gain < floor_i) throw std::logic_error("pigeonhole floor violated at sigma_" + std::to_string(i));
    tr.selected.push_back(*pick);
    tr.sigmas.push_back(static_cast<std::uint32_t>(gain));
    tr.pigeonhole_floors.push_back(floor_i);
    reached |= b0 & s.block(*pick).mask();
  }

  std::uint32_t tail = 0;  // sigma_2 + ... + sigma_t
  for (std::size_t i = 1; i < tr.sigmas.size(); ++i) tail += tr.sigmas[i];
  if ((t + 1) * tail + tr.sigmas[0] + tr.base_overlap < w)
    throw std::logic_error("inequality (t+1)(sigma_2+...+sigma_t) >= w - ceil(w/t^2) - sigma_1 violated");

  // A = (B_0 ∩ B_i for all i) plus `tail` private points of each B_i.
  Bitset extra(s.v());
  for (std::size_t i = 0; i < tr.selected.size(); ++i) {
    Bitset own = s.block(tr.selected[i]).mask();
    own.subtract(b0);
    for (std::size_t j = 0; j < tr.selected.size(); ++j)
      if (j != i) own.subtract(s.block(tr.selected[j]).mask());
    std::uint32_t taken = 0;
    for (Point p : own.to_indices()) {
      if (taken == tail) break;
      extra.set(p);
      ++taken;
    }
  }
  const std::size_t core = reached.count();
  if (core + extra.count() < w)
    return TraceBlocked{"assemble F", "blocks B_1..B_t have too few private points to reach w"};
  Bitset pirate = reached;
  std::size_t need = w - core;
  for (Point p : extra.to_indices()) {
    if (need == 0) break;
    pirate.set(p);
    --need;
  }
  tr.pirate = to_points(pirate);

  Coalition coalition = tr.selected;
  std::sort(coalition.begin(), coalition.end());
  tr.witness = TsEvasion{t, coalition, tr.pirate, tr.b0};
  if (const auto check = check_witness(s, tr.witness); !check.valid)
    throw std::logic_error("completed trace produced an invalid evasion: " + check.reason);
  return tr;
}

IppsTraceResult ipps_violation_from_missing_own_subsets(const SetSystem& s, std::uint32_t t) {
  if (t < 2) return TraceBlocked{"precondition", "strength must be at least 2"};
  if (s.size() < 2) return TraceBlocked{"precondition", "need at least two blocks"};
  const std::uint32_t w = s.w();
  const std::uint32_t tau = ceil_div(w, t * t / 4 + t);
  const std::uint32_t half_up = (t + 1) / 2;
  const std::uint32_t half_down = t / 2;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (const auto rep = enumerate_own_subsets(s, i, tau); rep.count > 0)
      return TraceBlocked{"precondition", "block " + std::to_string(i) + " has " + std::to_string(rep.count) + " " +
                                              std::to_string(tau) + "-own-subsets"};

  ProofTraceIpps tr;
  tr.t = t;
  tr.tau = tau;
  Bitset used(s.v());
  BlockIndex cur = 0;
  tr.selected.push_back(cur);

  auto take_a = [&](std::uint32_t size, std::uint32_t step) -> std::optional<TraceBlocked> {
    std::vector<Point> a;
    for (Point p : s.block(cur).points()) {
      if (a.size() == size) break;
      if (!used.test(p)) a.push_back(p);
    }
    if (a.size() < size)
      return TraceBlocked{"choose A_" + std::to_string(step),
                          "only " + std::to_string(a.size()) + " unused points in B_" + std::to_string(step) + ", need " +
                              std::to_string(size)};
    const Bitset mask = Bitset::from_indices(s.v(), a);
    auto cover = small_cover(s, mask, cur, half_up);
    if (!cover)
      return TraceBlocked{"cover A_" + std::to_string(step), "no cover by at most ceil(t/2) other blocks"};
    used |= mask;
    tr.a_sets.push_back(std::move(a));
    tr.covers.push_back(std::move(*cover));
    return std::nullopt;
  };

  for (std::uint32_t i = 1; i <= half_down; ++i) {
    if (auto blocked = take_a(tau * half_up, i)) return *blocked;

    const Bitset prior = s.union_of(std::vector<std::uint32_t>(tr.selected.begin(), tr.selected.end() - 1));
    std::vector<Point> rest;
    for (Point p : s.block(cur).points())
      if (!used.test(p)) rest.push_back(p);
    std::optional<std::vector<Point>> d;
    for_each_subset(rest, tau, [&](const std::vector<Point>& sub) {
      for (Point p : sub)
        if (!prior.test(p)) {
          d = sub;
          return false;
        }
      return true;
    });
    if (!d)
      return TraceBlocked{"choose D_" + std::to_string(i),
                          "every " + std::to_string(tau) + "-subset of the unused part of B_" + std::to_string(i) +
                              " lies in B_1..B_" + std::to_string(i - 1)};
    const Bitset dmask = Bitset::from_indices(s.v(), *d);
    std::optional<BlockIndex> next;
    for (BlockIndex j = 0; j < s.size() && !next; ++j)
      if (j != cur && dmask.is_subset_of(s.block(j).mask())) next = j;
    if (!next || std::find(tr.selected.begin(), tr.selected.end(), *next) != tr.selected.end())
      return TraceBlocked{"choose B_" + std::to_string(i + 1), "no fresh block contains D_" + std::to_string(i)};
    used |= dmask;
    tr.d_sets.push_back(std::move(*d));
    tr.selected.push_back(*next);
    cur = *next;
  }

  const std::int64_t last = std::int64_t{w} - std::int64_t{tau} * half_up * half_down - std::int64_t{tau} * half_down;
  if (last < 0) return TraceBlocked{"choose A_" + std::to_string(half_down + 1), "required size is negative"};
  if (auto blocked = take_a(static_cast<std::uint32_t>(last), half_down + 1)) return *blocked;

  tr.pirate = used.to_indices();
  if (tr.pirate.size() != w) throw std::logic_error("assembled T does not have w points");

  std::vector<Coalition> parents;
  Coalition p0 = tr.selected;
  std::sort(p0.begin(), p0.end());
  parents.push_back(p0);
  for (std::size_t i = 0; i < tr.selected.size(); ++i) {
    std::set<BlockIndex> pi(tr.covers[i].begin(), tr.covers[i].end());
    for (std::size_t j = 0; j < tr.selected.size(); ++j)
      if (j != i) pi.insert(tr.selected[j]);
    parents.emplace_back(pi.begin(), pi.end());
  }
  tr.witness = IppsAmbiguity{t, tr.pirate, std::move(parents)};
  if (const auto check = check_witness(s, tr.witness); !check.valid)
    throw std::logic_error("completed trace produced an invalid ambiguity: " + check.reason);
  return tr;
}

void render_trace(std::ostream& out, const SetSystem& s, const ProofTraceTs& tr) {
  int step = 1;
  out << "trace ts t=" << tr.t << " ceil(w/t^2)=" << tr.base_overlap << '\n';
  out << step++ << ". B_0 = " << block_text(s, tr.b0) << " is covered by blocks " << indices_text(tr.cover) << '\n';
  for (std::size_t i = 0; i < tr.selected.size(); ++i) {
    out << step++ << ". B_" << i + 1 << " = " << block_text(s, tr.selected[i]) << ", sigma_" << i + 1 << " = "
        << tr.sigmas[i];
    if (i > 0) out << " >= " << tr.pigeonhole_floors[i - 1];
    out << '\n';
  }
  std::uint32_t tail = 0;
  for (std::size_t i = 1; i < tr.sigmas.size(); ++i) tail += tr.sigmas[i];
  const std::int64_t rhs = std::int64_t{s.w()} - tr.base_overlap - tr.sigmas[0];
  out << step++ << ". (t+1)(sigma_2+...+sigma_t) = " << (tr.t + 1) * tail << " >= w - ceil(w/t^2) - sigma_1 = " << rhs
      << '\n';
  out << step++ << ". F = {" << format_points(tr.pirate) << "}\n";
  const Bitset f = Bitset::from_indices(s.v(), tr.pirate);
  out << step++ << ". |B_0 ∩ F| = " << s.block(tr.b0).mask().intersection_count(f);
  for (std::size_t i = 0; i < tr.selected.size(); ++i)
    out << ", |B_" << i + 1 << " ∩ F| = " << s.block(tr.selected[i]).mask().intersection_count(f);
  out << '\n';
}

void render_trace(std::ostream& out, const SetSystem& s, const ProofTraceIpps& tr) {
  int step = 1;
  out << "trace ipps t=" << tr.t << " tau=" << tr.tau << '\n';
  for (std::size_t i = 0; i < tr.selected.size(); ++i) {
    out << step++ << ". B_" << i + 1 << " = " << block_text(s, tr.selected[i]) << '\n';
    out << step++ << ". A_" << i + 1 << " = {" << format_points(tr.a_sets[i]) << "}, C^(" << i + 1
        << ") = blocks " << indices_text(tr.covers[i]) << '\n';
    if (i < tr.d_sets.size()) out << step++ << ". D_" << i + 1 << " = {" << format_points(tr.d_sets[i]) << "}\n";
  }
  out << step++ << ". T = {" << format_points(tr.pirate) << "}\n";
  for (std::size_t i = 0; i < tr.witness.parent_sets.size(); ++i)
    out << step++ << ". P_" << i << " = blocks " << indices_text(tr.witness.parent_sets[i]) << '\n';
}

ConfigurationClass check_configuration(const std::vector<Coalition>& parts, std::uint32_t t) {
  for (const auto& part : parts)
    if (part.size() > t) throw Error(ErrorCode::ParamsInvalid, "configuration part larger than t");
  if (parts.empty()) return {};

  std::vector<std::set<BlockIndex>> sets;
  for (const auto& part : parts) sets.emplace_back(part.begin(), part.end());
  auto common_without = [&](std::size_t skip) {
    std::optional<std::set<BlockIndex>> acc;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i == skip) continue;
      if (!acc) {
        acc = sets[i];
        continue;
      }
      std::set<BlockIndex> next;
      std::set_intersection(acc->begin(), acc->end(), sets[i].begin(), sets[i].end(),
                            std::inserter(next, next.end()));
      acc = std::move(next);
    }
    return acc;  // nullopt means no parts left: the whole universe
  };

  const auto all = common_without(sets.size());
  if (!all->empty()) return {ConfigurationKind::NotConfiguration, 0};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto rest = common_without(k);
    if (rest && rest->empty()) return {ConfigurationKind::NonMinimal, 0};
  }
  std::set<BlockIndex> uni;
  for (const auto& s : sets) uni.insert(s.begin(), s.end());
  if (uni.size() > minimal_config_size_bound(t))
    throw std::logic_error("minimal configuration with union " + std::to_string(uni.size()) + " exceeds the bound");
  return {ConfigurationKind::Minimal, uni.size()};
}

}  // namespace acs
