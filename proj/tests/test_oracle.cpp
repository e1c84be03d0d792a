#include <doctest.h>

#include <random>

#include "acs/construct.hpp"
#include "acs/error.hpp"
#include "acs/oracle.hpp"
#include "acs/verify.hpp"
#include "support/naive.hpp"

using namespace acs;

namespace {

SetSystem all_subsets(std::uint32_t v, std::uint32_t w) {
  std::vector<std::vector<Point>> blocks;
  naive::choose(v, w, [&](const std::vector<std::size_t>& c) {
    blocks.emplace_back(c.begin(), c.end());
    return true;
  });
  return SetSystem::create(v, w, blocks);
}

// Largest family with the property. The properties are hereditary, so the
// first size with no valid family ends the scan.
std::size_t brute_optimum(std::uint32_t v, std::uint32_t w, std::uint32_t t, Scheme property) {
  const auto all = all_subsets(v, w);
  naive::Family cand;
  for (const auto& b : all.blocks()) cand.push_back(b.points());
  for (std::size_t m = 1; m <= cand.size(); ++m) {
    bool found = false;
    naive::choose(cand.size(), m, [&](const std::vector<std::size_t>& idx) {
      naive::Family fam;
      for (auto i : idx) fam.push_back(cand[i]);
      const bool ok = property == Scheme::Ts     ? naive::is_ts(fam, w, t)
                      : property == Scheme::Cff ? naive::is_cff(fam, t)
                                                : naive::is_ipps(fam, v, w, t);
      found = ok;
      return !ok;
    });
    if (!found) return m - 1;
  }
  return cand.size();
}

}  // namespace

TEST_CASE("exhaustive optimum for small traceability parameters") {
  for (std::uint32_t v = 2; v <= 6; ++v) {
    const auto r = exhaustive_optimal(SchemeParams::make(2, 2, v), Scheme::Ts);
    CHECK(r.complete);
    CHECK(r.optimum == v - 1);
    CHECK(r.witness_family.size() == r.optimum);
    CHECK(verify_ts(r.witness_family, 2).holds());
  }
  const auto r = exhaustive_optimal(SchemeParams::make(2, 4, 7), Scheme::Ts);
  CHECK(r.optimum == 4);
  CHECK(r.nodes_explored > 0);
}

TEST_CASE("exhaustive optimum matches brute force") {
  CHECK(exhaustive_optimal(SchemeParams::make(2, 3, 6), Scheme::Cff).optimum == brute_optimum(6, 3, 2, Scheme::Cff));
  CHECK(exhaustive_optimal(SchemeParams::make(2, 3, 5), Scheme::Ts).optimum == brute_optimum(5, 3, 2, Scheme::Ts));
  CHECK(exhaustive_optimal(SchemeParams::make(2, 2, 5), Scheme::Ipps).optimum ==
        brute_optimum(5, 2, 2, Scheme::Ipps));
  CHECK(exhaustive_optimal(SchemeParams::make(2, 3, 6), Scheme::Ts).optimum == brute_optimum(6, 3, 2, Scheme::Ts));
}

TEST_CASE("search budgets give lower bounds flagged incomplete") {
  const auto p = SchemeParams::make(2, 3, 6);
  const auto full = exhaustive_optimal(p, Scheme::Cff);
  const auto cut = exhaustive_optimal(p, Scheme::Cff, 10);
  CHECK(full.complete);
  CHECK_FALSE(cut.complete);
  CHECK(cut.optimum <= full.optimum);
  CHECK(cut.nodes_explored <= 10);
}

TEST_CASE("exhaustive optimum stays within the bounds") {
  for (std::uint32_t w = 2; w <= 4; ++w)
    for (std::uint32_t v = w; v <= 8; ++v) {
      const auto c = cross_check_bounds(SchemeParams::make(2, w, v), Scheme::Ts);
      CAPTURE(w);
      CAPTURE(v);
      CHECK(c.consistent);
      CHECK(c.search.optimum == v - w + 1);
    }
  CHECK(cross_check_bounds(SchemeParams::make(2, 3, 6), Scheme::Cff).consistent);
  CHECK(cross_check_bounds(SchemeParams::make(2, 2, 5), Scheme::Ts).search.optimum == 4);
  CHECK_THROWS_AS(cross_check_bounds(SchemeParams::make(2, 3, 6), Scheme::Cff, 3), Error);
}

TEST_CASE("traceability trace on all triples of six points") {
  const auto s = all_subsets(6, 3);
  const auto cff = verify_cff(s, 4);
  REQUIRE(cff.violated());
  const auto r = ts_violation_from_cff_failure(s, 2, *cff.witness);
  REQUIRE(std::holds_alternative<ProofTraceTs>(r));
  const auto& tr = std::get<ProofTraceTs>(r);
  CHECK(tr.selected.size() == 2);
  CHECK(tr.sigmas[1] > 0);
  CHECK(3 * tr.sigmas[1] + tr.sigmas[0] + tr.base_overlap >= s.w());
  CHECK(tr.pirate.size() == s.w());
  CHECK(check_witness(s, tr.witness).valid);

  // every cover of every block by up to four others
  std::size_t traced = 0;
  for (BlockIndex b0 = 0; b0 < s.size(); ++b0) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != b0) others.push_back(j);
    for (std::size_t k = 2; k <= 4; ++k)
      naive::choose(others.size(), k, [&](const std::vector<std::size_t>& c) {
        Coalition cover;
        for (auto i : c) cover.push_back(static_cast<BlockIndex>(others[i]));
        const Witness w = CffCover{4, b0, cover};
        if (!check_witness(s, w).valid) return true;
        const auto res = ts_violation_from_cff_failure(s, 2, w);
        if (const auto* t = std::get_if<ProofTraceTs>(&res)) {
          CHECK(check_witness(s, t->witness).valid);
          ++traced;
        }
        return traced < 400;
      });
  }
  CHECK(traced >= 400);
}

TEST_CASE("traceability trace guards its input") {
  const auto pg = pg_lines(2, 4);
  // forged cover: block 0 is not inside blocks 1 and 2
  const auto r = ts_violation_from_cff_failure(pg, 2, CffCover{4, 0, {1, 2}});
  REQUIRE(std::holds_alternative<TraceBlocked>(r));
  CHECK(std::get<TraceBlocked>(r).step == "witness");
  const auto wrong = ts_violation_from_cff_failure(pg, 2, TsEvasion{});
  CHECK(std::holds_alternative<TraceBlocked>(wrong));
}

TEST_CASE("parent identification trace on all triples of five points") {
  const auto s = all_subsets(5, 3);
  const auto r = ipps_violation_from_missing_own_subsets(s, 2);
  REQUIRE(std::holds_alternative<ProofTraceIpps>(r));
  const auto& tr = std::get<ProofTraceIpps>(r);
  CHECK(tr.tau == 1);
  REQUIRE(tr.a_sets.size() == 2);
  CHECK(tr.a_sets[0].size() == 1);
  CHECK(tr.d_sets.size() == 1);
  CHECK(tr.d_sets[0].size() == 1);
  CHECK(tr.a_sets[1].size() == 1);
  CHECK(tr.pirate.size() == 3);
  CHECK(tr.witness.parent_sets.size() == 3);
  for (const auto& p : tr.witness.parent_sets) CHECK(p.size() <= 2);
  CHECK(check_witness(s, tr.witness).valid);
}

TEST_CASE("parent identification trace needs the own-subset hypothesis") {
  const auto pg = pg_lines(2, 4);
  CHECK(verify_ipps(pg, 2, {Mode::Certified}).holds());
  const auto r = ipps_violation_from_missing_own_subsets(pg, 2);
  REQUIRE(std::holds_alternative<TraceBlocked>(r));
  CHECK(std::get<TraceBlocked>(r).step == "precondition");
}

TEST_CASE("parent identification traces on larger complete systems") {
  for (std::uint32_t t : {2u, 3u, 4u})
    for (std::uint32_t w = 3; w <= 5; ++w) {
      const auto s = all_subsets(w + 3, w);
      const auto r = ipps_violation_from_missing_own_subsets(s, t);
      CAPTURE(t);
      CAPTURE(w);
      if (const auto* tr = std::get_if<ProofTraceIpps>(&r)) {
        CHECK(tr->pirate.size() == w);
        CHECK(check_witness(s, tr->witness).valid);
      }
    }
}

TEST_CASE("configurations") {
  using K = ConfigurationKind;
  CHECK(check_configuration({{0, 1}, {0, 2}, {1, 2}}, 2).kind == K::Minimal);
  CHECK(check_configuration({{0, 1}, {0, 2}, {1, 2}}, 2).union_size == 3);
  CHECK(check_configuration({{0}, {0}}, 2).kind == K::NotConfiguration);
  CHECK(check_configuration({{0, 1}, {0, 2}, {1, 2}, {0, 3}}, 2).kind == K::NonMinimal);
  CHECK(check_configuration({{0, 1}, {2, 3}}, 2).kind == K::Minimal);
  CHECK_THROWS_AS(check_configuration({{0, 1, 2}}, 2), Error);
}

TEST_CASE("random minimal configurations respect the union bound") {
  std::mt19937 rng(11);
  std::size_t minimal = 0;
  for (int round = 0; round < 20000; ++round) {
    const std::uint32_t t = 2 + rng() % 3;
    const std::size_t parts = 2 + rng() % 5;
    std::vector<Coalition> cfg;
    for (std::size_t i = 0; i < parts; ++i) {
      std::set<BlockIndex> part;
      const std::size_t size = 1 + rng() % t;
      while (part.size() < size) part.insert(rng() % 8);
      cfg.emplace_back(part.begin(), part.end());
    }
    const auto c = check_configuration(cfg, t);  // throws if the bound failed
    if (c.kind == ConfigurationKind::Minimal) {
      CHECK(c.union_size <= minimal_config_size_bound(t));
      ++minimal;
    }
  }
  CHECK(minimal > 100);
}
