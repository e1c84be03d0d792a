#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "acs/bounds.hpp"
#include "acs/set_system.hpp"
#include "acs/witness.hpp"

namespace acs {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000ULL;

struct SearchResult {
  SchemeParams params;
  Scheme property = Scheme::Ts;
  std::uint64_t optimum = 0;
  SetSystem witness_family;
  std::uint64_t nodes_explored = 0;
  /// false when the budget ran out; `optimum` is then only a lower bound.
  bool complete = true;
};

/// Largest family of w-subsets of v points with the property, by depth-first
/// search over block sequences in increasing colex order. Every node costs
/// one property check; the search stops after `budget` nodes.
SearchResult exhaustive_optimal(const SchemeParams& p, Scheme property,
                                std::uint64_t budget = kDefaultSearchBudget);

struct CrossCheck {
  SearchResult search;
  BoundReport bounds;
  bool consistent = false;  // lower <= optimum <= upper
};

/// Throws Error(BudgetExceeded) if the search does not complete.
CrossCheck cross_check_bounds(const SchemeParams& p, Scheme property, std::uint64_t budget = kDefaultSearchBudget);

/// A proof step that could not be carried out on the given input.
struct TraceBlocked {
  std::string step;
  std::string detail;
};

/// Steps of the argument turning a cover of B0 by <= t^2 blocks into a
/// traceability violation by t of those blocks.
struct ProofTraceTs {
  std::uint32_t t = 0;
  std::uint32_t base_overlap = 0;      // ceil(w/t^2)
  BlockIndex b0 = 0;
  Coalition cover;
  std::vector<BlockIndex> selected;    // B_1..B_t in selection order
  std::vector<std::uint32_t> sigmas;   // sigma_1..sigma_t
  std::vector<std::uint32_t> pigeonhole_floors;  // guaranteed minimum for sigma_2..sigma_t
  std::vector<Point> pirate;           // F
  TsEvasion witness;
};

/// Steps of the argument building an ambiguous pirate set when no block has
/// a small own-subset.
struct ProofTraceIpps {
  std::uint32_t t = 0;
  std::uint32_t tau = 0;  // ceil(w/(floor(t^2/4)+t))
  std::vector<BlockIndex> selected;           // B_1..B_{floor(t/2)+1}
  std::vector<std::vector<Point>> a_sets;     // A_1..A_{floor(t/2)+1}
  std::vector<std::vector<Point>> d_sets;     // D_1..D_{floor(t/2)}
  std::vector<Coalition> covers;              // C^(1)..C^(floor(t/2)+1)
  std::vector<Point> pirate;                  // T
  IppsAmbiguity witness;                      // parent sets P_0..P_{floor(t/2)+1}
};

using TsTraceResult = std::variant<ProofTraceTs, TraceBlocked>;
using IppsTraceResult = std::variant<ProofTraceIpps, TraceBlocked>;

TsTraceResult ts_violation_from_cff_failure(const SetSystem& s, std::uint32_t t, const Witness& cff_witness);
IppsTraceResult ipps_violation_from_missing_own_subsets(const SetSystem& s, std::uint32_t t);

void render_trace(std::ostream& out, const SetSystem& s, const ProofTraceTs& trace);
void render_trace(std::ostream& out, const SetSystem& s, const ProofTraceIpps& trace);

enum class ConfigurationKind { NotConfiguration, NonMinimal, Minimal };

struct ConfigurationClass {
  ConfigurationKind kind = ConfigurationKind::NotConfiguration;
  std::size_t union_size = 0;  // meaningful for Minimal
};

/// Classifies coalitions F_1..F_m: a configuration has empty common
/// intersection; it is minimal if dropping any one part makes the
/// intersection nonempty. Throws std::logic_error if a minimal configuration
/// has a union larger than minimal_config_size_bound(t).
ConfigurationClass check_configuration(const std::vector<Coalition>& parts, std::uint32_t t);

}  // namespace acs
