#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "acs/certificate.hpp"
#include "acs/set_system.hpp"
#include "acs/witness.hpp"

namespace acs {

enum class Verdict { Holds, Violated, Inconclusive };
enum class Mode { Exhaustive, Certified };

std::string_view to_string(Verdict v);
std::string_view to_string(Mode m);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

struct VerifyOptions {
  Mode mode = Mode::Exhaustive;
  /// Cap on elementary checks; exceeding it yields Inconclusive, never a wrong verdict.
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  /// Optional extension certificate consulted by certified TS verification.
  const ExtensionCertificate* certificate = nullptr;
};

struct VerifyOutcome {
  Verdict verdict = Verdict::Holds;
  Mode mode = Mode::Exhaustive;
  std::optional<Witness> witness;  // set iff verdict == Violated
  std::string reason;              // human-readable detail
  std::uint64_t work = 0;          // elementary checks performed

  bool holds() const noexcept { return verdict == Verdict::Holds; }
  bool violated() const noexcept { return verdict == Verdict::Violated; }
};

/// Every tau-subset of the ground set lies in exactly `lambda` blocks.
VerifyOutcome verify_design(const SetSystem& s, std::uint32_t tau, std::uint64_t lambda);

/// Every tau-subset lies in at most one block.
VerifyOutcome verify_packing(const SetSystem& s, std::uint32_t tau);

/// No block lies in the union of <= t other blocks.
VerifyOutcome verify_cff(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts = {});

/// Traceability: no outsider ties or beats every member of a <= t coalition
/// on any w-subset of the coalition's union.
VerifyOutcome verify_ts(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts = {});

/// Parent identification for w-subsets.
VerifyOutcome verify_ipps(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts = {});

/// Parent identification for all pirate sets of size w..t*w. Exhaustive only.
VerifyOutcome verify_ipps_star(const SetSystem& s, std::uint32_t t, const VerifyOptions& opts = {});

/// Re-checks an extension certificate against `s`: the last d points are in
/// every block, stripping them leaves a tau-(v-d, w-d, 1) design, and the
/// congruence w = d + 1 (mod t^2) holds with tau = ceil(w / t^2).
WitnessCheck check_extension_certificate(const SetSystem& s, const ExtensionCertificate& cert);

/// Every minimal cover of `pirate` by at most t blocks, sorted lexicographically.
std::vector<Coalition> minimal_covers(const SetSystem& s, const std::vector<Point>& pirate, std::uint32_t t);

}  // namespace acs
