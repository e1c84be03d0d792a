#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace acs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Strength t, block width w, ground set size v with v >= w >= t >= 2.
struct SchemeParams {
  std::uint32_t t = 2;
  std::uint32_t w = 2;
  std::uint32_t v = 2;

  /// Throws Error(ParamsInvalid) unless v >= w >= t >= 2.
  static SchemeParams make(std::uint32_t t, std::uint32_t w, std::uint32_t v);
};

enum class Scheme { Ts, Ipps, Cff };
std::string_view to_string(Scheme s);

enum class BoundKind { Upper, Lower, Exact };

struct BoundValue {
  std::string name;
  BoundKind kind = BoundKind::Upper;
  Rational value;
  /// floor for upper bounds, ceiling for lower bounds; absent when not applicable.
  std::optional<BigInt> integer_bound;
  bool applicable = true;
  std::string condition_note;
};

/// Binomial coefficient; 0 when k < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
std::string format_rational(const Rational& r);

BoundValue ipps_upper_collins(const SchemeParams& p);
BoundValue ipps_upper_new(const SchemeParams& p);

BoundValue ts_upper_sw(const SchemeParams& p);
BoundValue ts_upper_collins(const SchemeParams& p);
BoundValue ts_upper_general(const SchemeParams& p);
BoundValue ts_upper_special(const SchemeParams& p);
BoundValue ts_exact_small(const SchemeParams& p);
BoundValue ts_lower_trivial(const SchemeParams& p);
BoundValue ts_lower_packing(const SchemeParams& p);

BoundValue cff_upper_eff(const SchemeParams& p);
BoundValue cff_upper_new(const SchemeParams& p);
/// Special-case cover-free bound for strength r (r = t^2 gives the TS version).
BoundValue cff_upper_special(std::uint32_t r, std::uint32_t w, std::uint32_t v);

/// Minimum number of ceil(w/t^2)-own-subsets in every block of a t-TS.
BigInt own_subset_min_count(const SchemeParams& p);

/// floor((t/2 + 1)^2): largest union of a minimal configuration of <= t-sets.
std::uint64_t minimal_config_size_bound(std::uint32_t t);

/// Exponent of the binomial in the Collins IPPS bound and in the new one.
std::uint32_t ipps_collins_exponent(const SchemeParams& p);
std::uint32_t ipps_new_exponent(const SchemeParams& p);

struct BoundReport {
  SchemeParams params;
  Scheme scheme = Scheme::Ts;
  std::vector<BoundValue> entries;
  bool exact_known = false;
  BigInt lower;  // best applicable lower bound (ceiling)
  BigInt upper;  // best applicable upper bound (floor)

  const BoundValue* find(std::string_view name) const;
};

/// Every bound that applies to the scheme; throws Error(InconsistentBounds)
/// if some lower bound exceeds some upper bound.
BoundReport bound_report(const SchemeParams& p, Scheme scheme);

/// Tab-separated: name, value, integer bound, applicable, note; then a status row.
void render_bound_table(std::ostream& out, const BoundReport& report);

}  // namespace acs
