#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "acs/set_system.hpp"

namespace acs {

using BlockIndex = std::uint32_t;
using Coalition = std::vector<BlockIndex>;

/// Block `b0` lies inside the union of the `cover` blocks, |cover| <= strength.
struct CffCover {
  std::uint32_t strength = 0;
  BlockIndex b0 = 0;
  Coalition cover;
};

/// The outsider meets `pirate` in at least as many points as every member of
/// `coalition`, although `pirate` is drawn from the coalition's union.
struct TsEvasion {
  std::uint32_t strength = 0;
  Coalition coalition;
  std::vector<Point> pirate;
  BlockIndex outsider = 0;
};

/// Every listed parent set covers `pirate`, each has at most `strength`
/// blocks, and no block is common to all of them.
struct IppsAmbiguity {
  std::uint32_t strength = 0;
  std::vector<Point> pirate;
  std::vector<Coalition> parent_sets;
};

enum class Multiplicity { Exactly, AtMost };

/// A tau-subset whose block count breaks a design or packing requirement.
struct SubsetMultiplicity {
  std::vector<Point> subset;
  std::uint64_t count = 0;
  Multiplicity relation = Multiplicity::Exactly;
  std::uint64_t required = 0;
};

using Witness = std::variant<CffCover, TsEvasion, IppsAmbiguity, SubsetMultiplicity>;

void render_witness(std::ostream& out, const Witness& w);
std::string render_witness(const Witness& w);

/// Throws Error(ParseError) on malformed input.
Witness parse_witness(std::istream& in);
Witness parse_witness(const std::string& text);

struct WitnessCheck {
  bool valid = false;
  std::string reason;
};

/// Re-validates a witness against the raw blocks of `s` by direct recomputation.
WitnessCheck check_witness(const SetSystem& s, const Witness& w);

std::string_view witness_kind(const Witness& w);

}  // namespace acs
