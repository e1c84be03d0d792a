#include "acs/witness.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "acs/error.hpp"

namespace acs {

namespace {

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(items[i]);
  }
  return out;
}

struct Renderer {
  std::ostream& out;
  void operator()(const CffCover& w) const {
    out << "witness cff-cover t=" << w.strength << '\n'
        << "block " << w.b0 << '\n'
        << "cover " << join(w.cover) << '\n';
  }
  void operator()(const TsEvasion& w) const {
    out << "witness ts-evasion t=" << w.strength << '\n'
        << "coalition " << join(w.coalition) << '\n'
        << "pirate " << join(w.pirate) << '\n'
        << "outsider " << w.outsider << '\n';
  }
  void operator()(const IppsAmbiguity& w) const {
    out << "witness ipps-ambiguity t=" << w.strength << '\n' << "pirate " << join(w.pirate) << '\n';
    for (const auto& p : w.parent_sets) out << "parents " << join(p) << '\n';
  }
  void operator()(const SubsetMultiplicity& w) const {
    out << "witness subset-multiplicity\n"
        << "subset " << join(w.subset) << '\n'
        << "count " << w.count << '\n'
        << "required " << (w.relation == Multiplicity::Exactly ? "exactly " : "at-most ") << w.required << '\n';
  }
};

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, "witness: " + msg); }

std::uint64_t to_uint(const std::string& tok) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) fail("bad integer '" + tok + "'");
  return value;
}

struct Line {
  std::string key;
  std::vector<std::string> args;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw.front() == '#') continue;
    std::istringstream ss(raw);
    Line line;
    ss >> line.key;
    if (line.key.empty()) continue;
    std::string tok;
    while (ss >> tok) line.args.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
std::vector<T> ints(const Line& line) {
  std::vector<T> out;
  for (const auto& a : line.args) out.push_back(static_cast<T>(to_uint(a)));
  return out;
}

const Line& expect(const std::vector<Line>& lines, std::size_t i, std::string_view key) {
  if (i >= lines.size() || lines[i].key != key) fail("expected '" + std::string(key) + "' line");
  return lines[i];
}

std::uint64_t single(const Line& line) {
  if (line.args.size() != 1) fail("'" + line.key + "' takes exactly one value");
  return to_uint(line.args[0]);
}

std::uint32_t strength_of(const Line& header) {
  if (header.args.size() != 2 || header.args[1].rfind("t=", 0) != 0) fail("header needs 't=<strength>'");
  return static_cast<std::uint32_t>(to_uint(header.args[1].substr(2)));
}

bool distinct_in_range(const Coalition& c, std::size_t m) {
  std::set<BlockIndex> seen;
  for (auto i : c) {
    if (i >= m || !seen.insert(i).second) return false;
  }
  return true;
}

bool points_valid(const std::vector<Point>& pts, std::uint32_t v) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] >= v) return false;
    if (i > 0 && pts[i] <= pts[i - 1]) return false;
  }
  return true;
}

Bitset union_mask(const SetSystem& s, const Coalition& c) {
  Bitset u(s.v());
  for (auto i : c) u |= s.block(i).mask();
  return u;
}

struct Checker {
  const SetSystem& s;

  WitnessCheck operator()(const CffCover& w) const {
    if (w.b0 >= s.size()) return {false, "block index out of range"};
    if (!distinct_in_range(w.cover, s.size())) return {false, "cover indices repeated or out of range"};
    if (std::find(w.cover.begin(), w.cover.end(), w.b0) != w.cover.end())
      return {false, "covered block appears in its own cover"};
    if (w.cover.size() > w.strength) return {false, "cover larger than the declared strength"};
    if (!s.block(w.b0).mask().is_subset_of(union_mask(s, w.cover)))
      return {false, "block is not inside the union of the cover"};
    return {true, "covered block lies inside the union"};
  }

  WitnessCheck operator()(const TsEvasion& w) const {
    if (w.coalition.empty()) return {false, "empty coalition"};
    if (!distinct_in_range(w.coalition, s.size())) return {false, "coalition indices repeated or out of range"};
    if (w.coalition.size() > w.strength) return {false, "coalition larger than the declared strength"};
    if (w.outsider >= s.size()) return {false, "outsider index out of range"};
    if (std::find(w.coalition.begin(), w.coalition.end(), w.outsider) != w.coalition.end())
      return {false, "outsider belongs to the coalition"};
    if (!points_valid(w.pirate, s.v())) return {false, "pirate set not ascending or out of range"};
    if (w.pirate.size() != s.w()) return {false, "pirate set size differs from w"};
    const Bitset u = union_mask(s, w.coalition);
    for (auto p : w.pirate)
      if (!u.test(p)) return {false, "pirate point " + std::to_string(p) + " outside the coalition union"};
    auto overlap = [&](BlockIndex b) {
      return static_cast<std::size_t>(std::count_if(w.pirate.begin(), w.pirate.end(),
                                                    [&](Point p) { return s.block(b).contains(p); }));
    };
    const auto outsider_overlap = overlap(w.outsider);
    for (auto j : w.coalition)
      if (overlap(j) > outsider_overlap)
        return {false, "coalition member " + std::to_string(j) + " beats the outsider"};
    return {true, "outsider ties or beats every coalition member"};
  }

  WitnessCheck operator()(const IppsAmbiguity& w) const {
    if (!points_valid(w.pirate, s.v())) return {false, "pirate set not ascending or out of range"};
    if (w.pirate.size() < s.w()) return {false, "pirate set smaller than w"};
    if (w.parent_sets.empty()) return {false, "no parent sets"};
    Bitset pirate = Bitset::from_indices(s.v(), w.pirate);
    std::vector<BlockIndex> common;
    for (std::size_t k = 0; k < w.parent_sets.size(); ++k) {
      const auto& parents = w.parent_sets[k];
      if (parents.empty() || parents.size() > w.strength)
        return {false, "parent set " + std::to_string(k) + " has invalid size"};
      if (!distinct_in_range(parents, s.size())) return {false, "parent set indices repeated or out of range"};
      if (!pirate.is_subset_of(union_mask(s, parents)))
        return {false, "parent set " + std::to_string(k) + " does not cover the pirate set"};
      Coalition sorted = parents;
      std::sort(sorted.begin(), sorted.end());
      if (k == 0) {
        common = sorted;
      } else {
        std::vector<BlockIndex> next;
        std::set_intersection(common.begin(), common.end(), sorted.begin(), sorted.end(), std::back_inserter(next));
        common = std::move(next);
      }
    }
    if (!common.empty()) return {false, "block " + std::to_string(common.front()) + " is common to all parent sets"};
    return {true, "parent sets have empty common intersection"};
  }

  WitnessCheck operator()(const SubsetMultiplicity& w) const {
    if (!points_valid(w.subset, s.v())) return {false, "subset not ascending or out of range"};
    std::uint64_t count = 0;
    for (const auto& b : s.blocks())
      if (std::all_of(w.subset.begin(), w.subset.end(), [&](Point p) { return b.contains(p); })) ++count;
    if (count != w.count) return {false, "subset lies in " + std::to_string(count) + " blocks, not " + std::to_string(w.count)};
    const bool breaks = w.relation == Multiplicity::Exactly ? count != w.required : count > w.required;
    if (!breaks) return {false, "count satisfies the requirement"};
    return {true, "subset multiplicity breaks the requirement"};
  }
};

}  // namespace

void render_witness(std::ostream& out, const Witness& w) { std::visit(Renderer{out}, w); }

std::string render_witness(const Witness& w) {
  std::ostringstream out;
  render_witness(out, w);
  return out.str();
}

Witness parse_witness(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty() || lines[0].key != "witness" || lines[0].args.empty()) fail("missing 'witness <kind>' header");
  const auto& kind = lines[0].args[0];
  if (kind == "cff-cover") {
    if (lines.size() != 3) fail("cff-cover takes 'block' and 'cover' lines");
    CffCover w;
    w.strength = strength_of(lines[0]);
    w.b0 = static_cast<BlockIndex>(single(expect(lines, 1, "block")));
    w.cover = ints<BlockIndex>(expect(lines, 2, "cover"));
    return w;
  }
  if (kind == "ts-evasion") {
    if (lines.size() != 4) fail("ts-evasion takes 'coalition', 'pirate' and 'outsider' lines");
    TsEvasion w;
    w.strength = strength_of(lines[0]);
    w.coalition = ints<BlockIndex>(expect(lines, 1, "coalition"));
    w.pirate = ints<Point>(expect(lines, 2, "pirate"));
    w.outsider = static_cast<BlockIndex>(single(expect(lines, 3, "outsider")));
    return w;
  }
  if (kind == "ipps-ambiguity") {
    if (lines.size() < 3) fail("ipps-ambiguity needs a 'pirate' line and at least one 'parents' line");
    IppsAmbiguity w;
    w.strength = strength_of(lines[0]);
    w.pirate = ints<Point>(expect(lines, 1, "pirate"));
    for (std::size_t i = 2; i < lines.size(); ++i) w.parent_sets.push_back(ints<BlockIndex>(expect(lines, i, "parents")));
    return w;
  }
  if (kind == "subset-multiplicity") {
    if (lines.size() != 4 || lines[0].args.size() != 1) fail("subset-multiplicity takes 'subset', 'count', 'required'");
    SubsetMultiplicity w;
    w.subset = ints<Point>(expect(lines, 1, "subset"));
    w.count = single(expect(lines, 2, "count"));
    const auto& req = expect(lines, 3, "required");
    if (req.args.size() != 2) fail("'required' takes a relation and a value");
    if (req.args[0] == "exactly") {
      w.relation = Multiplicity::Exactly;
    } else if (req.args[0] == "at-most") {
      w.relation = Multiplicity::AtMost;
    } else {
      fail("unknown relation '" + req.args[0] + "'");
    }
    w.required = to_uint(req.args[1]);
    return w;
  }
  fail("unknown kind '" + kind + "'");
}

Witness parse_witness(const std::string& text) {
  std::istringstream in(text);
  return parse_witness(in);
}

WitnessCheck check_witness(const SetSystem& s, const Witness& w) { return std::visit(Checker{s}, w); }

std::string_view witness_kind(const Witness& w) {
  static constexpr std::string_view names[] = {"cff-cover", "ts-evasion", "ipps-ambiguity", "subset-multiplicity"};
  return names[w.index()];
}

}  // namespace acs
