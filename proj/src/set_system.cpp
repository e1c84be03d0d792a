#include "acs/set_system.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "acs/combinatorics.hpp"
#include "acs/error.hpp"

namespace acs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::DuplicateBlock: return "DuplicateBlock";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::TauOutOfRange: return "TauOutOfRange";
    case ErrorCode::ParamsInvalid: return "ParamsInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnsupportedFieldOrder: return "UnsupportedFieldOrder";
    case ErrorCode::NotADesign: return "NotADesign";
    case ErrorCode::CongruenceViolated: return "CongruenceViolated";
    case ErrorCode::InconsistentBounds: return "InconsistentBounds";
  }
  return "Unknown";
}

Block::Block(std::vector<Point> points, std::uint32_t v)
    : points_(std::move(points)), mask_(Bitset::from_indices(v, points_)) {}

std::size_t intersection_size(const Block& a, const Block& b) noexcept {
  if (a.mask().size() == b.mask().size()) return a.mask().intersection_count(b.mask());
  // Different ground sets: merge the sorted point lists.
  std::size_t n = 0;
  auto i = a.points().begin();
  auto j = b.points().begin();
  while (i != a.points().end() && j != b.points().end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

SetSystem SetSystem::create(std::uint32_t v, std::vector<std::vector<Point>> blocks) {
  const auto w = blocks.empty() ? 0U : static_cast<std::uint32_t>(blocks.front().size());
  return create(v, w, std::move(blocks));
}

SetSystem SetSystem::create(std::uint32_t v, std::uint32_t w, std::vector<std::vector<Point>> blocks) {
  if (v > kMaxGroundSet)
    throw Error(ErrorCode::ParamsInvalid, "ground set size " + std::to_string(v) + " exceeds " +
                                              std::to_string(kMaxGroundSet));
  if (w > v) throw Error(ErrorCode::ParamsInvalid, "block width exceeds ground set size");

  for (auto& points : blocks) {
    if (points.size() != w)
      throw Error(ErrorCode::NonUniform, "block of size " + std::to_string(points.size()) +
                                             " in a system of width " + std::to_string(w));
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
      throw Error(ErrorCode::NonUniform, "block repeats a point: " + format_points(points));
    if (!points.empty() && points.back() >= v)
      throw Error(ErrorCode::PointOutOfRange,
                  "point " + std::to_string(points.back()) + " not below v=" + std::to_string(v));
  }
  std::sort(blocks.begin(), blocks.end());
  if (auto dup = std::adjacent_find(blocks.begin(), blocks.end()); dup != blocks.end())
    throw Error(ErrorCode::DuplicateBlock, "block " + format_points(*dup) + " appears twice");

  SetSystem s;
  s.v_ = v;
  s.w_ = w;
  s.blocks_.reserve(blocks.size());
  for (auto& points : blocks) s.blocks_.emplace_back(std::move(points), v);
  return s;
}

Bitset SetSystem::union_of(const std::vector<std::uint32_t>& indices) const {
  Bitset u(v_);
  for (auto i : indices) u |= blocks_.at(i).mask();
  return u;
}

OwnSubsetReport enumerate_own_subsets(const SetSystem& s, std::size_t block_index, std::uint32_t tau) {
  if (block_index >= s.size())
    throw Error(ErrorCode::ParamsInvalid, "block index " + std::to_string(block_index) + " out of range");
  if (tau < 1 || tau > s.w())
    throw Error(ErrorCode::TauOutOfRange, "tau=" + std::to_string(tau) + " outside [1, w]");

  const Block& target = s.block(block_index);
  // Only intersections of size >= tau can swallow a tau-subset.
  std::vector<Bitset> shadows;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j == block_index) continue;
    Bitset meet = target.mask() & s.block(j).mask();
    if (meet.count() >= tau) shadows.push_back(std::move(meet));
  }

  OwnSubsetReport report;
  report.block_index = block_index;
  report.tau = tau;
  Bitset candidate(s.v());
  for_each_subset(target.points(), tau, [&](const std::vector<Point>& subset) {
    candidate.clear();
    for (auto p : subset) candidate.set(p);
    const bool shared = std::any_of(shadows.begin(), shadows.end(),
                                    [&](const Bitset& meet) { return candidate.is_subset_of(meet); });
    if (!shared) report.own_subsets.push_back(subset);
    return true;
  });
  report.count = report.own_subsets.size();
  return report;
}

namespace {

std::uint32_t parse_uint(std::string_view token, int line_no) {
  std::uint32_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint32_t parse_keyed(std::string_view token, std::string_view key, int line_no) {
  if (token.substr(0, key.size()) != key)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected '" +
                                           std::string(key) + "<n>', got '" + std::string(token) + "'");
  return parse_uint(token.substr(key.size()), line_no);
}

}  // namespace

LoadedSystem parse_set_system(std::istream& in) {
  LoadedSystem loaded;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::uint32_t v = 0, w = 0, m = 0;
  std::vector<std::vector<Point>> blocks;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') {
      loaded.comments.push_back(line.substr(1));
      continue;
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "setsystem")
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected 'setsystem v=<v> w=<w> m=<M>'");
      v = parse_keyed(tokens[1], "v=", line_no);
      w = parse_keyed(tokens[2], "w=", line_no);
      m = parse_keyed(tokens[3], "m=", line_no);
      if (v > kMaxGroundSet) throw Error(ErrorCode::ParamsInvalid, "v exceeds " + std::to_string(kMaxGroundSet));
      have_header = true;
      continue;
    }

    if (blocks.size() == m)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": trailing data after " + std::to_string(m) + " blocks");
    if (tokens.size() != w)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(w) + " points, got " + std::to_string(tokens.size()));
    std::vector<Point> points;
    points.reserve(w);
    for (auto tok : tokens) {
      const auto p = parse_uint(tok, line_no);
      if (p >= v)
        throw Error(ErrorCode::PointOutOfRange,
                    "line " + std::to_string(line_no) + ": point " + std::to_string(p) + " not below v=" +
                        std::to_string(v));
      if (!points.empty() && p <= points.back())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": points not strictly ascending");
      points.push_back(p);
    }
    blocks.push_back(std::move(points));
  }

  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'setsystem' header");
  if (blocks.size() != m)
    throw Error(ErrorCode::ParseError,
                "header declares m=" + std::to_string(m) + " but found " + std::to_string(blocks.size()) + " blocks");
  loaded.system = SetSystem::create(v, w, std::move(blocks));
  return loaded;
}

LoadedSystem parse_set_system(const std::string& text) {
  std::istringstream in(text);
  return parse_set_system(in);
}

LoadedSystem load_set_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_set_system(in);
}

std::string format_points(const std::vector<Point>& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(points[i]);
  }
  return out;
}

void render_set_system(std::ostream& out, const SetSystem& s, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << '#' << c << '\n';
  out << "setsystem v=" << s.v() << " w=" << s.w() << " m=" << s.size() << '\n';
  for (const auto& b : s.blocks()) out << format_points(b.points()) << '\n';
}

std::string render_set_system(const SetSystem& s, const std::vector<std::string>& comments) {
  std::ostringstream out;
  render_set_system(out, s, comments);
  return out.str();
}

}  // namespace acs
