#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "acs/bitset.hpp"

namespace acs {

using Point = std::uint32_t;

/// Largest ground set accepted anywhere in the library.
inline constexpr std::uint32_t kMaxGroundSet = 4096;

class Block {
 public:
  Block() = default;
  /// `points` must already be strictly ascending and below `v`.
  Block(std::vector<Point> points, std::uint32_t v);

  const std::vector<Point>& points() const noexcept { return points_; }
  const Bitset& mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(Point p) const noexcept { return mask_.test(p); }

  friend bool operator==(const Block& a, const Block& b) { return a.points_ == b.points_; }
  friend auto operator<=>(const Block& a, const Block& b) { return a.points_ <=> b.points_; }

 private:
  std::vector<Point> points_;
  Bitset mask_;
};

std::size_t intersection_size(const Block& a, const Block& b) noexcept;

/// A uniform set system: `v` points and distinct `w`-subsets, kept in
/// lexicographic block order. Immutable once built.
class SetSystem {
 public:
  SetSystem() = default;

  /// Validates and canonicalizes. Width is taken from the first block
  /// (0 for an empty list).
  static SetSystem create(std::uint32_t v, std::vector<std::vector<Point>> blocks);
  static SetSystem create(std::uint32_t v, std::uint32_t w, std::vector<std::vector<Point>> blocks);

  std::uint32_t v() const noexcept { return v_; }
  std::uint32_t w() const noexcept { return w_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  /// Bitset over the ground set holding the union of the given blocks.
  Bitset union_of(const std::vector<std::uint32_t>& indices) const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.v_ == b.v_ && a.w_ == b.w_ && a.blocks_ == b.blocks_;
  }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t w_ = 0;
  std::vector<Block> blocks_;
};

struct OwnSubsetReport {
  std::size_t block_index = 0;
  std::uint32_t tau = 0;
  std::vector<std::vector<Point>> own_subsets;
  std::size_t count = 0;
};

/// Lists every tau-subset of block `block_index` that no other block contains.
OwnSubsetReport enumerate_own_subsets(const SetSystem& s, std::size_t block_index, std::uint32_t tau);

// Text format:
//   # comment lines
//   setsystem v=<v> w=<w> m=<M>
//   one block per line, ascending, space separated, 0-based
struct LoadedSystem {
  SetSystem system;
  std::vector<std::string> comments;  // text after '#', in file order
};

LoadedSystem parse_set_system(std::istream& in);
LoadedSystem parse_set_system(const std::string& text);
LoadedSystem load_set_system(const std::string& path);

void render_set_system(std::ostream& out, const SetSystem& s,
                       const std::vector<std::string>& comments = {});
std::string render_set_system(const SetSystem& s, const std::vector<std::string>& comments = {});

std::string format_points(const std::vector<Point>& points);

}  // namespace acs
