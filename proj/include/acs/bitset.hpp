#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace acs {

/// Fixed-size bit vector over a ground set of `size()` points.
///
/// Sized once at construction; binary operations require equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  std::size_t intersection_count(const Bitset& other) const noexcept;
  bool intersects(const Bitset& other) const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;

  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& operator&=(const Bitset& other) noexcept;
  /// Removes every bit of `other`.
  Bitset& subtract(const Bitset& other) noexcept;

  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

  /// Index of the lowest set bit at or after `from`, or size() when none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  std::vector<std::uint32_t> to_indices() const;
  static Bitset from_indices(std::size_t size, const std::vector<std::uint32_t>& indices);

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept;
};

}  // namespace acs
