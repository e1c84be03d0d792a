#pragma once

#include <cstdint>
#include <vector>

namespace acs {

/// Advances `combo` (strictly ascending, values < n) to the next k-subset
/// in lexicographic order. Returns false after the last one.
inline bool next_combination_lex(std::vector<std::uint32_t>& combo, std::uint32_t n) {
  const std::size_t k = combo.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Advances `combo` to the next k-subset of {0..n-1} in colexicographic order
/// (ordered by largest element first).
inline bool next_combination_colex(std::vector<std::uint32_t>& combo, std::uint32_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t limit = (i + 1 < k) ? combo[i + 1] : n;
    if (combo[i] + 1 < limit) {
      ++combo[i];
      for (std::size_t j = 0; j < i; ++j) combo[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

inline std::vector<std::uint32_t> first_combination(std::size_t k) {
  std::vector<std::uint32_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<std::uint32_t>(i);
  return combo;
}

/// Calls fn(combo) for every k-subset of `items` in lexicographic order of
/// positions. fn returns false to stop early; the function then returns false.
template <typename T, typename Fn>
bool for_each_subset(const std::vector<T>& items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return true;
  auto idx = first_combination(k);
  std::vector<T> picked(k);
  do {
    for (std::size_t i = 0; i < k; ++i) picked[i] = items[idx[i]];
    if (!fn(picked)) return false;
  } while (k > 0 && next_combination_lex(idx, static_cast<std::uint32_t>(items.size())));
  return true;
}

}  // namespace acs
