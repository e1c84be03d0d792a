#include "acs/bitset.hpp"

#include <bit>

namespace acs {

void Bitset::clear() noexcept {
  for (auto& word : words_) word = 0;
}

std::size_t Bitset::count() const noexcept {
  std::size_t total = 0;
  for (auto word : words_) total += static_cast<std::size_t>(std::popcount(word));
  return total;
}

bool Bitset::none() const noexcept {
  for (auto word : words_)
    if (word != 0) return false;
  return true;
}

std::size_t Bitset::intersection_count(const Bitset& other) const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return total;
}

bool Bitset::intersects(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t word_index = from >> 6;
  std::uint64_t word = words_[word_index] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      std::size_t found = (word_index << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return found < size_ ? found : size_;
    }
    if (++word_index >= words_.size()) return size_;
    word = words_[word_index];
  }
}

std::vector<std::uint32_t> Bitset::to_indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = find_first(); i < size_; i = find_next(i + 1))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

Bitset Bitset::from_indices(std::size_t size, const std::vector<std::uint32_t>& indices) {
  Bitset b(size);
  for (auto i : indices) b.set(i);
  return b;
}

std::size_t BitsetHash::operator()(const Bitset& b) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ b.size();
  for (auto word : b.words()) {
    h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace acs
