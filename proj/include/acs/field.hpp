#pragma once

#include <cstdint>
#include <vector>

namespace acs {

/// Element of GF(q), encoded as sum c_i p^i of its polynomial coefficients.
using FieldElement = std::uint32_t;

/// Table-driven arithmetic in GF(q) for the small orders the geometry
/// constructions need: primes up to 97 and 4, 8, 9, 16, 25, 27, 32, 49, 64, 81.
class GaloisField {
 public:
  /// Throws Error(UnsupportedFieldOrder) for any other q.
  explicit GaloisField(std::uint32_t q);

  static bool supported(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  /// Monic modulus coefficients, constant term first (size degree()+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * q_ + b]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_;
};

}  // namespace acs
