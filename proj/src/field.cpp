#include "acs/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "acs/error.hpp"

namespace acs {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::array<std::uint32_t, 10> kPrimePowers = {4, 8, 9, 16, 25, 27, 32, 49, 64, 81};

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant term first

Poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Poly c(len);
  for (auto& x : c) {
    x = value % p;
    value /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = [&] {
    for (std::uint32_t x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return 1u;
  }();
  while (a.size() > dm) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Trial division by every monic polynomial of degree <= k/2.
bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = decode(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lowest monic irreducible of degree k, ordered by the encoding of its lower coefficients.
Poly find_modulus(std::uint32_t p, std::uint32_t k) {
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint32_t low = 0; low < count; ++low) {
    Poly f = decode(low, p, k);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool GaloisField::supported(std::uint32_t q) {
  return (is_prime(q) && q <= 97) || std::find(kPrimePowers.begin(), kPrimePowers.end(), q) != kPrimePowers.end();
}

GaloisField::GaloisField(std::uint32_t q) : q_(q), p_(0), k_(0) {
  if (!supported(q)) throw Error(ErrorCode::UnsupportedFieldOrder, "field order " + std::to_string(q) + " not supported");
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  for (std::uint32_t r = q; r > 1; r /= p_) ++k_;
  modulus_ = find_modulus(p_, k_);

  add_.resize(std::size_t{q} * q);
  mul_.resize(std::size_t{q} * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  std::vector<Poly> elems(q);
  for (std::uint32_t a = 0; a < q; ++a) elems[a] = decode(a, p_, k_);

  for (std::uint32_t a = 0; a < q; ++a) {
    Poly n(k_);
    for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - elems[a][i]) % p_;
    neg_[a] = encode(n, p_);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (elems[a][i] + elems[b][i]) % p_;
      add_[a * q + b] = encode(s, p_);

      Poly prod(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p_;
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q + b] = encode(r, p_);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = b;
        break;
      }
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = 1, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace acs
