#pragma once

#include <cstdint>
#include <utility>

#include "acs/certificate.hpp"
#include "acs/set_system.hpp"

namespace acs {

/// Common (w-1)-point core {0..w-2} plus one private point per block.
SetSystem trivial_ts(std::uint32_t v, std::uint32_t w);

/// Lines of PG(n, q); points are normalized homogeneous coordinates
/// (first nonzero coordinate 1) in lexicographic order.
SetSystem pg_lines(std::uint32_t n, std::uint32_t q);

/// Lines of AG(n, q); point index is the coordinate vector read base q.
SetSystem ag_lines(std::uint32_t n, std::uint32_t q);

/// Circles of the inversive plane over GF(q^2): the q^2 field elements
/// followed by the point at infinity (index q^2).
SetSystem inversive_plane(std::uint32_t q);

/// Secant lines of the Hermitian curve in PG(2, q^2).
SetSystem hermitian_unital(std::uint32_t q);

/// The design each family claims to produce, with closed-form parameters.
DesignDescriptor describe_pg_lines(std::uint32_t n, std::uint32_t q);
DesignDescriptor describe_ag_lines(std::uint32_t n, std::uint32_t q);
DesignDescriptor describe_inversive_plane(std::uint32_t q);
DesignDescriptor describe_hermitian_unital(std::uint32_t q);

/// Appends d points (indices v0..v0+d-1) to every block of a
/// tau-(v0, w0, 1) design with tau = ceil((w0+d)/t^2). The result is a t-TS.
/// Throws CongruenceViolated unless d < t^2 and w0 = 1 (mod t^2), and
/// NotADesign unless `base` really is such a design.
std::pair<SetSystem, ExtensionCertificate> extend_design(const SetSystem& base, std::uint32_t d, std::uint32_t t,
                                                         DesignDescriptor descriptor = {});

/// Largest t with t^2 (tau - 1) <= w - 1, i.e. floor(sqrt((w-1)/(tau-1))).
std::uint32_t design_max_strength(std::uint32_t tau, std::uint32_t w);

inline constexpr std::uint64_t kDefaultGreedyBudget = 200'000'000ULL;

/// Greedy packing: scan w-subsets in colex order, keep each one meeting every
/// kept block in fewer than ceil(w/t^2) points. Throws BudgetExceeded when
/// C(v, w) exceeds `budget`.
SetSystem greedy_packing_ts(std::uint32_t v, std::uint32_t w, std::uint32_t t,
                            std::uint64_t budget = kDefaultGreedyBudget);

}  // namespace acs
