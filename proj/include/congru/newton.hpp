#pragma once

// Newton (Mahler) coefficients of functions N -> Z:
//   F(x) = sum_k a_k P_k(x),  a_k = sum_{j<=k} (-1)^{k-j} C(k, j) F(j).
// F is congruence preserving iff lcm(k) divides every a_k; the two
// floor-of-exponential exemplars below are non-polynomial instances.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "congru/lifting.hpp"
#include "congru/ringcore.hpp"

namespace congru {

struct NewtonCoeffs {
  std::vector<Int> coeffs;

  bool operator==(const NewtonCoeffs&) const = default;
};

// Alternating binomial sum.
NewtonCoeffs newton_coeffs(std::span<const Int> values);
NewtonCoeffs newton_coeffs(const NatPrefix& values);

// Same coefficients via an in-place forward difference table.
NewtonCoeffs newton_coeffs_by_differences(std::span<const Int> values);

// sum_{k<=x} a_k P_k(x). Requires x < a.coeffs.size().
Int newton_eval(const NewtonCoeffs& a, std::uint64_t x);

// F(0..T) from coefficients a_0..a_K (terms beyond K are zero).
NatPrefix newton_synthesize(const NewtonCoeffs& a, std::uint64_t T);

struct LcmViolation {
  std::size_t k;
  Int coeff;
  Int lcm;
};

// Least k with lcm(k) not dividing a_k, if any.
std::optional<LcmViolation> check_lcm_divisibility(const NewtonCoeffs& a);

// 1 for x = 0, else floor(e * x!) = sum_{j<=x} x!/j!.
Int exemplar_floor_e_fact(std::uint64_t x);

// floor(e^{1/a} a^x x!) = sum_{j<=x} a^{x-j} x!/j! for a >= 2.
Int exemplar_floor_ea_fact(long a, std::uint64_t x);

}  // namespace congru
