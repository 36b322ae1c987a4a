#pragma once

// Functions Z/nZ -> Z/mZ as value tables, congruence-preservation checks,
// enumeration of all CP tables, and the representation of CP functions as
// sums of binomial polynomials with lcm-divisible coefficients.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "congru/ringcore.hpp"

namespace congru {

/// A total function Z/nZ -> Z/mZ stored as table[x] = f(x).
class FiniteFn {
 public:
  FiniteFn(std::uint64_t n, std::uint64_t m, std::vector<std::uint64_t> table);

  template <class F>
  static FiniteFn tabulate(std::uint64_t n, std::uint64_t m, F&& f) {
    std::vector<std::uint64_t> table(n);
    for (std::uint64_t x = 0; x < n; ++x) table[x] = f(x);
    return FiniteFn(n, m, std::move(table));
  }

  static FiniteFn constant(std::uint64_t n, std::uint64_t m, std::uint64_t c);
  static FiniteFn identity(std::uint64_t n);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  std::span<const std::uint64_t> table() const noexcept { return table_; }
  std::uint64_t operator()(std::uint64_t x) const { return table_.at(x); }

  bool operator==(const FiniteFn&) const = default;

 private:
  std::uint64_t n_;
  std::uint64_t m_;
  std::vector<std::uint64_t> table_;
};

struct PairWitness {
  std::uint64_t x;
  std::uint64_t y;

  bool operator==(const PairWitness&) const = default;
};

struct CpCheck {
  bool holds;
  std::optional<PairWitness> witness;

  explicit operator bool() const noexcept { return holds; }
};

// d divides e in Z/mZ, i.e. d*k = e for some k; decided as gcd(d, m) | e.
bool divides_in_ring(std::uint64_t m, std::uint64_t d, std::uint64_t e);

// For all x, y in Z/nZ: pi_m(iota(x) - iota(y)) divides f(x) - f(y) in Z/mZ.
// On failure the witness is the first violating (x, y) in lexicographic order.
CpCheck is_cp_finite(const FiniteFn& f);

// Same-ring specialization; throws unless n == m.
CpCheck is_cp_samering(const FiniteFn& f);

// Visits every CP table Z/nZ -> Z/mZ in lexicographic order. The visitor
// returns false to stop early.
void for_each_cp(std::uint64_t n, std::uint64_t m,
                 const std::function<bool(const FiniteFn&)>& visit);

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// Materialized for_each_cp. Throws LimitError once more than `cap` functions
// would be produced.
std::vector<FiniteFn> enumerate_cp(std::uint64_t n, std::uint64_t m,
                                   std::size_t cap = kDefaultEnumerationCap);

std::size_t count_cp(std::uint64_t n, std::uint64_t m);

/// Coefficients a_0 .. a_{nu(m)-1} with f = sum_k pi_m(a_k) P_k^{n,m}.
///
/// Canonical form: a_k is the least nonnegative integer that is a multiple of
/// lcm(k) and has the prescribed image mod m. These live in
/// [0, lcm(lcm(k), m)), so two canonical tuples are equal iff their images
/// pi_m(a_k) are.
class CpCoeffs {
 public:
  CpCoeffs(std::uint64_t n, std::uint64_t m, std::vector<Int> coeffs);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  bool operator==(const CpCoeffs&) const = default;

 private:
  std::uint64_t n_;
  std::uint64_t m_;
  std::vector<Int> coeffs_;
};

// The canonical representative of a lcm(k)-multiple congruent to `value`
// modulo m. `value` must itself admit such a representative.
Int canonical_coefficient(unsigned long k, const Int& value, std::uint64_t m);

// Number of distinct images pi_m(a) over multiples a of lcm(k): m / gcd(lcm(k), m).
std::uint64_t admissible_coefficient_count(unsigned long k, std::uint64_t m);

// Requires m | n, m >= 2 and f CP (otherwise PreconditionError, with the
// witness pair in the message).
CpCoeffs represent_cp(const FiniteFn& f);

Residue eval_repr(const CpCoeffs& c, const Residue& x);

// eval_repr at every x in Z/nZ.
FiniteFn eval_repr_table(const CpCoeffs& c);

}  // namespace congru
