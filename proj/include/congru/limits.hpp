#pragma once

// Truncated p-adic and profinite integers.
//
// A base-p approximation at precision N is the digit vector of an element of
// Z/p^N Z, least significant first. A factorial approximation at precision N
// holds digits c_1..c_N with 0 <= c_i <= i and weights i!, i.e. an element of
// Z/(N+1)! Z. Both are mixed-radix numbers; arithmetic is done digit-wise with
// carries and never goes through a big integer.
//
// Level rings: level n of the base-p tower is Z/p^n Z, level n of the
// factorial tower is Z/n! Z.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "congru/finite_cp.hpp"
#include "congru/ringcore.hpp"

namespace congru {

enum class LimitKind { base_p, factorial };

class LimitShape {
 public:
  static LimitShape base_p(std::uint64_t p, unsigned precision);
  static LimitShape factorial(unsigned precision);

  LimitKind kind() const noexcept { return kind_; }
  // 0 for the factorial kind.
  std::uint64_t prime() const noexcept { return prime_; }
  unsigned precision() const noexcept { return precision_; }

  // Radix of digit position i (0-based): p, or i + 2 for factorial.
  std::uint64_t radix(std::size_t i) const noexcept;
  // p^N, or (N+1)!.
  Int modulus() const;
  // Exponent e with modulus = p^e (resp. e!): N, or N + 1.
  unsigned modulus_exponent() const noexcept;

  bool operator==(const LimitShape&) const = default;

 private:
  LimitShape(LimitKind kind, std::uint64_t prime, unsigned precision)
      : kind_(kind), prime_(prime), precision_(precision) {}

  LimitKind kind_;
  std::uint64_t prime_;
  unsigned precision_;
};

class LimitApprox {
 public:
  LimitApprox(LimitShape shape, std::vector<std::uint64_t> digits);

  static LimitApprox zero(const LimitShape& shape);

  const LimitShape& shape() const noexcept { return shape_; }
  std::span<const std::uint64_t> digits() const noexcept { return digits_; }
  std::uint64_t digit(std::size_t i) const { return digits_.at(i); }
  bool is_zero() const noexcept;

  bool operator==(const LimitApprox&) const = default;

 private:
  LimitShape shape_;
  std::vector<std::uint64_t> digits_;
};

// Digits of z mod p^N (resp. (N+1)!); negative z wraps, giving the tail of
// top digits for -1 and friends.
LimitApprox from_int(const LimitShape& shape, const Int& z);

// The canonical representative in [0, modulus).
Int to_int(const LimitApprox& x);

LimitApprox operator+(const LimitApprox& x, const LimitApprox& y);
LimitApprox operator-(const LimitApprox& x);
LimitApprox operator-(const LimitApprox& x, const LimitApprox& y);
LimitApprox operator*(const LimitApprox& x, const LimitApprox& y);
// Multiplication by a small natural, digit-wise.
LimitApprox scale(const LimitApprox& x, std::uint64_t k);

/// Valuation at finite precision.
///
/// The value is the largest s with p^s (resp. s!) dividing x. When x is zero
/// at this precision only a lower bound is certified: saturated is set and
/// value is the modulus exponent (N for base p, N+1 for factorial).
struct Valuation {
  unsigned value;
  bool saturated;

  bool operator==(const Valuation&) const = default;
};

// For base p: length of the leading zero-digit block. For factorial: one
// more than that, since c_0 (weight 0! = 1) is always zero and 1! | x.
Valuation val(const LimitApprox& x);

/// 2^{-exponent}; upper_bound marks "at most" when precision ran out.
struct Distance {
  unsigned exponent;
  bool upper_bound;

  bool operator==(const Distance&) const = default;
};

Distance dist(const LimitApprox& x, const LimitApprox& y);

// True when d1 <= d2 is certain at this precision.
bool distance_le(const Distance& d1, const Distance& d2);

// pi(P_k(iota(x))) at the precision of x.
LimitApprox phat_eval(std::uint64_t k, const LimitApprox& x);

/// Truncated Mahler series sum_{k<K} a_k P^_k. All coefficients share one
/// shape.
class MahlerSeries {
 public:
  MahlerSeries(LimitShape shape, std::vector<LimitApprox> coeffs);

  static MahlerSeries from_integers(const LimitShape& shape, std::span<const Int> coeffs);

  const LimitShape& shape() const noexcept { return shape_; }
  const std::vector<LimitApprox>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

 private:
  LimitShape shape_;
  std::vector<LimitApprox> coeffs_;
};

// Sum over k < cutoff (default: all stored terms). Stored terms at or past
// the cutoff are dropped only if each vanishes at this precision; otherwise
// PreconditionError, since the truncation could not be certified.
LimitApprox mahler_eval(const MahlerSeries& s, const LimitApprox& x,
                        std::optional<std::size_t> cutoff = std::nullopt);

using LimitFunction = std::function<LimitApprox(const LimitApprox&)>;

// p^n, or n!.
Int level_modulus(LimitKind kind, std::uint64_t p, unsigned n);

struct LevelFn {
  unsigned level;
  FiniteFn table;
};

// phi_n = pi_n o Phi o iota_n, tabulated over the level-n ring. `working` is
// the precision Phi is evaluated at; the level must not exceed it.
LevelFn level_restrict(const LimitFunction& phi, const LimitShape& working, unsigned n);

// Levels 1..count at the working precision.
std::vector<LevelFn> level_tower(const LimitFunction& phi, const LimitShape& working,
                                 unsigned count);

struct SystemWitness {
  unsigned n;
  unsigned m;
  std::uint64_t x;
};

struct SystemCheck {
  bool holds;
  std::optional<SystemWitness> witness;

  explicit operator bool() const noexcept { return holds; }
};

// levels[i] is psi_{i+1}: Z/M_{mu(i+1)} -> Z/M_{i+1} with M the level
// modulus. Checks pi_{n,m} o psi_n = psi_m o pi_{mu(n),mu(m)} for all
// 1 <= m <= n. An empty mu means the identity.
SystemCheck check_inverse_system(std::span<const LevelFn> levels, LimitKind kind,
                                 std::uint64_t p, std::span<const unsigned> mu = {});

CpCheck is_cp_level(const LevelFn& phi);

// For all x, y and j <= n: p^j | x - y implies p^j | phi(x) - phi(y).
CpCheck check_one_lipschitz(const LevelFn& phi, std::uint64_t p);

// a_0 = 0, a_k = 1 for 1 <= k < p, a_k = p^{nu_p(k) - 1} for p <= k < K.
MahlerSeries lcm_free_series(std::uint64_t p, std::size_t K, unsigned N);

}  // namespace congru
