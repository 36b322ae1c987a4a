#pragma once

// Exact integer and residue arithmetic shared by every other module:
// canonical projections between residue rings, the generalized Chinese
// remainder theorem for non-coprime moduli, lcm(1..k), the prime-power
// helpers nu(m) and nu_p(k), and binomial polynomials P_k(x) = C(x, k).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace congru {

using Int = mpz_class;

// x mod m in [0, m). m >= 1.
Int canonical_mod(const Int& x, const Int& m);

std::string to_string(const Int& x);

/// An element of Z/kZ held as its representative in {0, ..., k-1}.
///
/// Construction reduces any integer canonically, which is the projection
/// pi_k; value() is the embedding iota_k back into N.
class Residue {
 public:
  Residue(const Int& value, const Int& modulus);

  const Int& value() const noexcept { return value_; }
  const Int& modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const;

  bool operator==(const Residue& rhs) const {
    return modulus_ == rhs.modulus_ && value_ == rhs.value_;
  }

 private:
  void check_same_ring(const Residue& rhs) const;

  Int value_;
  Int modulus_;
};

// pi_m: Z -> Z/mZ.
Residue proj(const Int& x, const Int& m);

// pi_{n,m} = pi_m o iota_n for a residue of modulus n. Defined for every
// pair n, m; it is a ring homomorphism only when m | n.
Residue proj(const Residue& x, const Int& m);

struct Congruence {
  Int target;
  Int modulus;
};

/// A nonempty system x = target_i (mod modulus_i), moduli >= 1.
class CongruenceSystem {
 public:
  CongruenceSystem() = default;
  explicit CongruenceSystem(std::vector<Congruence> equations);

  void add(Int target, Int modulus);

  const std::vector<Congruence>& equations() const noexcept { return equations_; }
  std::size_t size() const noexcept { return equations_.size(); }
  bool empty() const noexcept { return equations_.empty(); }
  const Congruence& operator[](std::size_t i) const { return equations_.at(i); }

 private:
  std::vector<Congruence> equations_;
};

struct CrtSolution {
  Int least;   // least nonnegative solution
  Int period;  // lcm of all moduli; solutions are least + k * period
};

// Indices i < j of two equations with a_i != a_j (mod gcd(n_i, n_j)).
struct CrtConflict {
  std::size_t first;
  std::size_t second;
};

struct CrtResult {
  std::optional<CrtSolution> solution;
  std::optional<CrtConflict> conflict;

  bool feasible() const noexcept { return solution.has_value(); }
};

// Generalized CRT by pairwise merging. Infeasibility is a normal outcome and
// carries one violating pair: the first i paired with the equation whose
// merge failed.
CrtResult gcrt_solve(const CongruenceSystem& system);

// The classical pairwise criterion: a_i = a_j (mod gcd(n_i, n_j)) for all
// i < j. Returns the lexicographically first violating pair, if any.
std::optional<CrtConflict> gcrt_pairwise_violation(const CongruenceSystem& system);

// lcm(1, ..., k) with lcm(0) = 1.
Int lcm_upto(unsigned long k);

bool is_prime(std::uint64_t n);

// Largest prime-power component of m (trial division); nu(1) = 1.
std::uint64_t nu_of_modulus(std::uint64_t m);

// floor(log_p k) by integer comparison. p prime, k >= 1.
unsigned nu_p(std::uint64_t p, const Int& k);

// The product formula prod_{l<k}(x - l) / k!, valid for every integer x.
// For 0 <= x < k this is 0.
Int binomial_poly(unsigned long k, const Int& x);

// P_k(x) for x >= 0 (the natural-number evaluation used throughout).
Int binom_poly_eval(unsigned long k, const Int& x);

// P_k^{n,m}(x) = pi_m(P_k(iota_n(x))).
Residue binom_poly_mod(unsigned long k, const Residue& x, const Int& m);

}  // namespace congru
