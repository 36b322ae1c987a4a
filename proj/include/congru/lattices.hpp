#pragma once

// Eventually periodic subsets of Z, polynomial preimages, and lattices of
// sets generated by one set under union, intersection and decrement.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congru/ringcore.hpp"

namespace congru {

/// A set X of integers given by a period d, a bound B, residue laws for
/// x > B and x < -B, and explicit bits for -B <= x <= B.
///
/// Always kept in normal form: d is the least common period of the two
/// laws and B is the least bound for which the laws hold. Equality of sets
/// is therefore equality of representations.
class EPSet {
 public:
  EPSet(std::int64_t period, std::int64_t bound, std::vector<bool> pos, std::vector<bool> neg,
        std::vector<bool> window);

  static EPSet empty();
  static EPSet all();

  std::int64_t period() const noexcept { return period_; }
  std::int64_t bound() const noexcept { return bound_; }
  const std::vector<bool>& pos() const noexcept { return pos_; }
  const std::vector<bool>& neg() const noexcept { return neg_; }
  const std::vector<bool>& window() const noexcept { return window_; }

  bool contains(std::int64_t x) const;
  bool contains(const Int& x) const;

  // Residues r in [0, d) with r in pos() (resp. neg()).
  std::vector<std::int64_t> pos_residues() const;
  std::vector<std::int64_t> neg_residues() const;

  // F + dZ for some d and F.
  bool is_recognizable() const noexcept;
  bool has_finitely_many_negatives() const noexcept;
  bool is_finite() const noexcept;

  bool operator==(const EPSet&) const = default;

 private:
  void normalize();

  std::int64_t period_;
  std::int64_t bound_;
  std::vector<bool> pos_;
  std::vector<bool> neg_;
  std::vector<bool> window_;
};

// F + dZ. Residues must lie in [0, d).
EPSet recognizable(std::int64_t d, const std::vector<std::int64_t>& residues);

// -(d + S + dN) u F u (d + R + dN) with R, S in [0, d) and F in (-d, d).
EPSet rational_from_parts(std::int64_t d, const std::vector<std::int64_t>& S,
                          const std::vector<std::int64_t>& F,
                          const std::vector<std::int64_t>& R);

// start + dN.
EPSet arithmetic_ray(std::int64_t start, std::int64_t d);

EPSet finite_set(const std::vector<std::int64_t>& elements);

// L - t = {x - t : x in L}.
EPSet translate(const EPSet& L, std::int64_t t);

EPSet set_union(const EPSet& a, const EPSet& b);
EPSet set_intersection(const EPSet& a, const EPSet& b);
EPSet set_complement(const EPSet& a);

/// f = sum_k a_k P_k over Z with lcm(k) | a_k, P_k extended to negative
/// arguments by the product formula.
class CpPolynomial {
 public:
  explicit CpPolynomial(std::vector<Int> newton);

  // From c_0 + c_1 x + ... + c_K x^K; the Newton coefficients must still be
  // lcm-divisible.
  static CpPolynomial from_power_coeffs(const std::vector<Int>& power);

  const std::vector<Int>& newton() const noexcept { return newton_; }
  // Index of the last nonzero coefficient, 0 for constants.
  std::size_t degree() const noexcept;
  bool is_constant() const noexcept { return degree() == 0; }

  Int operator()(const Int& x) const;
  Int operator()(std::int64_t x) const;

  // K! f(x) as an integer power-basis polynomial, K = degree().
  std::vector<Int> scaled_power_coeffs() const;

 private:
  std::vector<Int> newton_;
};

// First (x, y) in [lo, hi]^2, x != y, with x - y not dividing f(x) - f(y).
std::optional<std::pair<std::int64_t, std::int64_t>> cp_violation_on_window(
    const CpPolynomial& f, std::int64_t lo, std::int64_t hi);

// First x in [lo, hi) with f(x + 1) < f(x).
std::optional<std::int64_t> monotonicity_violation(const CpPolynomial& f, std::int64_t lo,
                                                   std::int64_t hi);

// {x : f(x) in L} for recognizable L; again recognizable with L's period.
EPSet preimage_recognizable(const CpPolynomial& f, const EPSet& L);

// |x| > bound implies |f(x)| > L.bound(), so f sits in one tail regime.
std::int64_t preimage_tail_bound(const CpPolynomial& f, const EPSet& L);

// Exact {x : f(x) in L} for any L and nonconstant f.
EPSet preimage_eventual(const CpPolynomial& f, const EPSet& L);

/// A union of intersections of decrements L - i, i in [0, d).
struct LatticeExpr {
  std::vector<std::vector<std::int64_t>> terms;

  std::string to_string() const;
  EPSet evaluate(const EPSet& L) const;
};

struct UnionIntersectionResult {
  EPSet set;
  LatticeExpr expression;
  // Representatives a in [0, d) of the preimage classes, one per term.
  std::vector<std::int64_t> representatives;
};

// RHS of f^{-1}(L) = U_{a in f^{-1}(L)} n_{t in L - a} (L - t) for
// recognizable L. Translates depend on t mod d only, so a runs over residue
// representatives and t over [0, d). f must be nondecreasing on
// [-window, window] (default 4d).
UnionIntersectionResult union_intersection_preimage(
    const CpPolynomial& f, const EPSet& L, std::optional<std::int64_t> window = std::nullopt);

struct MembershipResult {
  bool member;
  std::optional<LatticeExpr> certificate;
  std::string reason;
};

// Decides X in L_Z(L) for recognizable L.
MembershipResult lattice_membership(const EPSet& L, const EPSet& X);

// For L with finitely many negatives: a reason X is outside L_Z(L) when X
// has infinitely many negatives, otherwise nothing.
std::optional<std::string> certify_nonmembership_negatives(const EPSet& L, const EPSet& X);

}  // namespace congru
