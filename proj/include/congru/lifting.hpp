#pragma once

// Constructive lifting of a CP function Z/nZ -> Z/mZ to a CP function
// N -> N, one value at a time: F(t+1) is the least nonnegative solution of
//
//   x = F(i)                 (mod t+1-i)   for i = 0 .. t-1
//   x = iota_m(f(pi_n(t+1))) (mod m)
//
// When m | n every step is solvable. When m does not divide n the procedure
// still runs and reports the first step whose system is infeasible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "congru/finite_cp.hpp"
#include "congru/ringcore.hpp"

namespace congru {

/// F(0), ..., F(T) for some function N -> Z. Never empty.
class NatPrefix {
 public:
  explicit NatPrefix(std::vector<Int> values);

  const std::vector<Int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  // Largest argument covered, i.e. T.
  std::size_t last() const noexcept { return values_.size() - 1; }
  const Int& operator[](std::size_t u) const { return values_.at(u); }

  bool is_prefix_of(const NatPrefix& longer) const;
  bool operator==(const NatPrefix&) const = default;

 private:
  std::vector<Int> values_;
};

struct LiftFailure {
  std::uint64_t step;         // the argument t+1 whose value could not be chosen
  CongruenceSystem system;    // the infeasible system for that step
  CrtConflict conflict;       // indices into system
  NatPrefix partial;          // F(0) .. F(step-1)
};

inline constexpr const char* kLeastSolutionTieBreak =
    "least nonnegative solution of each step system; F(0) = iota_m(f(0))";

struct LiftReport {
  std::variant<NatPrefix, LiftFailure> outcome;
  std::string tie_break = kLeastSolutionTieBreak;

  bool succeeded() const noexcept { return std::holds_alternative<NatPrefix>(outcome); }
  const NatPrefix& prefix() const { return std::get<NatPrefix>(outcome); }
  const LiftFailure& failure() const { return std::get<LiftFailure>(outcome); }
};

struct LiftOptions {
  // Before every step, re-derive solvability from the pairwise gcd
  // conditions and fail loudly (InternalError) if they disagree with the
  // merge solver, or if they fail while m | n.
  bool cross_check_conditions = false;
};

// The congruence system for choosing F(t+1) given F(0..t).
CongruenceSystem step_system(const FiniteFn& f, const NatPrefix& values);

// Requires f CP. T >= 0.
LiftReport lift_prefix(const FiniteFn& f, std::uint64_t T, LiftOptions options = {});

// Choice-independent obstruction at one step. For i < step let
// g = gcd(step - i, m). Every lift has F(i) = iota(f(i mod n)) and
// F(step) = iota(f(step mod n)) modulo m, hence modulo g, while CP needs
// F(step) = F(i) (mod g). Reports the least i where those two forced classes
// differ, as the pair of congruences modulo g.
struct ForcedObstruction {
  std::uint64_t earlier;
  Congruence from_earlier;
  Congruence from_target;
};
std::optional<ForcedObstruction> forced_obstruction(const FiniteFn& f, std::uint64_t step);

// (x - y) | F(x) - F(y) for all y < x in the prefix. Witness is (x, y).
CpCheck is_cp_prefix(const NatPrefix& values);

// pi_m(F(u)) = f(pi_n(u)) for every u in the prefix, plus is_cp_prefix.
bool verify_lift(const NatPrefix& values, const FiniteFn& f);

// g = pi_s o F o iota_r with F the lift of f to r-1. Requires m | n, m | s,
// n | r, s | r and f CP. The result is re-checked (CP and pi_{s,m} o g =
// f o pi_{r,n}) before it is returned.
FiniteFn lift_between_finite(const FiniteFn& f, std::uint64_t r, std::uint64_t s);

// The three commuting relations pi_s o F = g o pi_r, pi_m o F = f o pi_n and
// pi_{s,m} o g = f o pi_{r,n}, checked on the available prefix.
bool full_diagram_check(const FiniteFn& f, const FiniteFn& g, const NatPrefix& values);

}  // namespace congru
