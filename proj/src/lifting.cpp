#include "congru/lifting.hpp"

#include <numeric>

#include "congru/error.hpp"

namespace congru {

NatPrefix::NatPrefix(std::vector<Int> values) : values_(std::move(values)) {
  require(!values_.empty(), "a prefix holds at least F(0)");
}

bool NatPrefix::is_prefix_of(const NatPrefix& longer) const {
  if (size() > longer.size()) return false;
  for (std::size_t u = 0; u < size(); ++u) {
    if (values_[u] != longer.values_[u]) return false;
  }
  return true;
}

namespace {

Int as_int(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

// System for F(t+1) given F(0..t).
CongruenceSystem system_for(const FiniteFn& f, const std::vector<Int>& values) {
  const std::uint64_t t = values.size() - 1;
  const std::uint64_t next = t + 1;
  CongruenceSystem system;
  // i = t would have modulus 1; it is vacuous and omitted.
  for (std::uint64_t i = 0; i < t; ++i) system.add(values[i], as_int(next - i));
  system.add(as_int(f(next % f.n())), as_int(f.m()));
  return system;
}

}  // namespace

CongruenceSystem step_system(const FiniteFn& f, const NatPrefix& values) {
  return system_for(f, values.values());
}

LiftReport lift_prefix(const FiniteFn& f, std::uint64_t T, LiftOptions options) {
  auto check = is_cp_finite(f);
  if (!check.holds) {
    throw PreconditionError("lift_prefix requires a CP function; witness x=" +
                            std::to_string(check.witness->x) +
                            " y=" + std::to_string(check.witness->y));
  }
  const bool m_divides_n = f.n() % f.m() == 0;

  std::vector<Int> values;
  values.reserve(T + 1);
  values.push_back(as_int(f(0)));
  for (std::uint64_t step = 1; step <= T; ++step) {
    auto system = system_for(f, values);
    auto solved = gcrt_solve(system);
    if (options.cross_check_conditions) {
      auto pairwise = gcrt_pairwise_violation(system);
      if (pairwise.has_value() == solved.feasible()) {
        throw InternalError("step " + std::to_string(step) +
                            ": pairwise gcd conditions disagree with the CRT merge");
      }
      if (m_divides_n && pairwise) {
        throw InternalError("step " + std::to_string(step) +
                            ": pairwise conditions fail although m | n");
      }
    }
    if (!solved.feasible()) {
      return LiftReport{
          LiftFailure{step, std::move(system), *solved.conflict, NatPrefix(std::move(values))}};
    }
    values.push_back(solved.solution->least);
  }
  return LiftReport{NatPrefix(std::move(values))};
}

std::optional<ForcedObstruction> forced_obstruction(const FiniteFn& f, std::uint64_t step) {
  const std::uint64_t m = f.m();
  const std::uint64_t at_step = f(step % f.n());
  for (std::uint64_t i = 0; i < step; ++i) {
    const std::uint64_t g = std::gcd(step - i, m);
    const std::uint64_t earlier = f(i % f.n());
    if (earlier % g != at_step % g) {
      return ForcedObstruction{i, Congruence{as_int(earlier % g), as_int(g)},
                               Congruence{as_int(at_step % g), as_int(g)}};
    }
  }
  return std::nullopt;
}

CpCheck is_cp_prefix(const NatPrefix& values) {
  for (std::size_t x = 1; x < values.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      Int diff = values[x] - values[y];
      if (!mpz_divisible_ui_p(diff.get_mpz_t(), x - y)) return CpCheck{false, PairWitness{x, y}};
    }
  }
  return CpCheck{true, std::nullopt};
}

bool verify_lift(const NatPrefix& values, const FiniteFn& f) {
  const Int m = as_int(f.m());
  for (std::size_t u = 0; u < values.size(); ++u) {
    if (canonical_mod(values[u], m) != as_int(f(u % f.n()))) return false;
  }
  return is_cp_prefix(values).holds;
}

FiniteFn lift_between_finite(const FiniteFn& f, std::uint64_t r, std::uint64_t s) {
  const std::uint64_t n = f.n();
  const std::uint64_t m = f.m();
  require(r >= 1 && s >= 1, "moduli must be >= 1");
  require(n % m == 0, "lift_between_finite requires m | n");
  require(s % m == 0, "lift_between_finite requires m | s");
  require(r % n == 0, "lift_between_finite requires n | r");
  require(r % s == 0, "lift_between_finite requires s | r");

  auto report = lift_prefix(f, r - 1);
  if (!report.succeeded()) throw InternalError("lift with m | n reported infeasible");
  const auto& F = report.prefix();
  const Int s_int = as_int(s);
  auto g = FiniteFn::tabulate(r, s, [&](std::uint64_t x) {
    return canonical_mod(F[x], s_int).get_ui();
  });

  if (!is_cp_finite(g).holds) throw InternalError("lifted table is not CP");
  for (std::uint64_t x = 0; x < r; ++x) {
    if (g(x) % m != f(x % n)) throw InternalError("lifted table does not project onto f");
  }
  return g;
}

bool full_diagram_check(const FiniteFn& f, const FiniteFn& g, const NatPrefix& values) {
  const std::uint64_t n = f.n(), m = f.m(), r = g.n(), s = g.m();
  const Int m_int = as_int(m), s_int = as_int(s);
  for (std::size_t u = 0; u < values.size(); ++u) {
    if (canonical_mod(values[u], s_int) != as_int(g(u % r))) return false;
    if (canonical_mod(values[u], m_int) != as_int(f(u % n))) return false;
  }
  for (std::uint64_t x = 0; x < r; ++x) {
    if (g(x) % m != f(x % n)) return false;
  }
  return true;
}

}  // namespace congru
