#include "congru/finite_cp.hpp"

#include <numeric>
#include <string>

#include "congru/error.hpp"
#include "congru/lifting.hpp"
#include "congru/newton.hpp"

namespace congru {

FiniteFn::FiniteFn(std::uint64_t n, std::uint64_t m, std::vector<std::uint64_t> table)
    : n_(n), m_(m), table_(std::move(table)) {
  require(n >= 1, "source modulus n must be >= 1");
  require(m >= 1, "target modulus m must be >= 1");
  require(table_.size() == n, "table length must equal n");
  for (auto v : table_) require(v < m, "table entry out of range [0, m)");
}

FiniteFn FiniteFn::constant(std::uint64_t n, std::uint64_t m, std::uint64_t c) {
  require(m >= 1, "target modulus m must be >= 1");
  return FiniteFn(n, m, std::vector<std::uint64_t>(n, c % m));
}

FiniteFn FiniteFn::identity(std::uint64_t n) {
  return tabulate(n, n, [](std::uint64_t x) { return x; });
}

bool divides_in_ring(std::uint64_t m, std::uint64_t d, std::uint64_t e) {
  require(m >= 1 && d < m && e < m, "divides_in_ring: operands must be residues mod m");
  return e % std::gcd(d, m) == 0;
}

namespace {

// gcd(d, m) for every d in [0, m); the CP test for a pair with difference
// class d is just "difference of values is a multiple of this".
std::vector<std::uint64_t> gcd_table(std::uint64_t m) {
  std::vector<std::uint64_t> g(m);
  for (std::uint64_t d = 0; d < m; ++d) g[d] = std::gcd(d, m);
  return g;
}

std::uint64_t difference_class(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return x >= y ? (x - y) % m : (m - (y - x) % m) % m;
}

bool pair_ok(std::uint64_t fx, std::uint64_t fy, std::uint64_t g) {
  std::uint64_t diff = fx >= fy ? fx - fy : fy - fx;
  return diff % g == 0;
}

}  // namespace

CpCheck is_cp_finite(const FiniteFn& f) {
  const std::uint64_t n = f.n();
  const std::uint64_t m = f.m();
  const auto g = gcd_table(m);
  const auto t = f.table();
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      if (!pair_ok(t[x], t[y], g[difference_class(x, y, m)])) {
        return CpCheck{false, PairWitness{x, y}};
      }
    }
  }
  return CpCheck{true, std::nullopt};
}

CpCheck is_cp_samering(const FiniteFn& f) {
  require(f.n() == f.m(), "is_cp_samering requires n == m");
  return is_cp_finite(f);
}

void for_each_cp(std::uint64_t n, std::uint64_t m,
                 const std::function<bool(const FiniteFn&)>& visit) {
  require(n >= 1 && m >= 1, "moduli must be >= 1");
  const auto g = gcd_table(m);
  // gcd for the pair (x, y) with y < x depends only on x - y.
  std::vector<std::uint64_t> gap_gcd(n);
  for (std::uint64_t gap = 0; gap < n; ++gap) gap_gcd[gap] = g[gap % m];

  std::vector<std::uint64_t> table(n, 0);
  std::uint64_t pos = 0;
  std::uint64_t candidate = 0;
  // Iterative depth-first search over table positions, values ascending, so
  // tables come out in lexicographic order.
  while (true) {
    bool placed = false;
    for (; candidate < m; ++candidate) {
      bool ok = true;
      for (std::uint64_t y = 0; y < pos; ++y) {
        if (!pair_ok(candidate, table[y], gap_gcd[pos - y])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      table[pos] = candidate;
      if (pos + 1 == n) {
        if (!visit(FiniteFn(n, m, table))) return;
        ++candidate;
        continue;
      }
      ++pos;
      candidate = 0;
      continue;
    }
    if (pos == 0) return;
    --pos;
    candidate = table[pos] + 1;
  }
}

std::vector<FiniteFn> enumerate_cp(std::uint64_t n, std::uint64_t m, std::size_t cap) {
  std::vector<FiniteFn> out;
  for_each_cp(n, m, [&](const FiniteFn& f) {
    if (out.size() == cap) {
      throw LimitError("enumerate_cp: more than " + std::to_string(cap) + " CP functions");
    }
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t count_cp(std::uint64_t n, std::uint64_t m) {
  std::size_t count = 0;
  for_each_cp(n, m, [&](const FiniteFn&) {
    ++count;
    return true;
  });
  return count;
}

CpCoeffs::CpCoeffs(std::uint64_t n, std::uint64_t m, std::vector<Int> coeffs)
    : n_(n), m_(m), coeffs_(std::move(coeffs)) {
  require(m >= 1 && n >= 1, "moduli must be >= 1");
  require(coeffs_.size() == nu_of_modulus(m), "coefficient count must equal nu(m)");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    require(coeffs_[k] >= 0, "coefficients are stored nonnegative");
    require(coeffs_[k] % lcm_upto(k) == 0,
            "coefficient a_" + std::to_string(k) + " is not a multiple of lcm(k)");
  }
}

Int canonical_coefficient(unsigned long k, const Int& value, std::uint64_t m) {
  CongruenceSystem system;
  system.add(0, lcm_upto(k));
  system.add(value, Int(static_cast<unsigned long>(m)));
  auto solved = gcrt_solve(system);
  require(solved.feasible(), "value has no lcm(k)-multiple representative modulo m");
  return solved.solution->least;
}

std::uint64_t admissible_coefficient_count(unsigned long k, std::uint64_t m) {
  Int g = gcd(lcm_upto(k), Int(static_cast<unsigned long>(m)));
  return m / g.get_ui();
}

CpCoeffs represent_cp(const FiniteFn& f) {
  const std::uint64_t n = f.n();
  const std::uint64_t m = f.m();
  require(m >= 2, "represent_cp requires m >= 2");
  require(n % m == 0, "represent_cp requires m | n");
  auto check = is_cp_finite(f);
  if (!check.holds) {
    throw PreconditionError("function is not congruence preserving: witness x=" +
                            std::to_string(check.witness->x) +
                            " y=" + std::to_string(check.witness->y));
  }
  const std::uint64_t nu = nu_of_modulus(m);
  auto report = lift_prefix(f, nu - 1);
  if (!report.succeeded()) throw InternalError("lift of a CP function with m | n failed");
  auto newton = newton_coeffs(report.prefix());

  std::vector<Int> coeffs;
  coeffs.reserve(nu);
  for (std::uint64_t k = 0; k < nu; ++k) {
    coeffs.push_back(canonical_coefficient(k, newton.coeffs[k], m));
  }
  return CpCoeffs(n, m, std::move(coeffs));
}

Residue eval_repr(const CpCoeffs& c, const Residue& x) {
  const Int m = static_cast<unsigned long>(c.m());
  require(x.modulus() == Int(static_cast<unsigned long>(c.n())),
          "argument must be a residue modulo n");
  if (c.m() < (std::uint64_t{1} << 32)) {
    // Every product of two reduced terms fits in 64 bits.
    const std::uint64_t mm = c.m();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      const std::uint64_t a = mpz_fdiv_ui(c.coeffs()[k].get_mpz_t(), mm);
      if (a == 0) continue;
      const std::uint64_t b = mpz_fdiv_ui(binom_poly_eval(k, x.value()).get_mpz_t(), mm);
      acc = (acc + a * b) % mm;
    }
    return Residue(Int(static_cast<unsigned long>(acc)), m);
  }
  Residue sum(0, m);
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    sum = sum + proj(c.coeffs()[k], m) * binom_poly_mod(k, x, m);
  }
  return sum;
}

FiniteFn eval_repr_table(const CpCoeffs& c) {
  const Int n = static_cast<unsigned long>(c.n());
  return FiniteFn::tabulate(c.n(), c.m(), [&](std::uint64_t x) {
    return eval_repr(c, Residue(Int(static_cast<unsigned long>(x)), n)).value().get_ui();
  });
}

}  // namespace congru
