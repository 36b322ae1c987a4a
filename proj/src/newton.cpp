#include "congru/newton.hpp"

#include "congru/error.hpp"

namespace congru {

NewtonCoeffs newton_coeffs(std::span<const Int> values) {
  NewtonCoeffs out;
  out.coeffs.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    Int sum = 0;
    Int binom = 1;  // C(k, j), walking j = 0 .. k
    for (std::size_t j = 0; j <= k; ++j) {
      if ((k - j) % 2 == 0) {
        sum += binom * values[j];
      } else {
        sum -= binom * values[j];
      }
      binom *= k - j;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j + 1);
    }
    out.coeffs.push_back(std::move(sum));
  }
  return out;
}

NewtonCoeffs newton_coeffs(const NatPrefix& values) { return newton_coeffs(values.values()); }

NewtonCoeffs newton_coeffs_by_differences(std::span<const Int> values) {
  std::vector<Int> row(values.begin(), values.end());
  NewtonCoeffs out;
  out.coeffs.reserve(row.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out.coeffs.push_back(row[0]);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

Int newton_eval(const NewtonCoeffs& a, std::uint64_t x) {
  require(x < a.coeffs.size(), "newton_eval: argument beyond the coefficient prefix");
  Int sum = 0;
  Int binom = 1;  // P_k(x)
  for (std::uint64_t k = 0; k <= x; ++k) {
    sum += a.coeffs[k] * binom;
    binom *= x - k;
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
  }
  return sum;
}

NatPrefix newton_synthesize(const NewtonCoeffs& a, std::uint64_t T) {
  std::vector<Int> values;
  values.reserve(T + 1);
  for (std::uint64_t x = 0; x <= T; ++x) {
    Int sum = 0;
    Int binom = 1;
    for (std::uint64_t k = 0; k <= x && k < a.coeffs.size(); ++k) {
      sum += a.coeffs[k] * binom;
      binom *= x - k;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    }
    values.push_back(std::move(sum));
  }
  return NatPrefix(std::move(values));
}

std::optional<LcmViolation> check_lcm_divisibility(const NewtonCoeffs& a) {
  Int lcm_k = 1;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    if (k >= 2) lcm_k = lcm(lcm_k, Int(static_cast<unsigned long>(k)));
    if (!mpz_divisible_p(a.coeffs[k].get_mpz_t(), lcm_k.get_mpz_t())) {
      return LcmViolation{k, a.coeffs[k], lcm_k};
    }
  }
  return std::nullopt;
}

Int exemplar_floor_e_fact(std::uint64_t x) {
  if (x == 0) return 1;
  // x!/j! for j = x down to 0 is the running product x (x-1) ... (j+1).
  Int sum = 0;
  Int term = 1;
  for (std::uint64_t j = x + 1; j-- > 0;) {
    sum += term;
    term *= j;
  }
  return sum;
}

Int exemplar_floor_ea_fact(long a, std::uint64_t x) {
  require(a >= 2, "exemplar_floor_ea_fact is defined here for a >= 2");
  // term_j = a^{x-j} x!/j!, so term_{j-1} = term_j * a * j.
  Int sum = 0;
  Int term = 1;
  for (std::uint64_t j = x + 1; j-- > 0;) {
    sum += term;
    term *= a;
    term *= j;
  }
  return sum;
}

}  // namespace congru
