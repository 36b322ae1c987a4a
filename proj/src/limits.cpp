#include "congru/limits.hpp"

#include <algorithm>
#include <string>

#include "congru/error.hpp"

namespace congru {

namespace {

__extension__ typedef unsigned __int128 u128;

Int as_int(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

void require_same_shape(const LimitApprox& x, const LimitApprox& y) {
  require(x.shape() == y.shape(), "operands have different kinds or precisions");
}

// Largest j <= cap with p^j | v (v == 0 gives cap).
unsigned capped_p_valuation(const Int& v, std::uint64_t p, unsigned cap) {
  if (v == 0) return cap;
  Int rest = abs(v);
  unsigned j = 0;
  while (j < cap && mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++j;
  }
  return j;
}

}  // namespace

LimitShape LimitShape::base_p(std::uint64_t p, unsigned precision) {
  require(is_prime(p), "base-p approximations need a prime p");
  require(precision >= 1, "precision must be >= 1");
  return LimitShape(LimitKind::base_p, p, precision);
}

LimitShape LimitShape::factorial(unsigned precision) {
  require(precision >= 1, "precision must be >= 1");
  return LimitShape(LimitKind::factorial, 0, precision);
}

std::uint64_t LimitShape::radix(std::size_t i) const noexcept {
  return kind_ == LimitKind::base_p ? prime_ : static_cast<std::uint64_t>(i) + 2;
}

Int LimitShape::modulus() const {
  Int m = 1;
  for (unsigned i = 0; i < precision_; ++i) m *= as_int(radix(i));
  return m;
}

unsigned LimitShape::modulus_exponent() const noexcept {
  return kind_ == LimitKind::base_p ? precision_ : precision_ + 1;
}

LimitApprox::LimitApprox(LimitShape shape, std::vector<std::uint64_t> digits)
    : shape_(shape), digits_(std::move(digits)) {
  require(digits_.size() == shape_.precision(), "digit count must equal the precision");
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    require(digits_[i] < shape_.radix(i), "digit " + std::to_string(i) + " out of range");
  }
}

LimitApprox LimitApprox::zero(const LimitShape& shape) {
  return LimitApprox(shape, std::vector<std::uint64_t>(shape.precision(), 0));
}

bool LimitApprox::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

LimitApprox from_int(const LimitShape& shape, const Int& z) {
  Int rest = canonical_mod(z, shape.modulus());
  std::vector<std::uint64_t> digits(shape.precision());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    digits[i] = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), shape.radix(i));
  }
  return LimitApprox(shape, std::move(digits));
}

Int to_int(const LimitApprox& x) {
  Int v = 0;
  for (std::size_t i = x.digits().size(); i-- > 0;) {
    v *= as_int(x.shape().radix(i));
    v += as_int(x.digit(i));
  }
  return v;
}

LimitApprox operator+(const LimitApprox& x, const LimitApprox& y) {
  require_same_shape(x, y);
  const auto& shape = x.shape();
  std::vector<std::uint64_t> out(shape.precision());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t r = shape.radix(i);
    std::uint64_t s = x.digit(i) + y.digit(i) + carry;
    carry = s >= r ? 1 : 0;
    out[i] = s - carry * r;
  }
  return LimitApprox(shape, std::move(out));
}

LimitApprox operator-(const LimitApprox& x) {
  const auto& shape = x.shape();
  std::vector<std::uint64_t> out(shape.precision(), 0);
  std::size_t i = 0;
  while (i < out.size() && x.digit(i) == 0) ++i;
  if (i < out.size()) {
    out[i] = shape.radix(i) - x.digit(i);
    for (++i; i < out.size(); ++i) out[i] = shape.radix(i) - 1 - x.digit(i);
  }
  return LimitApprox(shape, std::move(out));
}

LimitApprox operator-(const LimitApprox& x, const LimitApprox& y) { return x + (-y); }

LimitApprox scale(const LimitApprox& x, std::uint64_t k) {
  const auto& shape = x.shape();
  std::vector<std::uint64_t> out(shape.precision());
  u128 carry = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t r = shape.radix(i);
    u128 s = static_cast<u128>(x.digit(i)) * k + carry;
    out[i] = static_cast<std::uint64_t>(s % r);
    carry = s / r;
  }
  return LimitApprox(shape, std::move(out));
}

LimitApprox operator*(const LimitApprox& x, const LimitApprox& y) {
  require_same_shape(x, y);
  const auto& shape = x.shape();
  // x * y = sum_i d_i * (W_i * y), W_{i+1} = W_i * radix(i).
  LimitApprox result = LimitApprox::zero(shape);
  LimitApprox shifted = y;
  for (std::size_t i = 0; i < shape.precision(); ++i) {
    if (x.digit(i) != 0) result = result + scale(shifted, x.digit(i));
    shifted = scale(shifted, shape.radix(i));
  }
  return result;
}

Valuation val(const LimitApprox& x) {
  const auto& shape = x.shape();
  unsigned zeros = 0;
  while (zeros < shape.precision() && x.digit(zeros) == 0) ++zeros;
  if (zeros == shape.precision()) return Valuation{shape.modulus_exponent(), true};
  return Valuation{shape.kind() == LimitKind::base_p ? zeros : zeros + 1, false};
}

Distance dist(const LimitApprox& x, const LimitApprox& y) {
  auto v = val(x - y);
  return Distance{v.value, v.saturated};
}

bool distance_le(const Distance& d1, const Distance& d2) { return d1.exponent >= d2.exponent; }

LimitApprox phat_eval(std::uint64_t k, const LimitApprox& x) {
  return from_int(x.shape(), binom_poly_eval(k, to_int(x)));
}

MahlerSeries::MahlerSeries(LimitShape shape, std::vector<LimitApprox> coeffs)
    : shape_(shape), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    require(c.shape() == shape_, "all Mahler coefficients must share one shape");
  }
}

MahlerSeries MahlerSeries::from_integers(const LimitShape& shape, std::span<const Int> coeffs) {
  std::vector<LimitApprox> digits;
  digits.reserve(coeffs.size());
  for (const auto& c : coeffs) digits.push_back(from_int(shape, c));
  return MahlerSeries(shape, std::move(digits));
}

LimitApprox mahler_eval(const MahlerSeries& s, const LimitApprox& x,
                        std::optional<std::size_t> cutoff) {
  require(x.shape() == s.shape(), "argument shape differs from the series shape");
  const std::size_t kept = std::min(cutoff.value_or(s.size()), s.size());
  for (std::size_t k = kept; k < s.size(); ++k) {
    if (!s.coeffs()[k].is_zero()) {
      throw PreconditionError("cannot drop term " + std::to_string(k) +
                              ": its coefficient does not vanish at this precision");
    }
  }
  // P_k(iota(x)) = 0 for k > iota(x).
  const Int rep = to_int(x);
  LimitApprox sum = LimitApprox::zero(s.shape());
  for (std::size_t k = 0; k < kept && rep >= static_cast<unsigned long>(k); ++k) {
    if (s.coeffs()[k].is_zero()) continue;
    sum = sum + s.coeffs()[k] * phat_eval(k, x);
  }
  return sum;
}

Int level_modulus(LimitKind kind, std::uint64_t p, unsigned n) {
  Int m = 1;
  for (unsigned i = 1; i <= n; ++i) m *= kind == LimitKind::base_p ? as_int(p) : as_int(i);
  return m;
}

LevelFn level_restrict(const LimitFunction& phi, const LimitShape& working, unsigned n) {
  require(n >= 1, "levels start at 1");
  require(n <= working.modulus_exponent(), "level exceeds the working precision");
  const Int big = level_modulus(working.kind(), working.prime(), n);
  require(big.fits_ulong_p(), "level ring too large to tabulate");
  const std::uint64_t size = big.get_ui();
  auto table = FiniteFn::tabulate(size, size, [&](std::uint64_t x) {
    auto y = phi(from_int(working, as_int(x)));
    require(y.shape() == working, "function changed the working shape");
    return canonical_mod(to_int(y), big).get_ui();
  });
  return LevelFn{n, std::move(table)};
}

std::vector<LevelFn> level_tower(const LimitFunction& phi, const LimitShape& working,
                                 unsigned count) {
  std::vector<LevelFn> out;
  out.reserve(count);
  for (unsigned n = 1; n <= count; ++n) out.push_back(level_restrict(phi, working, n));
  return out;
}

SystemCheck check_inverse_system(std::span<const LevelFn> levels, LimitKind kind,
                                 std::uint64_t p, std::span<const unsigned> mu) {
  const unsigned count = static_cast<unsigned>(levels.size());
  std::vector<unsigned> source(count);
  for (unsigned i = 0; i < count; ++i) {
    source[i] = mu.empty() ? i + 1 : mu[i];
    if (!mu.empty()) require(mu.size() == count, "mu must give one value per level");
    if (i > 0) require(source[i] > source[i - 1], "mu must be strictly increasing");
  }
  auto size_of = [&](unsigned level) {
    Int mod = level_modulus(kind, p, level);
    require(mod.fits_ulong_p(), "level ring too large");
    return static_cast<std::uint64_t>(mod.get_ui());
  };
  for (unsigned i = 0; i < count; ++i) {
    require(levels[i].level == i + 1, "levels must be listed as 1, 2, ..., N");
    require(levels[i].table.n() == size_of(source[i]), "level table has the wrong source ring");
    require(levels[i].table.m() == size_of(i + 1), "level table has the wrong target ring");
  }
  for (unsigned n = 1; n <= count; ++n) {
    const auto& upper = levels[n - 1].table;
    for (unsigned m = 1; m <= n; ++m) {
      const auto& lower = levels[m - 1].table;
      const std::uint64_t target_m = lower.m();
      const std::uint64_t source_m = lower.n();
      for (std::uint64_t x = 0; x < upper.n(); ++x) {
        if (upper(x) % target_m != lower(x % source_m)) {
          return SystemCheck{false, SystemWitness{n, m, x}};
        }
      }
    }
  }
  return SystemCheck{true, std::nullopt};
}

CpCheck is_cp_level(const LevelFn& phi) { return is_cp_samering(phi.table); }

CpCheck check_one_lipschitz(const LevelFn& phi, std::uint64_t p) {
  const auto& t = phi.table;
  require(t.n() == t.m(), "1-Lipschitz check needs a level table Z/p^n -> Z/p^n");
  require(level_modulus(LimitKind::base_p, p, phi.level) == as_int(t.n()),
          "table size is not p^level");
  const unsigned n = phi.level;
  for (std::uint64_t x = 0; x < t.n(); ++x) {
    for (std::uint64_t y = 0; y < t.n(); ++y) {
      unsigned arg = capped_p_valuation(as_int(x) - as_int(y), p, n);
      unsigned img = capped_p_valuation(as_int(t(x)) - as_int(t(y)), p, n);
      if (img < arg) return CpCheck{false, PairWitness{x, y}};
    }
  }
  return CpCheck{true, std::nullopt};
}

MahlerSeries lcm_free_series(std::uint64_t p, std::size_t K, unsigned N) {
  auto shape = LimitShape::base_p(p, N);
  std::vector<Int> coeffs(K, 0);
  for (std::size_t k = 1; k < K; ++k) {
    if (k < p) {
      coeffs[k] = 1;
    } else {
      unsigned e = nu_p(p, as_int(k)) - 1;
      mpz_ui_pow_ui(coeffs[k].get_mpz_t(), p, e);
    }
  }
  return MahlerSeries::from_integers(shape, coeffs);
}

}  // namespace congru
