#include "congru/ringcore.hpp"

#include "congru/error.hpp"

namespace congru {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

Int canonical_mod(const Int& x, const Int& m) {
  require(m >= 1, "modulus must be >= 1");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const Int& x) { return x.get_str(10); }

Residue::Residue(const Int& value, const Int& modulus)
    : value_(canonical_mod(value, modulus)), modulus_(modulus) {}

void Residue::check_same_ring(const Residue& rhs) const {
  require(modulus_ == rhs.modulus_, "residues belong to different rings");
}

Residue Residue::operator+(const Residue& rhs) const {
  check_same_ring(rhs);
  return Residue(value_ + rhs.value_, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
  check_same_ring(rhs);
  return Residue(value_ - rhs.value_, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
  check_same_ring(rhs);
  return Residue(value_ * rhs.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Residue proj(const Int& x, const Int& m) { return Residue(x, m); }

Residue proj(const Residue& x, const Int& m) { return Residue(x.value(), m); }

CongruenceSystem::CongruenceSystem(std::vector<Congruence> equations) {
  for (auto& e : equations) add(std::move(e.target), std::move(e.modulus));
}

void CongruenceSystem::add(Int target, Int modulus) {
  require(modulus >= 1, "congruence modulus must be >= 1");
  equations_.push_back({std::move(target), std::move(modulus)});
}

std::optional<CrtConflict> gcrt_pairwise_violation(const CongruenceSystem& system) {
  const auto& eq = system.equations();
  for (std::size_t i = 0; i < eq.size(); ++i) {
    for (std::size_t j = i + 1; j < eq.size(); ++j) {
      Int g = gcd(eq[i].modulus, eq[j].modulus);
      if (canonical_mod(eq[i].target - eq[j].target, g) != 0) return CrtConflict{i, j};
    }
  }
  return std::nullopt;
}

CrtResult gcrt_solve(const CongruenceSystem& system) {
  require(!system.empty(), "congruence system must be nonempty");
  const auto& eq = system.equations();

  // Scratch values are reused across merges; this runs in the lifting loop.
  Int x = canonical_mod(eq[0].target, eq[0].modulus);
  Int period = eq[0].modulus;
  Int delta, g, reduced, base, inverse, u;
  for (std::size_t j = 1; j < eq.size(); ++j) {
    const Int& n = eq[j].modulus;
    mpz_sub(delta.get_mpz_t(), eq[j].target.get_mpz_t(), x.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), period.get_mpz_t(), n.get_mpz_t());
    if (!mpz_divisible_p(delta.get_mpz_t(), g.get_mpz_t())) {
      // The first j equations are consistent, so by the pairwise criterion
      // some i < j conflicts with equation j.
      for (std::size_t i = 0; i < j; ++i) {
        Int gi = gcd(eq[i].modulus, n);
        if (canonical_mod(eq[i].target - eq[j].target, gi) != 0) {
          return CrtResult{std::nullopt, CrtConflict{i, j}};
        }
      }
      throw InternalError("generalized CRT merge failed without a pairwise conflict");
    }
    // Solve period * u = delta (mod n): u = (delta/g) * (period/g)^-1 mod n/g.
    mpz_divexact(reduced.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    if (reduced > 1) {
      mpz_divexact(base.get_mpz_t(), period.get_mpz_t(), g.get_mpz_t());
      if (mpz_invert(inverse.get_mpz_t(), base.get_mpz_t(), reduced.get_mpz_t()) == 0) {
        throw InternalError("period/g not invertible modulo n/g");
      }
      mpz_divexact(delta.get_mpz_t(), delta.get_mpz_t(), g.get_mpz_t());
      mpz_mul(u.get_mpz_t(), delta.get_mpz_t(), inverse.get_mpz_t());
      mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), reduced.get_mpz_t());
      // x < period and u < n/g keep x + period * u below the new period.
      mpz_addmul(x.get_mpz_t(), period.get_mpz_t(), u.get_mpz_t());
      mpz_mul(period.get_mpz_t(), period.get_mpz_t(), reduced.get_mpz_t());
    }
  }
  return CrtResult{CrtSolution{x, period}, std::nullopt};
}

Int lcm_upto(unsigned long k) {
  Int result = 1;
  for (unsigned long i = 2; i <= k; ++i) result = lcm(result, Int(i));
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t nu_of_modulus(std::uint64_t m) {
  require(m >= 1, "nu(m) requires m >= 1");
  std::uint64_t best = 1;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t power = 1;
    while (rest % p == 0) {
      rest /= p;
      power *= p;
    }
    if (power > best) best = power;
  }
  if (rest > best) best = rest;
  return best;
}

unsigned nu_p(std::uint64_t p, const Int& k) {
  require(is_prime(p), "nu_p requires a prime p");
  require(k >= 1, "nu_p(k) is undefined for k < 1");
  unsigned i = 0;
  Int next = p;
  while (next <= k) {
    ++i;
    next *= p;
  }
  return i;
}

Int binomial_poly(unsigned long k, const Int& x) {
  // C(x, i+1) = C(x, i) * (x - i) / (i + 1) is exact at every step.
  unsigned long i = 0;
  if (x >= 0 && x.fits_ulong_p()) {
    // Word-sized fast path; falls through to GMP once C(x, i) leaves 64 bits.
    const unsigned long xv = x.get_ui();
    if (k > xv) return 0;
    std::uint64_t c = 1;
    for (; i < k; ++i) {
      const u128 next = static_cast<u128>(c) * (xv - i) / (i + 1);
      if (next >> 64) break;
      c = static_cast<std::uint64_t>(next);
    }
    if (i == k) return Int(static_cast<unsigned long>(c));
    Int partial = static_cast<unsigned long>(c);
    for (; i < k; ++i) {
      partial *= x - i;
      mpz_divexact_ui(partial.get_mpz_t(), partial.get_mpz_t(), i + 1);
    }
    return partial;
  }
  Int result = 1;
  for (; i < k; ++i) {
    result *= x - i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i + 1);
    if (result == 0) break;
  }
  return result;
}

Int binom_poly_eval(unsigned long k, const Int& x) {
  require(x >= 0, "binom_poly_eval is defined on naturals");
  if (x < k) return 0;
  return binomial_poly(k, x);
}

Residue binom_poly_mod(unsigned long k, const Residue& x, const Int& m) {
  return proj(binom_poly_eval(k, x.value()), m);
}

}  // namespace congru
