#include "congru/lattices.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "congru/error.hpp"
#include "congru/newton.hpp"

namespace congru {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t d) {
  std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

std::int64_t minimal_period(const std::vector<bool>& pattern) {
  const auto d = static_cast<std::int64_t>(pattern.size());
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    bool ok = true;
    for (std::int64_t r = e; r < d && ok; ++r) ok = pattern[r] == pattern[r % e];
    if (ok) return e;
  }
  return d;
}

std::vector<bool> fold(const std::vector<bool>& pattern, std::int64_t period) {
  return std::vector<bool>(pattern.begin(), pattern.begin() + period);
}

std::vector<bool> residue_mask(std::int64_t d, const std::vector<std::int64_t>& residues,
                               const char* what) {
  std::vector<bool> mask(d, false);
  for (auto r : residues) {
    require(r >= 0 && r < d, std::string(what) + " residue out of [0, d)");
    mask[r] = true;
  }
  return mask;
}

template <class Op>
EPSet combine(const EPSet& a, const EPSet& b, Op op) {
  const std::int64_t d = std::lcm(a.period(), b.period());
  const std::int64_t B = std::max(a.bound(), b.bound());
  std::vector<bool> pos(d), neg(d), window(2 * B + 1);
  for (std::int64_t r = 0; r < d; ++r) {
    pos[r] = op(a.pos()[r % a.period()], b.pos()[r % b.period()]);
    neg[r] = op(a.neg()[r % a.period()], b.neg()[r % b.period()]);
  }
  for (std::int64_t x = -B; x <= B; ++x) window[x + B] = op(a.contains(x), b.contains(x));
  return EPSet(d, B, std::move(pos), std::move(neg), std::move(window));
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

}  // namespace

EPSet::EPSet(std::int64_t period, std::int64_t bound, std::vector<bool> pos,
             std::vector<bool> neg, std::vector<bool> window)
    : period_(period),
      bound_(bound),
      pos_(std::move(pos)),
      neg_(std::move(neg)),
      window_(std::move(window)) {
  require(period_ >= 1, "period must be >= 1");
  require(bound_ >= 0, "bound must be >= 0");
  require(pos_.size() == static_cast<std::size_t>(period_) &&
              neg_.size() == static_cast<std::size_t>(period_),
          "residue laws must have one bit per residue");
  require(window_.size() == static_cast<std::size_t>(2 * bound_ + 1),
          "window must have 2B + 1 bits");
  normalize();
}

void EPSet::normalize() {
  const std::int64_t d = std::lcm(minimal_period(pos_), minimal_period(neg_));
  pos_ = fold(pos_, d);
  neg_ = fold(neg_, d);
  period_ = d;
  std::int64_t B = bound_;
  while (B > 0 && window_[2 * B] == pos_[B % d] && window_[0] == neg_[floor_mod(-B, d)]) {
    window_.erase(window_.begin());
    window_.pop_back();
    --B;
  }
  bound_ = B;
}

EPSet EPSet::empty() { return EPSet(1, 0, {false}, {false}, {false}); }
EPSet EPSet::all() { return EPSet(1, 0, {true}, {true}, {true}); }

bool EPSet::contains(std::int64_t x) const {
  if (x > bound_) return pos_[floor_mod(x, period_)];
  if (x < -bound_) return neg_[floor_mod(x, period_)];
  return window_[x + bound_];
}

bool EPSet::contains(const Int& x) const {
  if (x.fits_slong_p()) return contains(static_cast<std::int64_t>(x.get_si()));
  const auto r = mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(period_));
  return x > 0 ? pos_[r] : neg_[r];
}

std::vector<std::int64_t> EPSet::pos_residues() const {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < period_; ++r) {
    if (pos_[r]) out.push_back(r);
  }
  return out;
}

std::vector<std::int64_t> EPSet::neg_residues() const {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < period_; ++r) {
    if (neg_[r]) out.push_back(r);
  }
  return out;
}

bool EPSet::is_recognizable() const noexcept {
  return bound_ == 0 && pos_ == neg_ && window_[0] == pos_[0];
}

bool EPSet::has_finitely_many_negatives() const noexcept {
  return std::none_of(neg_.begin(), neg_.end(), [](bool b) { return b; });
}

bool EPSet::is_finite() const noexcept {
  return has_finitely_many_negatives() &&
         std::none_of(pos_.begin(), pos_.end(), [](bool b) { return b; });
}

EPSet recognizable(std::int64_t d, const std::vector<std::int64_t>& residues) {
  require(d >= 1, "period must be >= 1");
  auto mask = residue_mask(d, residues, "recognizable");
  return EPSet(d, 0, mask, mask, {mask[0]});
}

EPSet rational_from_parts(std::int64_t d, const std::vector<std::int64_t>& S,
                          const std::vector<std::int64_t>& F,
                          const std::vector<std::int64_t>& R) {
  require(d >= 1, "period must be >= 1");
  auto r_mask = residue_mask(d, R, "R");
  auto s_mask = residue_mask(d, S, "S");
  std::vector<bool> f_mask(2 * d - 1, false);
  for (auto x : F) {
    require(x > -d && x < d, "F must lie in (-d, d)");
    f_mask[x + d - 1] = true;
  }
  std::vector<bool> neg(d);
  for (std::int64_t r = 0; r < d; ++r) neg[r] = s_mask[floor_mod(-r, d)];
  std::vector<bool> window(2 * d + 1);
  for (std::int64_t x = -d; x <= d; ++x) {
    bool in = false;
    if (x >= d) in = r_mask[x % d];
    else if (x <= -d) in = s_mask[(-x) % d];
    else in = f_mask[x + d - 1];
    window[x + d] = in;
  }
  return EPSet(d, d, std::move(r_mask), std::move(neg), std::move(window));
}

EPSet arithmetic_ray(std::int64_t start, std::int64_t d) {
  require(d >= 1, "step must be >= 1");
  const std::int64_t B = start < 0 ? -start : start;
  std::vector<bool> pos(d, false), neg(d, false), window(2 * B + 1);
  pos[floor_mod(start, d)] = true;
  for (std::int64_t x = -B; x <= B; ++x) window[x + B] = x >= start && (x - start) % d == 0;
  return EPSet(d, B, std::move(pos), std::move(neg), std::move(window));
}

EPSet finite_set(const std::vector<std::int64_t>& elements) {
  std::int64_t B = 0;
  for (auto x : elements) B = std::max(B, x < 0 ? -x : x);
  std::vector<bool> window(2 * B + 1, false);
  for (auto x : elements) window[x + B] = true;
  return EPSet(1, B, {false}, {false}, std::move(window));
}

EPSet translate(const EPSet& L, std::int64_t t) {
  const std::int64_t d = L.period();
  const std::int64_t B = L.bound() + (t < 0 ? -t : t);
  std::vector<bool> pos(d), neg(d), window(2 * B + 1);
  for (std::int64_t r = 0; r < d; ++r) {
    pos[r] = L.pos()[floor_mod(r + t, d)];
    neg[r] = L.neg()[floor_mod(r + t, d)];
  }
  for (std::int64_t y = -B; y <= B; ++y) window[y + B] = L.contains(y + t);
  return EPSet(d, B, std::move(pos), std::move(neg), std::move(window));
}

EPSet set_union(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EPSet set_intersection(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EPSet set_complement(const EPSet& a) {
  return combine(a, a, [](bool x, bool) { return !x; });
}

CpPolynomial::CpPolynomial(std::vector<Int> newton) : newton_(std::move(newton)) {
  if (newton_.empty()) newton_.push_back(0);
  if (auto bad = check_lcm_divisibility(NewtonCoeffs{newton_})) {
    throw PreconditionError("Newton coefficient a_" + std::to_string(bad->k) + " = " +
                            congru::to_string(bad->coeff) + " is not divisible by lcm(1.." +
                            std::to_string(bad->k) + ") = " + congru::to_string(bad->lcm));
  }
}

CpPolynomial CpPolynomial::from_power_coeffs(const std::vector<Int>& power) {
  require(!power.empty(), "polynomial needs at least a constant term");
  std::vector<Int> values;
  for (std::size_t x = 0; x < power.size(); ++x) {
    Int v = 0;
    for (std::size_t i = power.size(); i-- > 0;) v = v * static_cast<unsigned long>(x) + power[i];
    values.push_back(v);
  }
  return CpPolynomial(newton_coeffs(values).coeffs);
}

std::size_t CpPolynomial::degree() const noexcept {
  std::size_t k = newton_.size() - 1;
  while (k > 0 && newton_[k] == 0) --k;
  return k;
}

Int CpPolynomial::operator()(const Int& x) const {
  Int sum = 0;
  for (std::size_t k = 0; k < newton_.size(); ++k) {
    if (newton_[k] != 0) sum += newton_[k] * binomial_poly(k, x);
  }
  return sum;
}

Int CpPolynomial::operator()(std::int64_t x) const { return (*this)(Int(static_cast<long>(x))); }

std::vector<Int> CpPolynomial::scaled_power_coeffs() const {
  const std::size_t K = degree();
  std::vector<Int> out(K + 1, 0);
  std::vector<Int> falling{1};  // x (x-1) ... (x-k+1) in the power basis
  for (std::size_t k = 0; k <= K; ++k) {
    // K!/k!
    Int scale = 1;
    for (std::size_t j = k + 1; j <= K; ++j) scale *= static_cast<unsigned long>(j);
    for (std::size_t i = 0; i < falling.size(); ++i) out[i] += newton_[k] * scale * falling[i];
    std::vector<Int> next(falling.size() + 1, 0);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * static_cast<unsigned long>(k);
    }
    falling = std::move(next);
  }
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> cp_violation_on_window(
    const CpPolynomial& f, std::int64_t lo, std::int64_t hi) {
  std::vector<Int> values;
  for (std::int64_t x = lo; x <= hi; ++x) values.push_back(f(x));
  for (std::int64_t x = lo; x <= hi; ++x) {
    for (std::int64_t y = lo; y <= hi; ++y) {
      if (x == y) continue;
      Int diff = values[x - lo] - values[y - lo];
      Int gap(static_cast<long>(x - y));
      if (!mpz_divisible_p(diff.get_mpz_t(), gap.get_mpz_t())) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> monotonicity_violation(const CpPolynomial& f, std::int64_t lo,
                                                   std::int64_t hi) {
  Int prev = f(lo);
  for (std::int64_t x = lo; x < hi; ++x) {
    Int next = f(x + 1);
    if (next < prev) return x;
    prev = std::move(next);
  }
  return std::nullopt;
}

EPSet preimage_recognizable(const CpPolynomial& f, const EPSet& L) {
  require(L.is_recognizable(), "preimage_recognizable requires a recognizable set");
  const std::int64_t d = L.period();
  std::vector<std::int64_t> residues;
  for (std::int64_t r = 0; r < d; ++r) {
    if (L.contains(f(r))) residues.push_back(r);
  }
  return recognizable(d, residues);
}

std::int64_t preimage_tail_bound(const CpPolynomial& f, const EPSet& L) {
  require(!f.is_constant(), "tail bound needs a nonconstant polynomial");
  const std::size_t K = f.degree();
  auto b = f.scaled_power_coeffs();
  Int S = 0;
  for (std::size_t i = 0; i < K; ++i) S += abs(b[i]);
  Int fact = 1;
  for (std::size_t j = 2; j <= K; ++j) fact *= static_cast<unsigned long>(j);
  Int num = S + fact * static_cast<long>(L.bound());
  Int lead = abs(b[K]);
  Int X0;
  mpz_cdiv_q(X0.get_mpz_t(), num.get_mpz_t(), lead.get_mpz_t());
  if (X0 < 1) X0 = 1;
  require(X0.fits_slong_p() && X0 < 10'000'000, "preimage window too large");
  return X0.get_si();
}

EPSet preimage_eventual(const CpPolynomial& f, const EPSet& L) {
  require(!f.is_constant(), "preimage_eventual rejects constant f; the preimage is Z or empty");
  const std::int64_t d = L.period();
  const std::int64_t B = preimage_tail_bound(f, L);
  const std::size_t K = f.degree();
  const int lead_sign = sgn(f.scaled_power_coeffs()[K]);
  const int sign_plus = lead_sign;
  const int sign_minus = K % 2 == 0 ? lead_sign : -lead_sign;
  std::vector<bool> pos(d), neg(d), window(2 * B + 1);
  for (std::int64_t r = 0; r < d; ++r) {
    const auto image = canonical_mod(f(r), Int(static_cast<long>(d))).get_si();
    pos[r] = sign_plus > 0 ? L.pos()[image] : L.neg()[image];
    neg[r] = sign_minus > 0 ? L.pos()[image] : L.neg()[image];
  }
  for (std::int64_t x = -B; x <= B; ++x) window[x + B] = L.contains(f(x));
  return EPSet(d, B, std::move(pos), std::move(neg), std::move(window));
}

std::string LatticeExpr::to_string() const {
  if (terms.empty()) return "∅";
  std::ostringstream out;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j) out << " ∪ ";
    const auto& term = terms[j];
    if (term.size() > 1) out << "[";
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (i) out << " ∩ ";
      out << "(L-" << term[i] << ")";
    }
    if (term.size() > 1) out << "]";
  }
  return out.str();
}

EPSet LatticeExpr::evaluate(const EPSet& L) const {
  EPSet acc = EPSet::empty();
  for (const auto& term : terms) {
    EPSet meet = EPSet::all();
    for (auto i : term) meet = set_intersection(meet, translate(L, i));
    acc = set_union(acc, meet);
  }
  return acc;
}

UnionIntersectionResult union_intersection_preimage(const CpPolynomial& f, const EPSet& L,
                                                    std::optional<std::int64_t> window) {
  require(L.is_recognizable(), "union_intersection_preimage requires a recognizable set");
  const std::int64_t d = L.period();
  const std::int64_t w = window.value_or(4 * d);
  if (auto x = monotonicity_violation(f, -w, w)) {
    throw PreconditionError("f is not nondecreasing on [" + std::to_string(-w) + ", " +
                            std::to_string(w) + "]: f(" + std::to_string(*x + 1) + ") < f(" +
                            std::to_string(*x) + ")");
  }
  UnionIntersectionResult out{EPSet::empty(), {}, {}};
  for (std::int64_t a = 0; a < d; ++a) {
    if (!L.contains(f(a))) continue;
    std::vector<std::int64_t> shifts;
    for (std::int64_t t = 0; t < d; ++t) {
      if (L.contains(a + t)) shifts.push_back(t);
    }
    out.representatives.push_back(a);
    out.expression.terms.push_back(std::move(shifts));
  }
  out.set = out.expression.evaluate(L);
  return out;
}

MembershipResult lattice_membership(const EPSet& L, const EPSet& X) {
  require(L.is_recognizable(), "lattice_membership requires a recognizable generator");
  const std::int64_t d = L.period();
  if (!X.is_recognizable()) {
    return {false, std::nullopt,
            "X is not of the form F' + dZ, but every lattice element is"};
  }
  if (d % X.period() != 0) {
    return {false, std::nullopt,
            "period " + std::to_string(X.period()) + " of X does not divide " +
                std::to_string(d)};
  }
  std::vector<bool> in_L(d), in_X(d);
  for (std::int64_t r = 0; r < d; ++r) {
    in_L[r] = L.contains(r);
    in_X[r] = X.contains(r);
  }
  // Residues of the intersection of L - i over the given shifts.
  auto meet = [&](const std::vector<std::int64_t>& shifts) {
    std::vector<bool> m(d, true);
    for (std::int64_t y = 0; y < d; ++y) {
      for (auto i : shifts) m[y] = m[y] && in_L[(y + i) % d];
    }
    return m;
  };
  auto within_X = [&](const std::vector<bool>& m) {
    for (std::int64_t y = 0; y < d; ++y) {
      if (m[y] && !in_X[y]) return false;
    }
    return true;
  };
  const bool L_empty = std::none_of(in_L.begin(), in_L.end(), [](bool b) { return b; });
  const bool L_full = std::all_of(in_L.begin(), in_L.end(), [](bool b) { return b; });
  const bool X_empty = std::none_of(in_X.begin(), in_X.end(), [](bool b) { return b; });

  MembershipResult result{true, LatticeExpr{}, ""};
  auto& terms = result.certificate->terms;
  if (L_empty) {
    if (!X_empty) return {false, std::nullopt, "L is empty, so the lattice is {∅}"};
    terms.push_back({0});
  } else if (X_empty) {
    if (L_full) return {false, std::nullopt, "L = Z, so every lattice element is Z"};
    std::vector<std::int64_t> shifts(d);
    std::iota(shifts.begin(), shifts.end(), 0);
    for (std::size_t k = shifts.size(); k-- > 0;) {
      auto fewer = shifts;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      if (!fewer.empty() && within_X(meet(fewer))) shifts = std::move(fewer);
    }
    terms.push_back(std::move(shifts));
  } else {
    std::vector<bool> covered(d, false);
    for (std::int64_t x = 0; x < d; ++x) {
      if (!in_X[x]) continue;
      std::vector<std::int64_t> shifts;
      for (std::int64_t i = 0; i < d; ++i) {
        if (in_L[(x + i) % d]) shifts.push_back(i);
      }
      auto smallest = meet(shifts);
      if (!within_X(smallest)) {
        std::int64_t y = 0;
        while (!(smallest[y] && !in_X[y])) ++y;
        return {false, std::nullopt,
                "residue " + std::to_string(x) + " is in X but every intersection of decrements "
                "containing it also contains " + std::to_string(y) + ", which is not"};
      }
      if (covered[x]) continue;
      std::vector<std::int64_t> chosen;
      for (auto i : shifts) {
        if (within_X(meet({i}))) {
          chosen = {i};
          break;
        }
      }
      if (chosen.empty()) {
        chosen = shifts;
        for (std::size_t k = chosen.size(); k-- > 0;) {
          auto fewer = chosen;
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
          if (!fewer.empty() && within_X(meet(fewer))) chosen = std::move(fewer);
        }
      }
      auto hit = meet(chosen);
      for (std::int64_t y = 0; y < d; ++y) covered[y] = covered[y] || hit[y];
      terms.push_back(std::move(chosen));
    }
  }
  if (!(result.certificate->evaluate(L) == X)) {
    throw InternalError("membership certificate does not evaluate to X");
  }
  return result;
}

std::optional<std::string> certify_nonmembership_negatives(const EPSet& L, const EPSet& X) {
  require(L.has_finitely_many_negatives(),
          "certify_nonmembership_negatives needs L with finitely many negatives");
  if (X.has_finitely_many_negatives()) return std::nullopt;
  std::ostringstream out;
  out << "X contains every x < " << -X.bound() << " with x mod " << X.period() << " in {"
      << join(X.neg_residues()) << "}, so X is unbounded below; "
      << "L is bounded below, hence so is every L - i with i >= 0 and every finite union of "
      << "finite intersections of them; X is not in L_Z(L)";
  return out.str();
}

}  // namespace congru
