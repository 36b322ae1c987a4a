// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "congru/finite_cp.hpp"
#include "congru/lattices.hpp"
#include "congru/lifting.hpp"
#include "congru/limits.hpp"
#include "congru/newton.hpp"
#include "congru/ringcore.hpp"
#include "oracles.hpp"

using namespace congru;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Criterion = std::function<void(Outcome&)>;

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::string eq_str(const Congruence& c) {
  return "x = " + to_string(c.target) + " mod " + to_string(c.modulus);
}

// 1. The wrap-around table on Z/6 -> Z/8.
void wrap_table(Outcome& o) {
  const FiniteFn f(6, 8, {0, 3, 4, 1, 4, 7});
  o.expect(is_cp_finite(f).holds, "table is CP");

  auto r = lift_prefix(f, 10);
  o.expect(!r.succeeded(), "lift is infeasible");
  if (!r.succeeded()) {
    const auto& fail = r.failure();
    const auto& a = fail.system[fail.conflict.first];
    const auto& b = fail.system[fail.conflict.second];
    o.note("lift stops at step=" + std::to_string(fail.step) + " with " + eq_str(a) + " ; " +
           eq_str(b));
    o.expect(fail.step == 8, "infeasible exactly at step 8");
    auto canon = [](const Congruence& c) {
      return std::pair<Int, Int>{canonical_mod(c.target, c.modulus), c.modulus};
    };
    std::set<std::pair<Int, Int>> got{canon(a), canon(b)};
    std::set<std::pair<Int, Int>> want{{Int(0), Int(8)}, {Int(4), Int(8)}};
    o.expect(got == want, "conflict {x = 0 mod 8, x = 4 mod 8}");
  }
  if (auto at8 = forced_obstruction(f, 8)) {
    o.note("independent of earlier choices, step 8 alone forces " + eq_str(at8->from_earlier) +
           " ; " + eq_str(at8->from_target));
  }

  const Int eight(8);
  auto direct = proj(eight, Int(8));
  auto via6 = proj(proj(eight, Int(6)), Int(8));
  o.note("pi_8(8) = " + to_string(direct.value()) + ", pi_{6,8}(pi_6(8)) = " +
         to_string(via6.value()));
  o.expect(direct.value() == 0 && via6.value() == 2, "projections 0 and 2");
}

// 2. Every CP table lifts to T = 30.
void lift_sweep(Outcome& o) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> shapes{
      {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {4, 2}, {6, 2}, {6, 3}, {8, 4}, {9, 3}};
  std::size_t total = 0, failures = 0;
  for (auto [n, m] : shapes) {
    for_each_cp(n, m, [&](const FiniteFn& f) {
      ++total;
      auto r = lift_prefix(f, 30);
      if (!r.succeeded() || !verify_lift(r.prefix(), f)) ++failures;
      return true;
    });
  }
  o.note(std::to_string(total) + " tables lifted, " + std::to_string(failures) + " failures");
  o.expect(failures == 0, "zero failures");
}

// 3. Canonical binomial representations at n = m in {4, 8, 9}.
void representation(Outcome& o) {
  for (std::uint64_t m : {4u, 8u, 9u}) {
    std::set<std::vector<Int>> seen;
    std::size_t count = 0, bad = 0;
    for_each_cp(m, m, [&](const FiniteFn& f) {
      auto c = represent_cp(f);
      bool ok = c.coeffs().size() == nu_of_modulus(m);
      for (std::size_t k = 0; ok && k < c.coeffs().size(); ++k) {
        ok = c.coeffs()[k] % oracle::lcm_upto(k) == 0;
      }
      for (std::uint64_t x = 0; ok && x < m; ++x) {
        ok = eval_repr(c, Residue(Int(static_cast<unsigned long>(x)), Int(static_cast<unsigned long>(m))))
                 .value() == f(x);
      }
      if (!ok) ++bad;
      seen.insert(c.coeffs());
      ++count;
      return true;
    });
    o.note("m = " + std::to_string(m) + ": " + std::to_string(count) + " functions, " +
           std::to_string(seen.size()) + " distinct representations");
    o.expect(bad == 0, "round trip at m = " + std::to_string(m));
    o.expect(seen.size() == count, "injective at m = " + std::to_string(m));
  }
}

// 4. Newton coefficients.
void newton_suite(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::size_t bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Int> v;
    const std::size_t len = 1 + rng() % 30;
    for (std::size_t i = 0; i < len; ++i) v.emplace_back(static_cast<long>(rng() % 2000001) - 1000000);
    auto a = newton_coeffs(v);
    for (std::size_t x = 0; x < len; ++x) bad += newton_eval(a, x) != v[x];
    bad += newton_synthesize(a, len - 1).values() != v;
  }
  o.expect(bad == 0, "coefficient/evaluation round trip on 500 prefixes");

  bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> a;
    const std::size_t K = rng() % 11;
    for (std::size_t k = 0; k <= K; ++k) {
      a.push_back(oracle::lcm_upto(k) * static_cast<long>(static_cast<long>(rng() % 201) - 100));
    }
    bad += !oracle::prefix_cp(newton_synthesize(NewtonCoeffs{a}, 40).values());
  }
  o.expect(bad == 0, "200 lcm-divisible vectors give CP prefixes on [0, 40]");

  NewtonCoeffs sq{ints({0, 0, 1})};
  auto v = check_lcm_divisibility(sq);
  o.expect(v && v->k == 2, "(0,0,1) fails lcm divisibility at k = 2");
  auto cp = is_cp_prefix(newton_synthesize(sq, 40));
  o.expect(!cp.holds && cp.witness && *cp.witness == PairWitness{2, 0},
           "(0,0,1) prefix fails CP with witness (2,0)");
  if (cp.witness) {
    o.note("witness (" + std::to_string(cp.witness->x) + "," + std::to_string(cp.witness->y) + ")");
  }
}

// 5. Floor-of-exponential exemplars.
void exemplars(Outcome& o) {
  // floor(e x!) for x = 0..12 (x = 0 by convention), from a 50-digit
  // floating-point evaluation.
  const char* frozen[] = {"1",      "2",       "5",         "16",        "65",
                          "326",    "1957",    "13700",     "109601",    "986410",
                          "9864101", "108505112", "1302061345"};
  for (std::uint64_t x = 0; x <= 12; ++x) {
    o.expect(to_string(exemplar_floor_e_fact(x)) == frozen[x], "floor(e x!) at x = " + std::to_string(x));
  }
  for (long a : {1L, 2L, 3L}) {
    std::vector<Int> v;
    for (std::uint64_t x = 0; x <= 30; ++x) {
      v.push_back(a == 1 ? exemplar_floor_e_fact(x) : exemplar_floor_ea_fact(a, x));
    }
    const std::string label = a == 1 ? "floor(e x!)" : "floor(e^{1/" + std::to_string(a) + "} a^x x!)";
    o.expect(oracle::prefix_cp(v), label + " prefix is CP on [0, 30]");
    o.expect(!check_lcm_divisibility(newton_coeffs(v)), label + " coefficients are lcm-divisible");
  }
}

LimitFunction series_fn(const MahlerSeries& s) {
  return [s](const LimitApprox& x) { return mahler_eval(s, x); };
}

// 6. Truncated p-adic and profinite integers.
void limits_suite(Outcome& o) {
  auto m1 = from_int(LimitShape::base_p(2, 8), Int(-1));
  o.expect(std::vector<std::uint64_t>(m1.digits().begin(), m1.digits().end()) ==
               std::vector<std::uint64_t>(8, 1),
           "(a) -1 in base 2 at precision 8 is all ones");

  std::mt19937_64 rng(77);
  const unsigned long primes[] = {2, 3, 5, 7};
  for (int kind = 0; kind < 2; ++kind) {
    std::size_t bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const unsigned N = 1 + rng() % 10;
      auto shape = kind == 0 ? LimitShape::base_p(primes[rng() % 4], N) : LimitShape::factorial(N);
      const Int M = shape.modulus();
      const Int a(static_cast<long>(rng() % 2000001) - 1000000), b(static_cast<long>(rng() % 2000001) - 1000000);
      auto x = from_int(shape, a), y = from_int(shape, b);
      bad += to_int(x + y) != canonical_mod(a + b, M);
      bad += to_int(x - y) != canonical_mod(a - b, M);
      bad += to_int(x * y) != canonical_mod(a * b, M);
      bad += to_int(-x) != canonical_mod(-a, M);
    }
    o.expect(bad == 0, std::string("(b) arithmetic vs integers, ") + (kind == 0 ? "base p" : "factorial"));
  }

  std::size_t bad = 0;
  for (unsigned long p : {2UL, 3UL}) {
    for (unsigned n = 1; n <= 4; ++n) {
      auto shape = LimitShape::base_p(p, n);
      const auto mod = shape.modulus().get_ui();
      for (unsigned long k = 1; k <= 16; ++k) {
        const auto l = mpz_fdiv_ui(oracle::lcm_upto(k).get_mpz_t(), mod);
        for (unsigned long x = 0; x < mod; ++x) {
          auto v = val(from_int(shape, Int(x)));
          bad += oracle::ring_divides(mod, l, x) != (v.saturated || nu_p(p, Int(k)) <= v.value);
        }
      }
    }
  }
  o.expect(bad == 0, "(c) lcm(k) | x in Z/p^n iff nu_p(k) <= val(x)");

  bad = 0;
  for (unsigned long p : {2UL, 3UL}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto shape = LimitShape::base_p(p, 4);
      std::vector<Int> a;
      for (unsigned long k = 0; k <= 8; ++k) a.push_back(oracle::lcm_upto(k) * static_cast<long>(rng() % 100));
      auto tower = level_tower(series_fn(MahlerSeries::from_integers(shape, a)), shape, 4);
      for (const auto& level : tower) bad += !is_cp_level(level).holds;
      bad += !check_inverse_system(tower, LimitKind::base_p, p).holds;
    }
  }
  o.expect(bad == 0, "(d) lcm-divisible series give CP coherent level tables");

  auto s = lcm_free_series(2, 8, 3);
  auto level2 = level_restrict(series_fn(s), s.shape(), 2);
  auto cp = is_cp_level(level2);
  o.expect(!cp.holds, "(e) lcm-free series has a non-CP level table");
  if (cp.witness) {
    o.note("(e) p = 2, level 2 table " + std::to_string(level2.table(0)) + " " +
           std::to_string(level2.table(1)) + " " + std::to_string(level2.table(2)) + " " +
           std::to_string(level2.table(3)) + ", WITNESS x=" + std::to_string(cp.witness->x) +
           " y=" + std::to_string(cp.witness->y));
  }
}

// Random raw set representations, read bitwise by the oracle.
struct RawSet {
  std::int64_t d, B;
  std::vector<bool> pos, neg, window;

  bool in(std::int64_t x) const {
    if (x > B) return pos[oracle::fmod64(x, d)];
    if (x < -B) return neg[oracle::fmod64(x, d)];
    return window[x + B];
  }
};

RawSet random_raw(std::mt19937_64& rng) {
  RawSet r;
  r.d = 1 + static_cast<std::int64_t>(rng() % 6);
  r.B = static_cast<std::int64_t>(rng() % 6);
  for (std::int64_t i = 0; i < r.d; ++i) {
    r.pos.push_back(rng() % 2);
    r.neg.push_back(rng() % 2);
  }
  for (std::int64_t i = 0; i < 2 * r.B + 1; ++i) r.window.push_back(rng() % 2);
  return r;
}

struct Expr {
  EPSet set;
  std::function<bool(std::int64_t)> in;
};

Expr random_expr(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    auto raw = std::make_shared<RawSet>(random_raw(rng));
    return {EPSet(raw->d, raw->B, raw->pos, raw->neg, raw->window), [raw](std::int64_t x) { return raw->in(x); }};
  }
  auto a = random_expr(rng, depth - 1);
  switch (rng() % 4) {
    case 0: {
      auto b = random_expr(rng, depth - 1);
      return {set_union(a.set, b.set), [a, b](std::int64_t x) { return a.in(x) || b.in(x); }};
    }
    case 1: {
      auto b = random_expr(rng, depth - 1);
      return {set_intersection(a.set, b.set), [a, b](std::int64_t x) { return a.in(x) && b.in(x); }};
    }
    case 2:
      return {set_complement(a.set), [a](std::int64_t x) { return !a.in(x); }};
    default: {
      const std::int64_t t = static_cast<std::int64_t>(rng() % 15) - 7;
      return {translate(a.set, t), [a, t](std::int64_t x) { return a.in(x + t); }};
    }
  }
}

// 7. Lattices of eventually periodic sets.
void lattice_suite(Outcome& o) {
  std::mt19937_64 rng(4711);
  std::size_t bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto e = random_expr(rng, 4);
    for (std::int64_t x = -100; x <= 100; ++x) {
      if (e.set.contains(x) != e.in(x)) {
        ++bad;
        break;
      }
    }
  }
  o.expect(bad == 0, "(a) 500 random expressions agree with the bit-vector oracle on [-100, 100]");

  auto power = [](std::initializer_list<long> c) { return CpPolynomial::from_power_coeffs(ints(c)); };
  const std::vector<std::pair<std::string, CpPolynomial>> grid{
      {"x", power({0, 1})},           {"x+1", power({1, 1})},   {"x+3", power({3, 1})},
      {"x-2", power({-2, 1})},        {"2x", power({0, 2})},     {"x^2+40x", power({0, 40, 1})},
      {"3x^2+110x", power({0, 110, 3})}};
  const std::int64_t window = 16;
  std::size_t cases = 0, ui_bad = 0, member_bad = 0;
  std::string sample;
  for (const auto& [name, f] : grid) {
    for (std::int64_t d = 2; d <= 8; ++d) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::int64_t> F;
        for (std::int64_t r = 0; r < d; ++r) {
          if (mask >> r & 1) F.push_back(r);
        }
        auto L = recognizable(d, F);
        auto pre = preimage_recognizable(f, L);
        auto ui = union_intersection_preimage(f, L, window);
        ui_bad += !(ui.set == pre);
        auto m = lattice_membership(L, pre);
        const bool ok = m.member && m.certificate && m.certificate->evaluate(L) == pre;
        member_bad += !ok;
        if (ok && sample.empty() && name == "x^2+40x" && d == 6 && F == std::vector<std::int64_t>{1, 4}) {
          sample = "f = " + name + ", L = {1,4} + 6Z: X = " + m.certificate->to_string();
        }
        ++cases;
      }
    }
  }
  o.note(std::to_string(cases) + " grid cases, window [-16, 16]");
  o.expect(ui_bad == 0, "(b) union of intersections equals the preimage on the grid");
  o.expect(member_bad == 0, "(c) every grid preimage is a lattice member with a certificate");
  if (!sample.empty()) o.note("(c) e.g. " + sample);

  auto sq = power({0, 0, 1});
  auto ray = arithmetic_ray(6, 10);
  auto X = preimage_eventual(sq, ray);
  auto cert = certify_nonmembership_negatives(ray, X);
  o.expect(cert.has_value(), "(d) non-membership certificate for L = 6 + 10N, f = x^2");
  if (cert) o.note("(d) " + *cert);
  auto R = recognizable(10, {6});
  auto Y = preimage_recognizable(sq, R);
  o.expect(Y == recognizable(10, {4, 6}), "(d) preimage of {6} + 10Z is {4,6} + 10Z");
  auto m = lattice_membership(R, Y);
  o.expect(m.member && m.certificate, "(d) membership certificate for {4,6} + 10Z");
  if (m.certificate) o.note("(d) {4,6} + 10Z = " + m.certificate->to_string());
}

// 8. Generalized CRT against an exhaustive scan.
void crt_suite(Outcome& o) {
  std::mt19937_64 rng(8);
  std::size_t bad = 0, infeasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    CongruenceSystem sys;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
      const std::int64_t a = static_cast<std::int64_t>(rng() % 41) - 20;
      raw.emplace_back(a, m);
      sys.add(Int(static_cast<long>(a)), Int(static_cast<long>(m)));
    }
    auto expect = oracle::crt_scan(raw);
    auto got = gcrt_solve(sys);
    if (expect) {
      std::int64_t period = 1;
      for (auto [a, m] : raw) period = std::lcm(period, m);
      bad += !got.feasible() || got.solution->least != *expect || got.solution->period != period;
    } else {
      ++infeasible;
      if (got.feasible() || !got.conflict) {
        ++bad;
        continue;
      }
      auto [i, j] = *got.conflict;
      const auto g = std::gcd(raw[i].second, raw[j].second);
      bad += !(i < j && j < k) || oracle::fmod64(raw[i].first - raw[j].first, g) == 0;
    }
  }
  o.note(std::to_string(infeasible) + " of 1000 systems infeasible");
  o.expect(bad == 0, "agreement with the scan, violating pairs genuine");
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    double limit_s;
    Criterion run;
  };
  const std::vector<Entry> criteria{
      {"wrap-around table end to end", 1, wrap_table},
      {"every CP table lifts to T = 30", 60, lift_sweep},
      {"binomial representation round trip", 60, representation},
      {"Newton coefficient suite", 30, newton_suite},
      {"floor-of-exponential exemplars", 10, exemplars},
      {"truncated limit suite", 60, limits_suite},
      {"eventually periodic lattice suite", 60, lattice_suite},
      {"generalized CRT vs scan", 5, crt_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream budget;
    budget.precision(3);
    budget << secs << " s";
    o.expect(secs < criteria[i].limit_s, "time budget " + std::to_string(static_cast<int>(criteria[i].limit_s)) + " s");
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].title << " ("
              << budget.str() << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << '/' << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
