#include <functional>
#include <memory>
#include <random>

#include "congru/error.hpp"
#include "congru/lattices.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace congru;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

CpPolynomial power(std::initializer_list<long> c) { return CpPolynomial::from_power_coeffs(ints(c)); }

// A random raw representation together with a membership predicate that
// reads the raw bits directly.
struct RawSet {
  std::int64_t d, B;
  std::vector<bool> pos, neg, window;

  bool in(std::int64_t x) const {
    if (x > B) return pos[oracle::fmod64(x, d)];
    if (x < -B) return neg[oracle::fmod64(x, d)];
    return window[x + B];
  }
  EPSet build() const { return EPSet(d, B, pos, neg, window); }
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
    return Expr{raw->build(), [raw](std::int64_t x) { return raw->in(x); }};
  }
  switch (rng() % 4) {
    case 0: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return Expr{set_union(a.set, b.set), [a, b](std::int64_t x) { return a.in(x) || b.in(x); }};
    }
    case 1: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return Expr{set_intersection(a.set, b.set), [a, b](std::int64_t x) { return a.in(x) && b.in(x); }};
    }
    case 2: {
      auto a = random_expr(rng, depth - 1);
      return Expr{set_complement(a.set), [a](std::int64_t x) { return !a.in(x); }};
    }
    default: {
      auto a = random_expr(rng, depth - 1);
      const std::int64_t t = static_cast<std::int64_t>(rng() % 15) - 7;
      return Expr{translate(a.set, t), [a, t](std::int64_t x) { return a.in(x + t); }};
    }
  }
}

bool same_on(const EPSet& s, std::int64_t lo, std::int64_t hi, const std::function<bool(std::int64_t)>& in) {
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (s.contains(x) != in(x)) return false;
  }
  return true;
}

std::vector<std::pair<std::string, CpPolynomial>> grid_functions() {
  return {
      {"x", power({0, 1})},          {"x+1", power({1, 1})},        {"x+3", power({3, 1})},
      {"x-2", power({-2, 1})},       {"2x", power({0, 2})},          {"3x+1", power({1, 3})},
      {"x^2+40x", power({0, 40, 1})}, {"3x^2+110x", power({0, 110, 3})},
  };
}

}  // namespace

TEST_SUITE("lattices") {

TEST_CASE("recognizable sets") {
  auto L = recognizable(10, {6});
  CHECK(L.contains(6));
  CHECK(L.contains(16));
  CHECK(L.contains(-4));
  CHECK_FALSE(L.contains(5));
  CHECK(L.is_recognizable());
  CHECK(recognizable(1, {0}) == EPSet::all());
  CHECK(recognizable(1, {}) == EPSet::empty());
  CHECK(recognizable(20, {6, 16}) == L);
  CHECK(recognizable(20, {6, 16}).period() == 10);
  CHECK_THROWS_AS(recognizable(10, {10}), PreconditionError);
}

TEST_CASE("normal form shrinks the bound") {
  // The window agrees with the laws everywhere.
  EPSet s(2, 3, {true, false}, {true, false}, {false, true, false, true, false, true, false});
  CHECK(s.bound() == 0);
  CHECK(s == recognizable(2, {0}));
  // One exceptional point keeps B at its distance.
  EPSet t(2, 3, {true, false}, {true, false}, {false, true, true, true, false, true, false});
  CHECK(t.bound() == 1);
  CHECK_FALSE(t.is_recognizable());
}

TEST_CASE("rational sets from parts") {
  auto tail = rational_from_parts(10, {}, {}, {6});
  CHECK(tail.contains(16));
  CHECK(tail.contains(26));
  CHECK_FALSE(tail.contains(6));
  CHECK_FALSE(tail.contains(-4));
  CHECK(rational_from_parts(10, {}, {6}, {6}) == arithmetic_ray(6, 10));
  CHECK(rational_from_parts(10, {}, {}, {}) == EPSet::empty());
  std::vector<std::int64_t> all_res, all_f;
  for (std::int64_t r = 0; r < 10; ++r) all_res.push_back(r);
  for (std::int64_t x = -9; x <= 9; ++x) all_f.push_back(x);
  CHECK(rational_from_parts(10, all_res, all_f, all_res) == EPSet::all());
  // Pointwise against the defining union on [-30, 30].
  auto r = rational_from_parts(10, {4}, {-3, 2}, {6, 7});
  for (std::int64_t x = -30; x <= 30; ++x) {
    bool expect = x == -3 || x == 2 || (x >= 10 && (x % 10 == 6 || x % 10 == 7)) ||
                  (x <= -10 && (-x) % 10 == 4);
    CHECK(r.contains(x) == expect);
  }
  CHECK_THROWS_AS(rational_from_parts(10, {}, {10}, {}), PreconditionError);
}

TEST_CASE("translates") {
  auto L = recognizable(10, {6});
  CHECK(translate(L, 2) == recognizable(10, {4}));
  CHECK(translate(L, 0) == L);
  CHECK(translate(L, 12) == translate(L, 2));
  CHECK(translate(L, -8) == translate(L, 2));
  auto ray = arithmetic_ray(6, 10);
  CHECK(translate(ray, 11) == arithmetic_ray(-5, 10));
  for (std::int64_t x = -40; x <= 40; ++x) CHECK(translate(ray, 11).contains(x) == ray.contains(x + 11));
}

TEST_CASE("boolean operations") {
  auto L = recognizable(10, {6});
  CHECK(set_union(L, EPSet::empty()) == L);
  CHECK(set_intersection(L, EPSet::all()) == L);
  CHECK(set_union(recognizable(10, {4}), recognizable(10, {6})) == recognizable(10, {4, 6}));
  auto neg_ray = rational_from_parts(10, {4}, {}, {});  // -(14 + 10N)
  CHECK(neg_ray.contains(-14));
  CHECK(neg_ray.contains(-24));
  CHECK(set_intersection(arithmetic_ray(6, 10), neg_ray) == EPSet::empty());
  CHECK(set_complement(set_complement(neg_ray)) == neg_ray);
  CHECK(set_union(recognizable(2, {0}), recognizable(3, {0})).period() == 6);
}

TEST_CASE("random expressions agree with a pointwise oracle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    auto e = random_expr(rng, 4);
    REQUIRE(same_on(e.set, -100, 100, e.in));
  }
}

TEST_CASE("algebraic laws on random sets") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_raw(rng).build(), b = random_raw(rng).build();
    CHECK(set_complement(set_union(a, b)) == set_intersection(set_complement(a), set_complement(b)));
    CHECK(set_complement(set_intersection(a, b)) == set_union(set_complement(a), set_complement(b)));
    CHECK(set_union(a, set_intersection(a, b)) == a);
    CHECK(set_intersection(a, set_union(a, b)) == a);
    const std::int64_t s = static_cast<std::int64_t>(rng() % 21) - 10;
    const std::int64_t t = static_cast<std::int64_t>(rng() % 21) - 10;
    CHECK(translate(translate(a, s), t) == translate(a, s + t));
    // Equality is equality of normal forms.
    CHECK(same_on(a, -100, 100, [&](std::int64_t x) { return translate(translate(a, s), -s).contains(x); }));
  }
}

TEST_CASE("CP polynomials") {
  auto sq = power({0, 0, 1});
  CHECK(sq.newton() == ints({0, 1, 2}));
  CHECK(sq.degree() == 2);
  CHECK(sq(std::int64_t{-3}) == 9);
  CHECK(sq.scaled_power_coeffs() == ints({0, 0, 2}));
  CHECK(power({1, 3}).scaled_power_coeffs() == ints({1, 3}));
  CHECK(power({5}).is_constant());
  CHECK_THROWS_AS(CpPolynomial(ints({0, 0, 1})), PreconditionError);
  for (const auto& [name, f] : grid_functions()) CHECK_FALSE(cp_violation_on_window(f, -15, 15));
  CHECK(power({0, 0, 0, 1}).newton() == ints({0, 1, 6, 6}));
  auto cube = power({0, 0, 0, 1});
  for (std::int64_t x = -20; x <= 20; ++x) CHECK(cube(x) == Int(static_cast<long>(x * x * x)));
  CHECK(monotonicity_violation(sq, -3, 3) == std::int64_t{-3});
  CHECK_FALSE(monotonicity_violation(power({0, 2}), -50, 50));
}

TEST_CASE("preimages of recognizable sets") {
  CHECK(preimage_recognizable(power({0, 0, 1}), recognizable(10, {6})) == recognizable(10, {4, 6}));
  CHECK(preimage_recognizable(power({0, 1}), recognizable(7, {1, 3})) == recognizable(7, {1, 3}));
  CHECK(preimage_recognizable(power({6}), recognizable(10, {6})) == EPSet::all());
  CHECK(preimage_recognizable(power({5}), recognizable(10, {6})) == EPSet::empty());
  CHECK_THROWS_AS(preimage_recognizable(power({0, 1}), arithmetic_ray(0, 2)), PreconditionError);
  auto fs = grid_functions();
  fs.emplace_back("x^2", power({0, 0, 1}));
  fs.emplace_back("x^3", power({0, 0, 0, 1}));
  fs.emplace_back("-x", power({0, -1}));
  for (const auto& [name, f] : fs) {
    for (std::int64_t d = 2; d <= 8; ++d) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::int64_t> F;
        for (std::int64_t r = 0; r < d; ++r) {
          if (mask >> r & 1) F.push_back(r);
        }
        auto L = recognizable(d, F);
        auto pre = preimage_recognizable(f, L);
        REQUIRE(same_on(pre, -5 * d, 5 * d, [&, &f = f](std::int64_t x) { return L.contains(f(x)); }));
      }
    }
  }
}

TEST_CASE("preimages of arbitrary sets") {
  auto sq = power({0, 0, 1});
  auto L = arithmetic_ray(6, 10);
  auto pre = preimage_eventual(sq, L);
  CHECK(pre == recognizable(10, {4, 6}));
  CHECK_FALSE(pre.has_finitely_many_negatives());
  CHECK(preimage_eventual(power({1, 1}), recognizable(10, {6})) == recognizable(10, {5}));
  CHECK(preimage_eventual(power({0, 1}), L) == L);
  CHECK(preimage_eventual(power({0, -1}), L) == rational_from_parts(10, {6}, {-6}, {}));
  CHECK_THROWS_AS(preimage_eventual(power({3}), L), PreconditionError);

  std::mt19937_64 rng(1618);
  auto fs = grid_functions();
  fs.emplace_back("x^2", sq);
  fs.emplace_back("-x", power({0, -1}));
  fs.emplace_back("x^3", power({0, 0, 0, 1}));
  fs.emplace_back("-x^2+x", power({0, 1, -1}));
  for (int trial = 0; trial < 60; ++trial) {
    auto raw = random_raw(rng);
    auto S = raw.build();
    for (const auto& [name, f] : fs) {
      auto P = preimage_eventual(f, S);
      const std::int64_t span = P.bound() + 5 * std::max<std::int64_t>(P.period(), S.period());
      REQUIRE(same_on(P, -span, span, [&, &f = f](std::int64_t x) { return raw.in(f(x).get_si()); }));
    }
  }
}

TEST_CASE("union-of-intersections identity for monotone CP functions") {
  auto r = union_intersection_preimage(power({0, 2}), recognizable(4, {0}));
  CHECK(r.set == recognizable(2, {0}));
  CHECK(r.set == preimage_recognizable(power({0, 2}), recognizable(4, {0})));
  CHECK(r.representatives == std::vector<std::int64_t>{0, 2});
  auto L = recognizable(6, {1, 4});
  CHECK(union_intersection_preimage(power({0, 1}), L).set == L);
  CHECK(union_intersection_preimage(power({2, 1}), L).set == translate(L, 2));
  CHECK_THROWS_AS(union_intersection_preimage(power({0, 0, 1}), L), PreconditionError);
  CHECK_THROWS_AS(union_intersection_preimage(power({0, 1}), arithmetic_ray(0, 3)), PreconditionError);

  for (const auto& [name, f] : grid_functions()) {
    for (std::int64_t d = 2; d <= 8; ++d) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::int64_t> F;
        for (std::int64_t r0 = 0; r0 < d; ++r0) {
          if (mask >> r0 & 1) F.push_back(r0);
        }
        auto Ld = recognizable(d, F);
        auto got = union_intersection_preimage(f, Ld, 16);
        REQUIRE(got.set == preimage_recognizable(f, Ld));
        REQUIRE(got.expression.evaluate(Ld) == got.set);
      }
    }
  }
}

TEST_CASE("lattice membership") {
  auto L = recognizable(10, {6});
  auto self = lattice_membership(L, L);
  REQUIRE(self.member);
  CHECK(self.certificate->to_string() == "(L-0)");
  auto pair = lattice_membership(L, recognizable(10, {4, 6}));
  REQUIRE(pair.member);
  CHECK(pair.certificate->to_string() == "(L-2) ∪ (L-0)");
  auto coarse = lattice_membership(L, recognizable(5, {1}));
  REQUIRE(coarse.member);
  CHECK(coarse.certificate->evaluate(L) == recognizable(5, {1}));

  auto even = recognizable(4, {0, 2});
  auto no = lattice_membership(even, recognizable(4, {0}));
  CHECK_FALSE(no.member);
  CHECK(no.reason.find("does not divide 2") != std::string::npos);
  CHECK_FALSE(lattice_membership(L, arithmetic_ray(6, 10)).member);
  CHECK_FALSE(lattice_membership(L, recognizable(3, {0})).member);

  auto gap = lattice_membership(recognizable(4, {0, 1}), recognizable(4, {0}));
  REQUIRE(gap.member);
  CHECK(gap.certificate->to_string() == "[(L-0) ∩ (L-1)]");
  auto none = lattice_membership(recognizable(4, {0, 1}), EPSet::empty());
  REQUIRE(none.member);
  CHECK(none.certificate->evaluate(recognizable(4, {0, 1})) == EPSet::empty());

  CHECK(lattice_membership(EPSet::empty(), EPSet::empty()).member);
  CHECK_FALSE(lattice_membership(EPSet::empty(), EPSet::all()).member);
  CHECK(lattice_membership(EPSet::all(), EPSet::all()).member);
  CHECK_FALSE(lattice_membership(EPSet::all(), EPSet::empty()).member);
  CHECK_THROWS_AS(lattice_membership(arithmetic_ray(0, 2), L), PreconditionError);
}

TEST_CASE("every set whose period divides that of L is a member") {
  // With d the minimal period, no residue is forced to accompany another.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 7);
    std::vector<std::int64_t> F, G;
    for (std::int64_t r = 0; r < d; ++r) {
      if (rng() % 2) F.push_back(r);
      if (rng() % 2) G.push_back(r);
    }
    auto L = recognizable(d, F);
    if (L == EPSet::empty() || L == EPSet::all()) continue;
    auto X = recognizable(L.period(), [&] {
      std::vector<std::int64_t> g;
      for (auto r : G) {
        if (r < L.period()) g.push_back(r);
      }
      return g;
    }());
    auto m = lattice_membership(L, X);
    REQUIRE(m.member);
    REQUIRE(m.certificate->evaluate(L) == X);
  }
}

TEST_CASE("preimages of recognizable sets stay in the generated lattice") {
  auto fs = grid_functions();
  fs.emplace_back("x^2", power({0, 0, 1}));
  for (const auto& [name, f] : fs) {
    for (std::int64_t d = 2; d <= 8; ++d) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::int64_t> F;
        for (std::int64_t r = 0; r < d; ++r) {
          if (mask >> r & 1) F.push_back(r);
        }
        auto L = recognizable(d, F);
        auto pre = preimage_recognizable(f, L);
        auto m = lattice_membership(L, pre);
        if (name == "x^2") continue;  // not required, x^2 is not monotone
        REQUIRE(m.member);
        REQUIRE(m.certificate->evaluate(L) == pre);
      }
    }
  }
}

TEST_CASE("non-membership from unbounded negatives") {
  auto L = arithmetic_ray(6, 10);
  auto X = preimage_eventual(power({0, 0, 1}), L);
  auto cert = certify_nonmembership_negatives(L, X);
  REQUIRE(cert);
  CHECK(cert->find("unbounded below") != std::string::npos);
  CHECK_FALSE(certify_nonmembership_negatives(L, finite_set({-3, 4})));
  CHECK_FALSE(certify_nonmembership_negatives(L, arithmetic_ray(-20, 3)));
  CHECK_THROWS_AS(certify_nonmembership_negatives(recognizable(10, {6}), X), PreconditionError);
  // The recognizable variant keeps the preimage inside the lattice.
  auto R = recognizable(10, {6});
  auto Y = preimage_recognizable(power({0, 0, 1}), R);
  CHECK(Y == recognizable(10, {4, 6}));
  CHECK(lattice_membership(R, Y).member);
}

TEST_CASE("finite sets") {
  auto s = finite_set({-3, 4, 4});
  CHECK(s.is_finite());
  CHECK(s.contains(-3));
  CHECK_FALSE(s.contains(3));
  CHECK(s.bound() == 4);
  CHECK(finite_set({}) == EPSet::empty());
}

}
