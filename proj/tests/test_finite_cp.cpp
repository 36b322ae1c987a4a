#include <map>
#include <set>

#include "congru/error.hpp"
#include "congru/finite_cp.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace congru;

TEST_SUITE("finite_cp") {

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteFn(0, 2, {}), PreconditionError);
  CHECK_THROWS_AS(FiniteFn(2, 2, {0}), PreconditionError);
  CHECK_THROWS_AS(FiniteFn(2, 2, {0, 2}), PreconditionError);
  auto c = FiniteFn::constant(3, 5, 7);
  CHECK(c(0) == 2);
  CHECK(FiniteFn::identity(4)(3) == 3);
}

TEST_CASE("divisibility in Z/m agrees with the definition") {
  for (std::uint64_t m = 1; m <= 16; ++m) {
    for (std::uint64_t d = 0; d < m; ++d) {
      for (std::uint64_t e = 0; e < m; ++e) CHECK(divides_in_ring(m, d, e) == oracle::ring_divides(m, d, e));
    }
  }
}

TEST_CASE("the wrap-around table on Z/6 -> Z/8 is CP") {
  FiniteFn f(6, 8, {0, 3, 4, 1, 4, 7});
  CHECK(is_cp_finite(f).holds);
}

TEST_CASE("witnesses are lexicographically first") {
  auto a = is_cp_finite(FiniteFn(4, 4, {1, 1, 2, 3}));
  REQUIRE_FALSE(a.holds);
  CHECK(*a.witness == PairWitness{0, 2});
  auto b = is_cp_finite(FiniteFn(4, 4, {0, 1, 1, 0}));
  REQUIRE_FALSE(b.holds);
  CHECK(*b.witness == PairWitness{0, 2});
  CHECK(is_cp_finite(FiniteFn(4, 4, {0, 1, 0, 1})).holds);
  CHECK(is_cp_samering(FiniteFn::identity(7)).holds);
  CHECK_THROWS_AS(is_cp_samering(FiniteFn(4, 2, {0, 1, 0, 1})), PreconditionError);
}

TEST_CASE("constants and identity are CP") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    CHECK(is_cp_finite(FiniteFn::identity(n)).holds);
    for (std::uint64_t m = 1; m <= 8; ++m) CHECK(is_cp_finite(FiniteFn::constant(n, m, 1)).holds);
  }
}

TEST_CASE("checker and witness agree with the brute-force oracle on every table") {
  for (auto [n, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {3, 3}, {4, 4}, {4, 2}, {2, 4}, {3, 4}, {6, 2}, {5, 3}}) {
    std::vector<std::uint64_t> t(n, 0);
    while (true) {
      auto expect = oracle::cp_violation(n, m, t);
      auto got = is_cp_finite(FiniteFn(n, m, t));
      REQUIRE(got.holds == !expect.has_value());
      if (expect) CHECK(*got.witness == PairWitness{expect->first, expect->second});
      std::size_t i = n;
      while (i > 0 && t[i - 1] == m - 1) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (auto [n, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {4, 2}, {2, 4}, {3, 2}, {6, 3}, {6, 4}, {3, 6}, {6, 2}}) {
    auto expect = oracle::all_cp(n, m);
    auto got = enumerate_cp(n, m);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(std::vector<std::uint64_t>(got[i].table().begin(), got[i].table().end()) == expect[i]);
    }
  }
}

TEST_CASE("CP counts") {
  CHECK(count_cp(1, 1) == 1);
  CHECK(count_cp(2, 2) == 4);
  CHECK(count_cp(3, 3) == 27);
  CHECK(count_cp(4, 4) == 64);
  CHECK(count_cp(4, 2) == 4);
  CHECK(count_cp(6, 4) == 64);
  CHECK(count_cp(6, 8) == 4096);
  CHECK(count_cp(8, 8) == 16384);
  CHECK(count_cp(9, 9) == 531441);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_cp(8, 8, 100), LimitError);
  CHECK(enumerate_cp(4, 4, 64).size() == 64);
}

TEST_CASE("early stop of the visitor") {
  std::size_t seen = 0;
  for_each_cp(5, 5, [&](const FiniteFn&) { return ++seen < 10; });
  CHECK(seen == 10);
}

TEST_CASE("canonical coefficients") {
  CHECK(canonical_coefficient(2, Int(2), 4) == 2);
  CHECK(canonical_coefficient(3, Int(2), 4) == 6);
  CHECK(canonical_coefficient(4, Int(0), 8) == 0);
  CHECK(canonical_coefficient(4, Int(4), 8) == 12);
  CHECK_THROWS_AS(canonical_coefficient(2, Int(1), 4), PreconditionError);
  CHECK(admissible_coefficient_count(0, 8) == 8);
  CHECK(admissible_coefficient_count(2, 8) == 4);
  CHECK(admissible_coefficient_count(4, 8) == 2);
  CHECK(admissible_coefficient_count(3, 9) == 3);
  CHECK_THROWS_AS(CpCoeffs(4, 4, {0, 0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(CpCoeffs(4, 4, {0, 0, 2}), PreconditionError);
}

TEST_CASE("representation of simple functions") {
  auto id = represent_cp(FiniteFn::identity(4));
  CHECK(id.coeffs() == std::vector<Int>{0, 1, 0, 0});
  auto c = represent_cp(FiniteFn::constant(8, 4, 3));
  CHECK(c.coeffs() == std::vector<Int>{3, 0, 0, 0});
  CHECK_THROWS_AS(represent_cp(FiniteFn(4, 4, {1, 1, 2, 3})), PreconditionError);
  CHECK_THROWS_AS(represent_cp(FiniteFn(6, 8, {0, 3, 4, 1, 4, 7})), PreconditionError);
  CHECK_THROWS_AS(represent_cp(FiniteFn::constant(3, 1, 0)), PreconditionError);
}

TEST_CASE("representation round trip and injectivity") {
  for (auto [n, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {4, 4}, {8, 4}, {6, 2}, {6, 3}, {6, 6}, {12, 4}, {8, 8}}) {
    std::set<std::vector<Int>> seen;
    std::size_t count = 0;
    for_each_cp(n, m, [&, n = n](const FiniteFn& f) {
      auto repr = represent_cp(f);
      REQUIRE(repr.coeffs().size() == nu_of_modulus(m));
      for (std::size_t k = 0; k < repr.coeffs().size(); ++k) {
        REQUIRE(repr.coeffs()[k] % lcm_upto(k) == 0);
      }
      REQUIRE(eval_repr_table(repr) == f);
      for (std::uint64_t x = 0; x < n; ++x) {
        Residue r(Int(static_cast<unsigned long>(x)), Int(static_cast<unsigned long>(n)));
        REQUIRE(eval_repr(repr, r).value() == f(x));
      }
      seen.insert(repr.coeffs());
      ++count;
      return true;
    });
    CHECK(seen.size() == count);
  }
}

}
