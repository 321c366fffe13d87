#include <doctest.h>

#include <random>

#include <chipoly/continuation.hpp>
#include <chipoly/psi.hpp>
#include <chipoly/special_values.hpp>

#include "grid.hpp"
#include "oracles.hpp"

using namespace chipoly;

TEST_SUITE("exact properties") {
  TEST_CASE("offset consistency on random pairs") {
    std::mt19937_64 rng(8675309);
    std::uniform_int_distribution<unsigned> a_dist(1, 9);
    std::uniform_int_distribution<int> coeff(0, 5);
    for (const auto& chi : {chi3(), chi4()}) {
      const auto table = psi_table(chi, 18);
      for (int trial = 0; trial < 10; ++trial) {
        const QPoly p{coeff(rng), coeff(rng) + 1, 1};
        const unsigned a1 = a_dist(rng);
        const unsigned a2 = a1 + a_dist(rng);
        CHECK(a_offset_consistency(chi, p, table, 1 + trial % 5, a1, a2));
      }
    }
  }

  TEST_CASE("scaling identity for random constants") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> num(1, 20);
    const auto table = psi_table(chi3(), 18);
    for (int trial = 0; trial < 20; ++trial) {
      const Rational c = Rational(num(rng)) / Rational(num(rng));
      CHECK(scaling_identity_check(chi3(), QPoly{0, 1, 1}, c, 1 + trial % 6, table));
      CHECK(scaling_identity_check(chi3(), QPoly{5, 2, 0, 1}, c, 1 + trial % 4, table));
    }
  }

  TEST_CASE("powers equal repeated products") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
      const QPoly p = oracle::random_poly(rng, trial % 4);
      QPoly acc{1};
      for (unsigned m = 0; m <= 6; ++m) {
        CHECK(pow(p, m) == acc);
        acc *= p;
      }
    }
  }
}

TEST_SUITE("numeric properties") {
  TEST_CASE("agreement with direct summation on a grid") {
    std::mt19937_64 rng(6502);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t d = 2 + trial % 2;
      const auto roots = grid::real_polynomial_roots(rng, d, 5);
      const Complex s = grid::point(rng, 1.5L, 3, 3);
      const auto& chi = trial % 3 == 0 ? chi4() : chi3();
      const auto plan = make_plan(chi, roots, 1, s);
      const Complex continued = evaluate_l(plan, s);
      const Complex direct = direct_sum(chi, plan.coeffs, 1, s, 1e-10L);
      CAPTURE(trial);
      CHECK(std::abs(continued - direct) < 1e-8L);
    }
  }

  TEST_CASE("Taylor order does not change the value") {
    std::mt19937_64 rng(1701);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const auto roots = grid::real_polynomial_roots(rng, d, 3);
      const Complex s = grid::point(rng, -2, 3, 4);
      auto plan = make_plan(chi3(), roots, 1, s);
      const Complex base = continuation_eval(plan, s);
      plan.taylor_order += static_cast<unsigned>(d);
      CAPTURE(trial);
      CHECK(std::abs(continuation_eval(plan, s) - base) < 1e-9L);
    }
  }

  TEST_CASE("offset changes only the finite prefix") {
    std::mt19937_64 rng(1999);
    std::uniform_int_distribution<unsigned> extra(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const auto roots = grid::real_polynomial_roots(rng, d, 3);
      const Complex s = grid::point(rng, -2, 3, 4);
      auto plan = make_plan(chi4(), roots, 1, s);
      const Complex at_a = continuation_eval(plan, s);
      const unsigned a = plan.offset_a;
      plan.offset_a += extra(rng);
      const Complex at_b = continuation_eval(plan, s);
      CAPTURE(trial);
      CHECK(std::abs(at_a - at_b - prefix_sum(chi4(), plan.coeffs, a, plan.offset_a, s)) < 1e-9L);
    }
  }
}
