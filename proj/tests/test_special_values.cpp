#include <doctest.h>

#include <random>

#include <chipoly/errors.hpp>
#include <chipoly/special_values.hpp>

#include "oracles.hpp"

using namespace chipoly;
using oracle::q;

TEST_CASE("negative-integer values") {
  const auto table = psi_table(chi3(), 20);
  CHECK(l_negative({chi3(), QPoly{0, 1, 1}, 1, 2}, table) == q("-2/3"));
  CHECK(l_negative({chi3(), QPoly{0, 1}, 1, 2}, table) == 0);

  const std::vector<Rational> x_x1 = {q("1/3"), q("-2/3"), q("28/9"), q("-88/3"), q("1424/3")};
  const std::vector<Rational> cubic = {0, 0, 126, 1890, -3731886};
  for (unsigned m = 1; m <= 5; ++m) {
    CHECK(l_negative({chi3(), QPoly{0, 1, 1}, 1, m}, table) == x_x1[m - 1]);
    CHECK(l_negative({chi3(), QPoly{1, 0, 1}, 1, m}, table) == 0);
    CHECK(l_negative({chi3(), QPoly{5, 2, 0, 1}, 1, m}, table) == cubic[m - 1]);
  }

  const auto t4 = psi_table(chi4(), 20);
  const std::vector<Rational> chi4_cubic = {q("-1/2"), q("-5/2"), 1684, 25385, -265777904};
  for (unsigned m = 1; m <= 5; ++m) CHECK(l_negative({chi4(), QPoly{5, 2, 0, 1}, 1, m}, t4) == chi4_cubic[m - 1]);
}

TEST_CASE("zeta at negative integers") {
  const auto table = psi_table(constant_one(), 8);
  CHECK(l_negative({constant_one(), QPoly{0, 1}, 1, 2}, table) == q("-1/12"));
  CHECK(l_negative({constant_one(), QPoly{0, 1}, 1, 4}, table) == q("1/120"));
  CHECK(l_negative({constant_one(), QPoly{0, 1}, 1, 6}, table) == q("-1/252"));
}

TEST_CASE("offset formula") {
  const auto table = psi_table(chi3(), 12);
  const QPoly p{0, 1, 1};
  // L_A(1-m) = L_1(1-m) - sum_{n<A} chi(n) P'(n) P(n)^{m-1}
  CHECK(l_negative({chi3(), p, 4, 2}, table) == q("-2/3") - weighted_prefix(chi3(), p, 2, 1, 4));
  CHECK(weighted_prefix(chi3(), p, 2, 1, 4) == Rational(3 * 2 - 5 * 6));
  CHECK(a_offset_consistency(chi3(), p, table, 2, 1, 4));
  CHECK(a_offset_consistency(chi3(), p, table, 3, 2, 2));
  CHECK(a_offset_consistency(chi4(), QPoly{1, 0, 1}, psi_table(chi4(), 8), 3, 1, 5));
}

TEST_CASE("scaling identity") {
  const auto t3 = psi_table(chi3(), 12);
  CHECK(scaling_identity_check(chi3(), QPoly{0, 1, 1}, Rational(1), 2, t3));
  CHECK(scaling_identity_check(chi3(), QPoly{0, 1, 1}, Rational(2), 2, t3));
  CHECK(scaling_identity_check(chi4(), QPoly{0, 1}, Rational(3), 3, psi_table(chi4(), 6)));
}

TEST_CASE("polynomial validation") {
  const auto table = psi_table(chi3(), 12);
  CHECK_THROWS_AS(l_negative({chi3(), QPoly{0, -1}, 1, 1}, table), InvalidPolynomial);
  CHECK_THROWS_AS(l_negative({chi3(), QPoly{-3, 1}, 1, 1}, table), InvalidPolynomial);   // root at 3
  CHECK_THROWS_AS(l_negative({chi3(), QPoly{6, -5, 1}, 1, 1}, table), InvalidPolynomial);  // roots 2, 3
  CHECK_THROWS_AS(l_negative({chi3(), QPoly{7}, 1, 1}, table), InvalidPolynomial);
  CHECK_THROWS_AS(l_negative({chi3(), QPoly{0, 1, 1}, 0, 1}, table), InvalidPolynomial);
  CHECK_THROWS_AS(l_negative({chi3(), QPoly{0, 1, 1}, 1, 7}, table), DegreeOverflow);
  CHECK_THROWS_AS(l_negative({chi4(), QPoly{0, 1, 1}, 1, 1}, table), DomainError);
  // Negative integer roots are fine.
  CHECK_NOTHROW(l_negative({chi3(), QPoly{2, 1}, 1, 1}, table));
}

TEST_CASE("telescoping over whole periods") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (const auto& chi : {chi3(), chi4(), constant_one()}) {
    const auto table = psi_table(chi, 15);
    for (int trial = 0; trial < 4; ++trial) {
      const int degree = 1 + trial % 3;
      std::vector<Rational> c;
      for (int k = 0; k < degree; ++k) c.emplace_back(coeff(rng));
      c.emplace_back(1);
      const QPoly p(c);
      for (unsigned m = 1; m <= 5; ++m) {
        const QPoly pm = pow(p, m);
        const QPoly weight = derivative(p) * pow(p, m - 1);
        for (long ell = 1; ell <= 3; ++ell) {
          const long top = ell * static_cast<long>(chi.period());
          Rational rhs = 0;
          for (long n = 1; n <= top; ++n) rhs += chi(n) * evaluate(weight, Rational(n));
          const Rational lhs = psi_apply(table, taylor_shift(pm, Rational(top))) - psi_apply(table, pm);
          CHECK(lhs == Rational(m) * rhs);
        }
      }
    }
  }
}

TEST_CASE("the X(X+u) family") {
  const auto table = psi_table(chi3(), 40);
  const auto printed = oracle::printed_family();
  for (unsigned m = 1; m <= 7; ++m) {
    const auto p = family_pm(chi3(), m, table);
    CHECK(p.m == m);
    // Computed from the definitions; the published list has the opposite sign.
    CHECK(p.value == -printed[m - 1]);
  }
  CHECK(family_pm(chi3(), 1, table).value == QPoly{0, q("-1/3")});
  CHECK(family_pm(chi3(), 4, table).value == QPoly{0, q("98/3"), 0, q("-10/3")});
  CHECK_THROWS_AS(family_pm(chi3(), 21, table), DegreeOverflow);

  const auto range = family_range(family_shape_x_x_plus_u(), 20, table);
  REQUIRE(range.size() == 20);
  for (unsigned m = 1; m <= 20; ++m) {
    CHECK(range[m - 1].m == m);
    if (m <= 8) CHECK(range[m - 1].value == family_pm(chi3(), m, table).value);
    // Odd in u.
    const auto& v = range[m - 1].value;
    for (std::size_t k = 0; k < v.size(); k += 2) CHECK(v[k].is_zero());
  }
}

TEST_CASE("family values are negated special values of X(X+u)") {
  const auto table = psi_table(chi3(), 12);
  for (long u = 1; u <= 3; ++u) {
    for (unsigned m = 1; m <= 5; ++m) {
      const Rational at_u = evaluate(family_pm(chi3(), m, table).value, Rational(u));
      CHECK(at_u == -l_negative({chi3(), QPoly{0, u, 1}, 1, m}, table));
    }
  }
}
