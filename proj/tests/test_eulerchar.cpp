#include <catch2/catch_amalgamated.hpp>

#include "eulergl/eulerchar.hpp"

using namespace eulergl;

TEST_CASE("polynomial generating functions") {
  // F_1 = 1 - x for any order
  PolySeries f1 = genfun_poly(1, 5);
  CHECK(f1[0] == QPolynomial(1));
  CHECK(f1[1] == QPolynomial(-1));
  for (size_t n = 2; n <= 5; ++n) CHECK(f1[n].is_zero());

  // F_2 = 1 + (1-q)(x + x^2 + ...)
  PolySeries f2 = genfun_poly(2, 3);
  QPolynomial onemq = QPolynomial(1) - QPolynomial::variable();
  for (size_t n = 1; n <= 3; ++n) CHECK(f2[n] == onemq);

  // F_4 coefficient at n = 2 is -(q-1)^3 (3q^2+1)
  QPolynomial qm1 = QPolynomial::variable() - QPolynomial(1);
  CHECK(genfun_poly(4, 2)[2] ==
        -(qm1 * qm1 * qm1 * parse_polynomial("3q^2 + 1")));
  CHECK(genfun_poly(4, 1)[1] == -(qm1 * qm1 * qm1));
}

TEST_CASE("chi polynomials") {
  CHECK(chi_poly(1, 2).is_zero());
  CHECK(chi_poly(1, 1) == QPolynomial(-1));
  // chi_3(n, q) = -(q-1)^2 n q^{n-1}
  QPolynomial qm1 = QPolynomial::variable() - QPolynomial(1);
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(chi_poly(3, n) ==
          -(qm1 * qm1 * QPolynomial::monomial(Int((long)n), n - 1)));
  // chi_5(2, q) = -(q-1)^4 q (4q^2 + 4)
  CHECK(chi_poly(5, 2) ==
        -(qm1 * qm1 * qm1 * qm1 * QPolynomial::variable() *
          parse_polynomial("4q^2 + 4")));
}

TEST_CASE("numeric generating functions") {
  IntSeries s = genfun_at(5, 2, 2);
  CHECK(s[0] == 1);
  CHECK(s[1] == -1);
  CHECK(s[2] == -40);

  IntSeries t = genfun_at(2, 3, 3);
  for (size_t n = 1; n <= 3; ++n) CHECK(t[n] == -2);

  IntSeries u = genfun_at(1, 7, 4);
  CHECK(u == IntSeries::one_minus_xk(4, 1));

  CHECK_THROWS_AS(genfun_at(2, 1, 3), domain_error);
}

TEST_CASE("coefficient recursion equals the exponential and the polynomial") {
  CHECK(chi_recursive_at(4, 2, 2) == -13);
  CHECK(chi_recursive_at(3, 3, 3) == -108);
  for (unsigned n = 1; n <= 6; ++n) CHECK(chi_recursive_at(2, n, 5) == -4);

  for (unsigned r = 1; r <= 6; ++r)
    for (long q : {2, 3, 4, 5, 7, 8, 9}) {
      IntSeries viaExp = genfun_at(r, q, 10);
      PolySeries viaPoly = genfun_poly(r, 10);
      for (unsigned n = 1; n <= 10; ++n) {
        CAPTURE(r, q, n);
        Int rec = chi_recursive_at(r, n, q);
        CHECK(rec == viaExp[n]);
        CHECK(rec == viaPoly[n].evaluate(Int(q)));
      }
    }
}

TEST_CASE("p-primary generating functions, closed form") {
  IntSeries a = p_genfun_at(2, 2, 9, 2);
  CHECK(a[1] == -8);
  CHECK(a[2] == 24);

  IntSeries b = p_genfun_at(2, 3, 2, 6);
  std::vector<long> expect_b = {-1, -1, 1, 0, 0, -1};
  for (size_t n = 1; n <= 6; ++n) CHECK(b[n] == expect_b[n - 1]);

  IntSeries c = p_genfun_at(2, 5, 16, 2);
  CHECK(c[1] == -5);
  CHECK(c[2] == 10);

  // negative 2-adic representatives
  IntSeries d = p_genfun_at(2, 2, -3, 6);
  std::vector<long> expect_d = {-4, 4, 4, -12, 12, -4};
  for (size_t n = 1; n <= 6; ++n) CHECK(d[n] == expect_d[n - 1]);

  // p | q collapses to 1 - x
  for (unsigned r = 1; r <= 4; ++r) {
    CHECK(p_genfun_at(r, 2, 4, 6) == IntSeries::one_minus_xk(6, 1));
    CHECK(p_genfun_at(r, 3, 9, 6) == IntSeries::one_minus_xk(6, 1));
  }

  // first coefficient is -((q-1)_p)^{r-1}
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned p : {2u, 3u, 5u})
      for (long q : {2, 3, 4, 5, 7, 9, 16, -3, -9}) {
        if (q == 2 || q == -3 || q == -9 || q % p) {
          CAPTURE(r, p, q);
          CHECK(p_genfun_at(r, p, q, 1)[1] ==
                -pow_int(p_part(p, Int(q) - 1), r - 1));
        }
      }

  CHECK_THROWS_AS(p_genfun_at(2, 2, -1, 3), domain_error);
}

TEST_CASE("p-primary recursion route agrees with the closed form") {
  CHECK(p_genfun_recursive(1, 3, 4, 4) == IntSeries::one_minus_xk(4, 1));

  IntSeries g = p_genfun_recursive(3, 3, 4, 3);
  CHECK(g[1] == -9);
  CHECK(g[2] == 36);
  CHECK(g[3] == -108);

  for (unsigned p : {2u, 3u, 5u})
    for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
      for (unsigned r = 1; r <= 4; ++r) {
        if (q % p == 0) continue;
        CAPTURE(p, q, r);
        CHECK(p_genfun_recursive(r, p, q, 8) == p_genfun_at(r, p, q, 8));
      }

  // p | q is fine for the recursion too
  CHECK(p_genfun_recursive(3, 2, 4, 6) == IntSeries::one_minus_xk(6, 1));

  CHECK_THROWS_AS(p_genfun_recursive(2, 2, 6, 4), domain_error);
  CHECK_THROWS_AS(p_genfun_recursive(2, 2, -3, 4), domain_error);
}

TEST_CASE("p-equivalent prime powers share their generating functions") {
  // the p-primary family depends on q only through its signature
  struct Pair { unsigned p; long q1, q2; };
  for (auto [p, q1, q2] : {Pair{2, 5, -3}, Pair{2, 13, 5}, Pair{3, 5, 2},
                           Pair{3, 7, 4}, Pair{5, 3, 2}, Pair{5, 23, 3}}) {
    REQUIRE(p_signature(p, q1) == p_signature(p, q2));
    for (unsigned r = 1; r <= 4; ++r) {
      CAPTURE(p, q1, q2, r);
      CHECK(p_genfun_at(r, p, q1, 12) == p_genfun_at(r, p, q2, 12));
    }
  }
}

TEST_CASE("infinite product exponents") {
  // b_2(q)(n) = Abar(n)(q)
  auto b2 = b_exponents(2, 2, 8);
  for (size_t n = 1; n <= 8; ++n)
    CHECK(b2[n - 1] == count_irreducibles_bar(n, 2));

  // r = 1: F_1 = 1 - x
  auto b1 = b_exponents(1, 5, 6);
  CHECK(b1[0] == 1);
  for (size_t n = 2; n <= 6; ++n) CHECK(b1[n - 1] == 0);

  // p-primary: b^p_2(q)(n) = A^p(n)(q)
  auto bp = b_exponents(2, 3, 8, 2);
  for (size_t n = 1; n <= 8; ++n)
    CHECK(bp[n - 1] == count_ppower_irreducibles(n, 2, 3));

  // the product over (1-x^n)^{b_n} reproduces the generating function
  for (unsigned r = 1; r <= 6; ++r)
    for (long q : {2, 3, 4, 5, 6, 7, 8, 9}) {
      auto b = b_exponents(r, q, 12);
      CHECK(product_from_exponents(b, ProductSign::direct) ==
            genfun_at(r, q, 12));
    }
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned p : {2u, 3u, 5u})
      for (long q : {2, 3, 4, 5, 7, 9}) {
        auto b = b_exponents(r, q, 12, p);
        CHECK(product_from_exponents(b, ProductSign::direct) ==
              p_genfun_at(r, p, q, 12));
      }
}

TEST_CASE("helper series") {
  IntSeries q2 = qp_series(2, 3);
  CHECK(q2[0] == 1);
  CHECK(q2[1] == -2);
  CHECK(q2[2] == 2);
  CHECK(q2[3] == -2);

  for (unsigned p : {2u, 3u, 5u})
    CHECK(gp_series(p, 1, 8) == IntSeries::one_minus_xk(8, 1));

  IntSeries part2 = pp_partition_series(2, 9);
  std::vector<long> expect = {1, 1, 2, 2, 4, 4, 6, 6, 10, 10};
  for (size_t n = 0; n <= 9; ++n) CHECK(part2[n] == expect[n]);
}

TEST_CASE("primitive roots") {
  CHECK(find_primitive_root(3) == 2);
  CHECK(find_primitive_root(5) == 2);
  CHECK(find_primitive_root(7) == 3);
}
