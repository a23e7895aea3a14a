#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eulergl/arith.hpp"
#include "eulergl/serialize.hpp"
#include "eulergl/series.hpp"

using namespace eulergl;

namespace {

IntSeries geometric(size_t N) {  // 1/(1-x)
  IntSeries s(N);
  for (size_t i = 0; i <= N; ++i) s.at(i) = 1;
  return s;
}

}  // namespace

TEST_CASE("polynomial basics") {
  QPolynomial p = parse_polynomial("3q^2 + 1");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == 3);
  CHECK(p.evaluate(Int(2)) == 13);
  CHECK(p.to_string() == "3*q^2 + 1");
  CHECK(parse_polynomial(p.to_string()) == p);
  CHECK(parse_polynomial("- q^3 - 2") ==
        QPolynomial(std::vector<Int>{-2, 0, 0, -1}));
  CHECK(parse_polynomial("0") == QPolynomial());
  QPolynomial q = QPolynomial::variable();
  CHECK((q - 1) * (q + 1) == parse_polynomial("q^2 - 1"));
  CHECK(q.stretch(3) == parse_polynomial("q^3"));
}

TEST_CASE("polynomial exact division helpers") {
  QPolynomial p = parse_polynomial("q^2 - 1");
  auto d = p.div_linear_exact(Int(1));
  REQUIRE(d.has_value());
  CHECK(*d == parse_polynomial("q + 1"));
  CHECK(!parse_polynomial("q^2 + 1").div_linear_exact(Int(1)).has_value());
  auto e = parse_polynomial("q^3 + 2q^2").div_qpow_exact(2);
  REQUIRE(e.has_value());
  CHECK(*e == parse_polynomial("q + 2"));
  CHECK(!parse_polynomial("q + 1").div_qpow_exact(1).has_value());
}

TEST_CASE("series product examples") {
  size_t N = 8;
  auto one = IntSeries::one(N);
  CHECK(IntSeries::one_minus_xk(N, 1) * geometric(N) == one);

  PolySeries a = PolySeries::one(2);
  a.at(1) = -QPolynomial::variable();  // 1 - qx
  PolySeries b = PolySeries::one(2);
  b.at(1) = QPolynomial(-1);  // 1 - x
  PolySeries prod = a * b;
  CHECK(prod[0] == QPolynomial(1));
  CHECK(prod[1] == parse_polynomial("- q - 1"));
  CHECK(prod[2] == QPolynomial::variable());

  IntSeries c = IntSeries::one_minus_xk(4, 1);
  c.at(1) = 1;  // 1 + x
  auto sq = c * c;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == 2);
  CHECK(sq[2] == 1);
}

TEST_CASE("series inverse") {
  size_t N = 10;
  CHECK(IntSeries::one_minus_xk(N, 1).inverse() == geometric(N));

  // 1/(1-qx) = sum q^n x^n
  PolySeries s = PolySeries::one(6);
  s.at(1) = -QPolynomial::variable();
  auto inv = s.inverse();
  for (size_t n = 0; n <= 6; ++n)
    CHECK(inv[n] == QPolynomial::monomial(Int(1), n));

  CHECK(IntSeries::one(N).inverse() == IntSeries::one(N));
  IntSeries bad = IntSeries::one(3);
  bad.at(0) = 2;
  CHECK_THROWS_AS(bad.inverse(), domain_error);
}

TEST_CASE("random unit series invert exactly") {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntSeries s(12);
    s.at(0) = (trial % 2) ? 1 : -1;
    for (size_t i = 1; i <= 12; ++i) s.at(i) = coef(rng);
    CHECK(s * s.inverse() == IntSeries::one(12));
  }
}

TEST_CASE("substitution") {
  PolySeries s = PolySeries::one(3);
  s.at(1) = QPolynomial(-1);  // 1 - x
  auto qx = s.scale_x(QPolynomial::variable());
  CHECK(qx[1] == parse_polynomial("- q"));

  auto stretched = substitute(s, 2);  // x->x^2 with q->q^2 (constants in q)
  CHECK(stretched[1] == QPolynomial());
  CHECK(stretched[2] == QPolynomial(-1));

  PolySeries t = PolySeries::one(3);
  t.at(1) = QPolynomial::variable();  // 1 + qx
  auto t3 = substitute(t, 3);
  CHECK(t3[3] == parse_polynomial("q^3"));
  CHECK(t3[1] == QPolynomial());

  CHECK(eval_q(t, Int(5))[1] == 5);
}

TEST_CASE("integer powers") {
  size_t N = 6;
  auto omx = IntSeries::one_minus_xk(N, 1);
  auto sq = omx.pow(2);
  CHECK(sq[1] == -2);
  CHECK(sq[2] == 1);
  CHECK(sq[3] == 0);
  CHECK(omx.pow(-1) == geometric(N));

  // (1-x)/(1+x): 1 - 2x + 2x^2 - 2x^3 + ...
  IntSeries opx = IntSeries::one(N);
  opx.at(1) = 1;
  auto quot = omx * opx.pow(-1);
  CHECK(quot[0] == 1);
  for (size_t n = 1; n <= N; ++n) CHECK(quot[n] == (n % 2 ? -2 : 2));
}

TEST_CASE("weighted exp") {
  // a_n = -1: exp(log(1-x)) = 1-x
  std::vector<Int> a(10, -1);
  CHECK(exp_weighted(a) == IntSeries::one_minus_xk(10, 1));

  // a_n = -(2^n-1)^4 gives -40 at x^2
  std::vector<Int> a5;
  for (unsigned long n = 1; n <= 2; ++n)
    a5.push_back(-pow_int(pow_int(Int(2), n) - 1, 4));
  CHECK(exp_weighted(a5)[2] == -40);

  // a_n = -((3^n-1))_2: coefficients -2, -2, 6
  std::vector<Int> a2;
  for (unsigned long n = 1; n <= 3; ++n)
    a2.push_back(-p_part(2, pow_int(Int(3), n) - 1));
  auto s = exp_weighted(a2);
  CHECK(s[1] == -2);
  CHECK(s[2] == -2);
  CHECK(s[3] == 6);

  // non-integral exponential is rejected with the offending index
  std::vector<Int> bad = {1, 0, 0};
  try {
    exp_weighted(bad);
    FAIL("expected invariant_error");
  } catch (const invariant_error& e) {
    CHECK(e.index == 2);
  }
}

TEST_CASE("weighted log") {
  auto a = log_weighted(IntSeries::one_minus_xk(8, 1));
  for (const auto& v : a) CHECK(v == -1);
  auto b = log_weighted(geometric(8));
  for (const auto& v : b) CHECK(v == 1);

  // (1-qx)/(1-x): a_n = 1 - q^n
  PolySeries s = PolySeries::one(6);
  s.at(1) = -QPolynomial::variable();
  PolySeries f = s * PolySeries::one_minus_xk(6, 1).inverse();
  auto c = log_weighted(f);
  for (size_t n = 1; n <= 6; ++n) {
    QPolynomial expect =
        QPolynomial(1) - QPolynomial::monomial(Int(1), n);
    CHECK(c[n - 1] == expect);
  }

  IntSeries notone(3);
  notone.at(0) = 2;
  CHECK_THROWS_AS(log_weighted(notone), domain_error);
}

TEST_CASE("exp/log round trip on random sequences") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    size_t N = 1 + (trial % 30);
    std::vector<Rat> a(N);
    for (auto& v : a) v = coef(rng);
    auto c = exp_weighted_fraction(a);
    CHECK(log_weighted(c) == a);
  }
}

TEST_CASE("integrality of the closed-form expansion") {
  // a_n = -(q^n-1)^(r-1) expands with integer polynomial coefficients
  for (unsigned r = 1; r <= 6; ++r) {
    std::vector<Polynomial<Int>> a;
    for (size_t n = 1; n <= 12; ++n) {
      Polynomial<Int> base =
          QPolynomial::monomial(Int(1), n) - QPolynomial(1);
      Polynomial<Int> t(1);
      for (unsigned k = 0; k + 1 < r; ++k) t *= base;
      a.push_back(-t);
    }
    CHECK_NOTHROW(exp_weighted(a));
  }
}

TEST_CASE("product from exponents") {
  // A(d)(2) = 2,1,2,3,6,... in inverse mode gives sum 2^n x^n
  std::vector<Int> b = {2, 1, 2, 3, 6, 9, 18, 30};
  auto s = product_from_exponents(b, ProductSign::inverse);
  for (size_t n = 0; n <= 8; ++n) CHECK(s[n] == pow_int(Int(2), n));

  std::vector<Int> e1 = {1, 0, 0, 0};
  CHECK(product_from_exponents(e1, ProductSign::direct) ==
        IntSeries::one_minus_xk(4, 1));

  // Abar(d)(2) = 1,1,2,3,... in direct mode gives (1-2x)/(1-x)
  std::vector<Int> bb = {1, 1, 2, 3, 6, 9, 18, 30};
  auto t = product_from_exponents(bb, ProductSign::direct);
  CHECK(t[0] == 1);
  for (size_t n = 1; n <= 8; ++n) CHECK(t[n] == -1);
}

TEST_CASE("three-way transform identities on random exponents") {
  // b -> a (divisor sum), a -> b (Moebius), and the c-recursion round-trip
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    size_t N = 1 + (trial % 16);
    std::vector<Int> b(N);
    for (auto& v : b) v = coef(rng);
    std::vector<Int> a(N, 0);
    for (size_t n = 1; n <= N; ++n)
      for (size_t d = 1; d <= n; ++d)
        if (n % d == 0) a[n - 1] += Int((long)d) * b[d - 1];
    // Moebius inversion recovers b
    for (size_t n = 1; n <= N; ++n) {
      Int s = 0;
      for (size_t d = 1; d <= n; ++d)
        if (n % d == 0) s += Int(moebius(n / d)) * a[d - 1];
      CHECK(s == Int((long)n) * b[n - 1]);
    }
    // the product and the exponential agree
    auto via_product = product_from_exponents(b, ProductSign::inverse);
    auto via_exp = exp_weighted(a);
    CHECK(via_product == via_exp);
  }
}

TEST_CASE("table formatting") {
  std::vector<std::vector<Int>> m = {{1, 0}, {1, 1}};
  CHECK(format_table(m, TableFormat::csv) == "1,0\n1,1\n");
  CHECK(format_table(m, TableFormat::json) == "[[\"1\",\"0\"],[\"1\",\"1\"]]\n");

  // huge entries render losslessly, no scientific notation
  Int big = int_from_decimal("20191597854562540687500");
  std::string csv = format_table({{big, -big}}, TableFormat::csv);
  CHECK(csv == "20191597854562540687500,-20191597854562540687500\n");

  std::string md = format_table(m, TableFormat::md, {"r=1", "r=2"});
  CHECK(md.substr(0, md.find('\n')) == "| r\\n | n=1 | n=2 |");
  CHECK(md.find("| r=2 | 1 | 1 |") != std::string::npos);

  CHECK_THROWS_AS(format_table({{Int(1)}, {Int(1), Int(2)}}, TableFormat::csv),
                  domain_error);
  CHECK_THROWS_AS(table_format_from_string("yaml"), domain_error);
  CHECK(table_format_from_string("md") == TableFormat::md);
}

TEST_CASE("json round trips") {
  QPolynomial p = parse_polynomial("55q^18 - 36q^17 + 1");
  auto jp = to_json(p);
  CHECK(polynomial_from_json(jp) == p);

  IntSeries s(3);
  s.at(0) = 1;
  s.at(2) = int_from_decimal("-20191597854562540687500");
  auto js = to_json(s);
  CHECK(series_from_json(js) == s);
  CHECK(js[2].get<std::string>() == "-20191597854562540687500");

  PolySeries ps = PolySeries::one(2);
  ps.at(1) = parse_polynomial("q^2 - 1");
  CHECK(poly_series_from_json(to_json(ps)) == ps);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    IntSeries r(6);
    for (size_t i = 0; i <= 6; ++i) r.at(i) = coef(rng);
    CHECK(series_from_json(to_json(r)) == r);

    RatSeries rs(4);
    for (size_t i = 0; i <= 4; ++i) {
      rs.at(i) = Rat(coef(rng), den(rng));
      rs.at(i).canonicalize();
    }
    CHECK(rat_series_from_json(to_json(rs)) == rs);

    QRatPolynomial rp(std::vector<Rat>{rs[0], rs[1], rs[2]});
    CHECK(rat_polynomial_from_json(to_json(rp)) == rp);
  }
}
