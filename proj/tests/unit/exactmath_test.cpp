#include <doctest.h>

#include <vector>

#include "evenspin/errors.hpp"
#include "evenspin/exactmath.hpp"
#include "oracles.hpp"

using namespace evenspin;

TEST_SUITE("exactmath") {
  TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7) == Rational());
  }

  TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
  }

  TEST_CASE("parse accepts p/q and integers only") {
    CHECK(Rational::parse("57/25") == Rational(57, 25));
    CHECK(Rational::parse("-11/5") == Rational(-11, 5));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    for (const char* bad : {"", "0.5", "1/0", "1/", "/2", "abc", "1//2", "1e3", " 1", "4/-6"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Rational::parse(bad), InvalidInput);
    }
  }

  TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(57, 25) - Rational(49, 25) == Rational(8, 25));
    CHECK(Rational(-11, 5) * Rational(5, 11) == Rational(-1));
    CHECK(Rational(3, 10) / Rational(3, 5) == Rational(1, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
  }

  TEST_CASE("to_long requires an integer") {
    CHECK(Rational(12).to_long() == 12);
    CHECK_THROWS(Rational(1, 2).to_long());
  }

  TEST_CASE("kernel of the identity is empty") {
    const RationalMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(id.kernel_basis().empty());
    CHECK(id.rank() == 3);
  }

  TEST_CASE("kernel of [1 1] is spanned by (1,-1)") {
    const RationalMatrix m{{1, 1}};
    const auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RationalVector{1, -1});
  }

  TEST_CASE("zero matrix has the full standard basis as kernel") {
    const RationalMatrix z(2, 3);
    const auto k = z.kernel_basis();
    REQUIRE(k.size() == 3);
    CHECK(k[0] == RationalVector{1, 0, 0});
    CHECK(k[2] == RationalVector{0, 0, 1});
  }

  TEST_CASE("kernel of the transposed intersection table is (3,-2,-1,9)") {
    const RationalMatrix table{{3, 1, 0, -2, 0}, {0, 2, -1, 1, -1}, {0, -1, 2, 1, 2}, {-1, 0, 0, 1, 0}};
    const auto k = table.transpose().kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RationalVector{3, -2, -1, 9});
  }

  TEST_CASE("kernel vectors are primitive integer vectors with positive leading entry") {
    const RationalMatrix m{{Rational(1, 2), Rational(1, 3), 0}, {0, 0, 1}};
    const auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RationalVector{2, -3, 0});
    CHECK(primitive_integer_vector({Rational(-2, 3), Rational(4, 9)}) == RationalVector{3, -2});
  }

  TEST_CASE("matrix shape errors") {
    const RationalMatrix m(2, 3);
    CHECK_THROWS(m * RationalVector{1, 2});
    CHECK_THROWS(RationalMatrix::from_rows({{1, 2}, {3}}));
    CHECK_THROWS(m.at(2, 0));
  }

  TEST_CASE("series multiplication") {
    const TruncatedSeries a({1, 1}, 2);
    const TruncatedSeries b({1, -1}, 2);
    CHECK(a * b == TruncatedSeries({1, 0, -1}, 2));

    const std::vector<Rational> one_minus_q{1, -1};
    const auto geo = TruncatedSeries::inverse_of_polynomial(one_minus_q, 3);
    CHECK(geo * geo == TruncatedSeries({1, 2, 3, 4}, 3));
    CHECK_THROWS_AS(TruncatedSeries(2) * TruncatedSeries(3), InvalidInput);
  }

  TEST_CASE("six geometric factors give the monomial count in degree 2") {
    const std::vector<Rational> one_minus_q{1, -1};
    auto s = TruncatedSeries::one(4);
    for (int i = 0; i < 6; ++i) s = s * TruncatedSeries::inverse_of_polynomial(one_minus_q, 4);
    for (int d = 0; d <= 4; ++d) CHECK(s.coefficient(d) == Rational(oracle::binomial(d + 5, 5)));
    CHECK(s.coefficient(2) == Rational(21));
  }

  TEST_CASE("inverse of a polynomial") {
    const std::vector<Rational> p1{1, -1};
    CHECK(TruncatedSeries::inverse_of_polynomial(p1, 3) == TruncatedSeries({1, 1, 1, 1}, 3));
    const std::vector<Rational> p2{1, -2, 1};
    CHECK(TruncatedSeries::inverse_of_polynomial(p2, 2) == TruncatedSeries({1, 2, 3}, 2));
    const std::vector<Rational> p3{1, 0, 0, -1};
    CHECK(TruncatedSeries::inverse_of_polynomial(p3, 6) ==
          TruncatedSeries({1, 0, 0, 1, 0, 0, 1}, 6));
    const std::vector<Rational> bad{2, 1};
    CHECK_THROWS_AS(TruncatedSeries::inverse_of_polynomial(bad, 3), InvalidInput);
  }

  TEST_CASE("series coefficient beyond order") {
    const TruncatedSeries s({1, 2, 3}, 2);
    CHECK_THROWS(s.coefficient(3));
    CHECK(TruncatedSeries({1, 2, 3, 4}, 1) == TruncatedSeries({1, 2}, 1));
    CHECK(s.scaled(Rational(1, 2)) == TruncatedSeries({Rational(1, 2), 1, Rational(3, 2)}, 2));
  }

  TEST_CASE("sparse row space tracks rank") {
    SparseRowSpace rs;
    CHECK(rs.insert({{0, 1}, {2, 1}}));
    CHECK(rs.insert({{1, 1}}));
    CHECK_FALSE(rs.insert({{0, 2}, {1, 3}, {2, 2}}));
    CHECK(rs.contains({{0, -1}, {2, -1}}));
    CHECK_FALSE(rs.contains({{2, 1}}));
    CHECK_FALSE(rs.insert({}));
    CHECK(rs.rank() == 2);
  }
}
