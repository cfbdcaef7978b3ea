#include "doctest.h"

#include "fatgraph/rational.hpp"

using namespace fatgraph;

TEST_CASE("rational parse and format round trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(format_rational(Rational(10, 4)) == "5/2");
  CHECK(format_rational(Rational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("sqrt bounds bracket the true value") {
  Rational q(2);
  Rational lo = sqrt_lower(q, 30), hi = sqrt_upper(q, 30);
  CHECK(lo * lo <= q);
  CHECK(hi * hi >= q);
  CHECK(hi - lo <= Rational(1, 1 << 20));
  CHECK(sqrt_lower(Rational(0), 10) == 0);
  CHECK(sqrt_lower(Rational(9), 10) == 3);
  CHECK(sqrt_upper(Rational(9, 4), 10) >= Rational(3, 2));
}

TEST_CASE("nth root upper bound") {
  Rational r = nth_root_upper(Integer(8), 3, 20);
  CHECK(r >= 2);
  CHECK(r <= Rational(2) + Rational(1, 1000));
  Rational s = nth_root_upper(Integer(1000), 2, 20);
  CHECK(s * s >= 1000);
}

TEST_CASE("fixed-point log2 is exact on powers and monotone") {
  CHECK(log2_fixed(Integer(2), 12) == 1);
  CHECK(log2_fixed(Integer(8), 12) == 3);
  CHECK(log2_fixed(Integer(1), 12) == 0);
  Rational prev = 0;
  for (long t = 1; t <= 200; ++t) {
    Rational v = log2_fixed(Integer(t), 12);
    CHECK(v >= prev);
    prev = v;
  }
  // floor semantics: value <= log2(x) < value + 2^-12
  Rational v = log2_fixed(Integer(5), 12);
  CHECK(v.get_d() <= std::log2(5.0));
  CHECK(v.get_d() + 1.0 / 4096 > std::log2(5.0));
}

TEST_CASE("scaled diameter comparison") {
  // diam = 1, d = 2: compare against t/sqrt(n).
  Rational diam_sq(1);
  CHECK(compare_diam_to_scaled(diam_sq, Rational(2), Integer(4), 2) == 0);  // 1 == 2/2
  CHECK(compare_diam_to_scaled(diam_sq, Rational(3), Integer(4), 2) < 0);
  CHECK(compare_diam_to_scaled(diam_sq, Rational(1), Integer(4), 2) > 0);
  // d = 3: diam^2 = 2 vs (t/n^(1/3))^2 with n = 8, t = 4: (4/2)^2 = 4 > 2.
  CHECK(compare_diam_to_scaled(Rational(2), Rational(4), Integer(8), 3) < 0);
}
