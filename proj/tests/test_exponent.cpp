#include <cmath>

#include "doctest.h"
#include "lvp/errors.hpp"
#include "lvp/exponent.hpp"
#include "lvp/jfunc.hpp"

using lvp::Exponent;

TEST_CASE("parse accepts numbers and the infinity spellings") {
  CHECK(Exponent::parse("2").value() == 2.0);
  CHECK(Exponent::parse(" 1.5 ").value() == 1.5);
  for (const char* s : {"inf", "Inf", "INF", "infinity", "\xe2\x88\x9e"}) {
    CHECK(Exponent::parse(s).isInfinite());
  }
}

TEST_CASE("invalid exponents are rejected") {
  CHECK_THROWS_AS(Exponent::finite(0.5), lvp::InvalidArgument);
  CHECK_THROWS_AS(Exponent::finite(std::nan("")), lvp::InvalidArgument);
  CHECK_THROWS_AS(Exponent::parse("abc"), lvp::InvalidArgument);
  CHECK_THROWS_AS(Exponent::parse("2x"), lvp::InvalidArgument);
  CHECK_THROWS_AS(Exponent::infinity().value(), lvp::InvalidArgument);
}

TEST_CASE("conjugate exponents") {
  CHECK(lvp::conjugate(Exponent::finite(2.0)) == Exponent::finite(2.0));
  CHECK(lvp::conjugate(Exponent::finite(1.0)).isInfinite());
  CHECK(lvp::conjugate(Exponent::infinity()) == Exponent::finite(1.0));
  CHECK(lvp::conjugate(Exponent::finite(4.0)).value() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  // 1/p + 1/q = 1 across a range, including huge p where p/(p-1) rounds to 1
  for (double p : {1.01, 1.5, 3.0, 17.0, 1e8, 1e17}) {
    const Exponent q = Exponent::finite(p).conjugate();
    CHECK(q.value() >= 1.0);
    CHECK(1.0 / p + q.reciprocal() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ordering and formatting") {
  CHECK(Exponent::finite(1.0) < Exponent::finite(2.0));
  CHECK(Exponent::finite(1e300) < Exponent::infinity());
  CHECK_FALSE(Exponent::infinity() < Exponent::infinity());
  CHECK(Exponent::infinity().toString() == "inf");
  CHECK(Exponent::finite(2.0).toString() == "2");
  CHECK(lvp::formatReal(0.1) == "0.10000000000000001");
  CHECK(Exponent::parse(Exponent::finite(1.1).toString()) ==
        Exponent::finite(1.1));
}
