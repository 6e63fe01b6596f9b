#include <doctest.h>

#include <cmath>

#include "coxfold/errors.hpp"
#include "coxfold/linalg.hpp"
#include "coxfold/roots.hpp"
#include "generators.hpp"

using namespace coxfold;
using coxfold::testing::random_surd;
using coxfold::testing::seeded;

TEST_CASE("radicals square to their radicand") {
  for (int n : {2, 3, 5, 6, 10, 15, 30}) CHECK(Surd::radical(n) * Surd::radical(n) == Surd(n));
  CHECK(Surd::radical(2) * Surd::radical(3) == Surd::radical(6));
  CHECK(Surd::radical(6) * Surd::radical(10) == Surd(2) * Surd::radical(15));
  CHECK_THROWS_AS(Surd::radical(7), Error);
}

TEST_CASE("golden ratio identity") {
  const Surd phi = (Surd(1) + Surd::radical(5)) / Surd(2);
  CHECK(phi * phi == phi + Surd(1));
  CHECK(phi.inverse() == phi - Surd(1));
}

TEST_CASE("exact signs near cancellation") {
  // 99/70 > √2 > 140/99, both within 1e-4.
  CHECK((Rational(99, 70) - Surd::radical(2)).sign() == Sign::positive);
  CHECK((Surd::radical(2) - Rational(140, 99)).sign() == Sign::positive);
  // -0.0160 and 0.0898.
  CHECK((Surd::radical(2) + Surd::radical(3) - Surd::radical(10)).sign() == Sign::negative);
  CHECK((Surd::radical(5) - Surd::radical(2) - Surd::radical(3) + Surd(1)).sign() == Sign::positive);
  CHECK(Surd(0).sign() == Sign::zero);
  CHECK((Surd::radical(3) - Surd::radical(3)).is_zero());
}

TEST_CASE("division by zero throws") { CHECK_THROWS_AS(Surd(1) / Surd(0), Error); }

TEST_CASE("canonical strings") {
  CHECK(Surd(0).to_string() == "0");
  CHECK(Surd(-2).to_string() == "-2");
  CHECK((Surd::radical(2) / Surd(2)).to_string() == "1/2√2");
  CHECK((Surd(1) - Surd::radical(5)).to_string() == "1 - √5");
}

TEST_CASE("field axioms on random elements") {
  auto rng = seeded(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Surd a = random_surd(rng), b = random_surd(rng), c = random_surd(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a - a == Surd(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Surd(1));
  }
}

TEST_CASE("sign agrees with floating point away from zero") {
  auto rng = seeded(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Surd a = random_surd(rng);
    const double d = a.to_double();
    if (std::abs(d) < 1e-9) continue;
    CHECK((a.sign() == Sign::positive) == (d > 0));
  }
}

TEST_CASE("enclosure brackets the value") {
  auto rng = seeded(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Surd a = random_surd(rng);
    const auto [lo, hi] = a.enclosure(mpz_class(1000000));
    CHECK(lo <= hi);
    CHECK((Surd(lo) - a).sign() != Sign::positive);
    CHECK((Surd(hi) - a).sign() != Sign::negative);
  }
}

TEST_CASE("conjugation is a field automorphism") {
  auto rng = seeded(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Surd a = random_surd(rng), b = random_surd(rng);
    for (int flip : {1, 2, 4, 7}) {
      CHECK((a * b).conjugate(flip) == a.conjugate(flip) * b.conjugate(flip));
      CHECK((a + b).conjugate(flip) == a.conjugate(flip) + b.conjugate(flip));
    }
  }
}

TEST_CASE("lex order is a strict total order") {
  auto rng = seeded(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Surd a = random_surd(rng), b = random_surd(rng);
    const auto ab = Surd::lex_compare(a, b), ba = Surd::lex_compare(b, a);
    CHECK((ab == 0) == (a == b));
    CHECK((ab < 0) == (ba > 0));
  }
}

TEST_CASE("form values") {
  CHECK(form_value(Label(2)) == Surd(0));
  CHECK(form_value(Label(3)) == Surd(-1));
  CHECK(form_value(Label(4)) == -Surd::radical(2));
  CHECK(form_value(Label(6)) == -Surd::radical(3));
  CHECK(form_value(Label::infinity()) == Surd(-2));
  const Surd f5 = form_value(Label(5));
  CHECK(f5 * f5 + f5 == Surd(1));  // 4cos^2 - 2cos = 1 at pi/5
  CHECK_THROWS_AS(form_value(Label(7)), UnsupportedLabel);
}

TEST_CASE("vector helpers") {
  Vector x(3);
  x << Surd(1), Surd(0), Surd(2);
  CHECK(uniform_sign(x) == Sign::positive);
  x(1) = Surd(-1);
  CHECK(uniform_sign(x) == Sign::zero);
  CHECK(is_zero(Vector(Vector::Zero(4))));
  CHECK(to_string(unit_vector(2, 1)) == "[0, 1]");
}
