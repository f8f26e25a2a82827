#include <doctest.h>

#include <array>
#include <stdexcept>

#include "reekit/field.hpp"

using namespace reekit;

namespace {

// Schoolbook arithmetic in F_3[t]/(t^3 - t - 1), independent of the library tables.
using Poly3 = std::array<int, 3>;

Poly3 oracle_mul(const Poly3& a, const Poly3& b) {
  std::array<int, 5> r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i + j] += a[i] * b[j];
  }
  // t^4 = t^2 + t, t^3 = t + 1
  r[2] += r[4];
  r[1] += r[4];
  r[1] += r[3];
  r[0] += r[3];
  return {r[0] % 3, r[1] % 3, r[2] % 3};
}

Poly3 oracle_pow(Poly3 a, int k) {
  Poly3 r{1, 0, 0};
  for (int i = 0; i < k; ++i) r = oracle_mul(r, a);
  return r;
}

Poly3 as_poly(const FieldElement& x) {
  const auto c = x.coeffs();
  return {c[0], c[1], c[2]};
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const auto f = Field::standard(0);
  const auto one = f->one(), two = f->from_int(2);
  CHECK(f->order() == 3);
  CHECK((one + two).is_zero());
  CHECK(two.inv() == two);
  CHECK(f->zero() + two == two);
  for (const auto& x : f->elements()) {
    CHECK(x.theta() == x);
    CHECK(x.theta_inv() == x);
    CHECK(x.pow(3) == x);
  }
  CHECK_THROWS_AS(f->zero().inv(), std::domain_error);
}

TEST_CASE("GF(27) agrees with schoolbook multiplication") {
  const auto f = Field::standard(1);
  REQUIRE(f->order() == 27);
  const auto el = f->elements();
  for (const auto& x : el) {
    for (const auto& y : el) {
      CHECK(as_poly(x * y) == oracle_mul(as_poly(x), as_poly(y)));
      const Poly3 px = as_poly(x), py = as_poly(y);
      CHECK(as_poly(x + y) == Poly3{(px[0] + py[0]) % 3, (px[1] + py[1]) % 3, (px[2] + py[2]) % 3});
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("GF(27) worked values") {
  const auto f = Field::standard(1);
  const auto t = f->generator();
  CHECK(t.to_string() == "010");
  CHECK(t + f->parse("120") == f->one());  // t + (2t + 1)
  CHECK(t * t * t == t + f->one());
  CHECK(t.theta() == t + f->from_int(2));
  CHECK((t + f->from_int(2)).theta_inv() == t);
  CHECK(f->zero().theta().is_zero());
  CHECK(f->one().theta() == f->one());
}

TEST_CASE("theta is x^9 and squares to Frobenius") {
  const auto f = Field::standard(1);
  for (const auto& x : f->elements()) {
    CHECK(as_poly(x.theta()) == oracle_pow(as_poly(x), 9));
    CHECK(x.theta().theta() == x.pow(3));
    CHECK(x.theta().theta_inv() == x);
    CHECK(x.frobenius(1) == x.pow(3));
  }
}

TEST_CASE("element indices, strings and parsing") {
  const auto f = Field::standard(1);
  const auto el = f->elements();
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    CHECK(el[i].index() == i);
    CHECK(f->parse(el[i].to_string()) == el[i]);
    CHECK(f->element(i) == el[i]);
  }
  CHECK(el[1].to_string() == "001");
  CHECK_THROWS_AS(f->parse("01"), std::invalid_argument);
  CHECK_THROWS_AS(f->parse("013"), std::invalid_argument);
}

TEST_CASE("field parameters") {
  CHECK(FieldParams::parse("1") == FieldParams::standard(1));
  CHECK(FieldParams::parse("1:2,2,0,1").modulus == std::vector<int>{2, 2, 0, 1});
  CHECK_THROWS_AS(Field::create(FieldParams::parse("1:0,0,0,1")), std::invalid_argument);  // t^3 reducible
  CHECK_THROWS_AS(Field::create(FieldParams::parse("1:1,1,1")), std::invalid_argument);    // wrong degree
  CHECK_THROWS_AS(FieldParams::parse("x"), std::invalid_argument);
  CHECK(is_irreducible_f3({2, 2, 0, 1}));
  CHECK_FALSE(is_irreducible_f3({0, 1, 1}));
}

TEST_CASE("a custom modulus gives the same theta law") {
  const auto f = Field::create(FieldParams::parse("1:1,2,0,1"));  // t^3 + 2t + 1
  REQUIRE(f->order() == 27);
  for (const auto& x : f->elements()) CHECK(x.theta().theta() == x.pow(3));
}
