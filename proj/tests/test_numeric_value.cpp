#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <string>

#include "numtrans/errors.hpp"
#include "numtrans/numeric_value.hpp"
#include "oracles.hpp"

using namespace numtrans;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational to_rational(const NumericValue& v) {
  cpp_rational r{cpp_int(v.digits())};
  int e = v.exponent();
  cpp_int scale = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) scale *= 10;
  if (e >= 0)
    r *= scale;
  else
    r /= scale;
  if (v.negative()) r = -r;
  return r;
}

NumericValue random_value(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 24);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> exp(-12, 12);
  std::string digits;
  int n = len(rng);
  for (int i = 0; i < n; ++i) digits.push_back(static_cast<char>('0' + digit(rng)));
  return NumericValue::from_parts(rng() % 2 == 0, digits, exp(rng));
}

}  // namespace

TEST_CASE("decimal strings parse exactly") {
  CHECK(NumericValue::from_decimal_string("0").is_zero());
  CHECK(NumericValue::from_decimal_string("2.82").to_plain_string() == "2.82");
  CHECK(NumericValue::from_decimal_string("2,820,000,000").to_plain_string() ==
        "2820000000");
  CHECK(NumericValue::from_decimal_string("-105").to_plain_string() == "-105");
  CHECK(NumericValue::from_decimal_string("+4.50").to_plain_string() == "4.5");
  CHECK(NumericValue::from_decimal_string("007").to_plain_string() == "7");
  CHECK(NumericValue::from_decimal_string("0.143").to_plain_string() == "0.143");
  CHECK(NumericValue::from_decimal_string("-0").is_zero());
  CHECK(NumericValue::from_decimal_string("-0").to_plain_string() == "0");
}

TEST_CASE("malformed decimal strings are rejected with offsets") {
  CHECK_THROWS_AS(NumericValue::from_decimal_string(""), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("."), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("1."), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("1,00"), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("1,0000"), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("12345,678"), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("1.2.3"), ParseError);
  CHECK_THROWS_AS(NumericValue::from_decimal_string("1e5"), ParseError);
  try {
    NumericValue::from_decimal_string("1,00");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("values normalize away zero padding") {
  auto a = NumericValue::from_parts(false, "002820", -3);
  CHECK(a.to_plain_string() == "2.82");
  CHECK(a.digits() == "282");
  CHECK(a.exponent() == -2);
  auto z = NumericValue::from_parts(true, "0000", 7);
  CHECK(z.is_zero());
  CHECK(!z.negative());
  CHECK(z.to_plain_string() == "0");
}

TEST_CASE("integer queries") {
  auto v = NumericValue::from_decimal_string("35000");
  CHECK(v.is_integer());
  CHECK(v.fraction_digits() == 0);
  CHECK(v.integer_digit_string() == "35000");
  auto d = NumericValue::from_decimal_string("13.4");
  CHECK(!d.is_integer());
  CHECK(d.fraction_digits() == 1);
  auto s = NumericValue::from_decimal_string("2.82").scaled(9);
  CHECK(s.is_integer());
  CHECK(s.integer_digit_string() == "2820000000");
}

TEST_CASE("scaling shifts the decimal point exactly") {
  auto v = NumericValue::from_decimal_string("13.4");
  CHECK(v.scaled(8).to_plain_string() == "1340000000");
  CHECK(v.scaled(-3).to_plain_string() == "0.0134");
  CHECK(v.scaled(0) == v);
  auto zero = NumericValue::from_int(0);
  CHECK(zero.scaled(12).is_zero());

  std::mt19937 rng(20260818);
  std::uniform_int_distribution<int> shift(-15, 15);
  for (int i = 0; i < 2000; ++i) {
    NumericValue v2 = random_value(rng);
    int k = shift(rng);
    CHECK(v2.scaled(k).to_plain_string() ==
          oracles::shift_point(v2.to_plain_string(), k));
  }
}

TEST_CASE("comparison agrees with rational arithmetic") {
  std::mt19937 rng(97);
  for (int i = 0; i < 4000; ++i) {
    NumericValue a = random_value(rng);
    NumericValue b = random_value(rng);
    cpp_rational ra = to_rational(a), rb = to_rational(b);
    auto got = NumericValue::compare(a, b);
    if (ra < rb) CHECK(got == std::strong_ordering::less);
    if (ra > rb) CHECK(got == std::strong_ordering::greater);
    if (ra == rb) {
      CHECK(got == std::strong_ordering::equal);
      CHECK(a == b);
    }
  }
}

TEST_CASE("addition agrees with rational arithmetic") {
  std::mt19937 rng(98);
  for (int i = 0; i < 2000; ++i) {
    NumericValue a = random_value(rng);
    NumericValue b = random_value(rng);
    CHECK(to_rational(a.plus(b)) == to_rational(a) + to_rational(b));
  }
  auto x = NumericValue::from_decimal_string("0.1");
  auto y = NumericValue::from_decimal_string("0.2");
  CHECK(x.plus(y).to_plain_string() == "0.3");
  auto big = NumericValue::from_decimal_string("99999999999999999999");
  CHECK(big.plus(NumericValue::from_int(1)).to_plain_string() ==
        "100000000000000000000");
}

TEST_CASE("negation and absolute value") {
  auto v = NumericValue::from_decimal_string("2.5");
  CHECK(v.negated().to_plain_string() == "-2.5");
  CHECK(v.negated().negated() == v);
  CHECK(v.negated().abs() == v);
  CHECK(NumericValue::from_int(0).negated().to_plain_string() == "0");
  CHECK(NumericValue::from_decimal_string("-7").abs().to_plain_string() == "7");
}

TEST_CASE("ordering helpers") {
  auto two = NumericValue::from_int(2);
  auto ten = NumericValue::from_int(10);
  CHECK(two < ten);
  CHECK(ten > two);
  CHECK(two <= two);
  CHECK(ten >= two);
  CHECK(NumericValue::from_decimal_string("-3") <
        NumericValue::from_decimal_string("-2"));
  CHECK(NumericValue::from_decimal_string("0.5") <
        NumericValue::from_int(1));
}
