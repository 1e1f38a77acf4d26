#include <doctest.h>

#include <random>

#include "random_inputs.hpp"
#include "torusbb/errors.hpp"
#include "torusbb/parser.hpp"

using namespace torusbb;

namespace {

VariableWeighting xyz() {
  return VariableWeighting(1, {{"x", make_vector({-1})}, {"y", make_vector({1})}, {"z", make_vector({0})}});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("parse_polynomial: examples") {
  const auto ring = xyz();
  const auto p = parse_polynomial("x*y - z^2", ring);
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0].coefficient == 1);
  CHECK(p.terms()[0].monomial.exponents == std::vector<Exponent>{1, 1, 0});
  CHECK(p.terms()[1].coefficient == -1);
  CHECK(p.terms()[1].monomial.exponents == std::vector<Exponent>{0, 0, 2});

  const auto twice = parse_polynomial("x + x", ring);
  REQUIRE(twice.terms().size() == 1);
  CHECK(twice.terms()[0].coefficient == 2);

  const auto half = parse_polynomial("1/2*x^2*y", ring);
  REQUIRE(half.terms().size() == 1);
  CHECK(half.terms()[0].coefficient == Rational(1, 2));
  CHECK(half.terms()[0].monomial.exponents == std::vector<Exponent>{2, 1, 0});

  CHECK(parse_polynomial("x - x", ring).is_zero());
  CHECK(parse_polynomial("-3", ring).terms()[0].coefficient == -3);
  CHECK(parse_polynomial("  x*x*y^0 ", ring) == parse_polynomial("x^2", ring));
  CHECK(parse_polynomial("4/6*z", ring).terms()[0].coefficient == Rational(2, 3));
}

TEST_CASE("parse_polynomial: errors") {
  const auto ring = xyz();
  CHECK(code_of([&] { parse_polynomial("x +", ring); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("", ring); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("2*3", ring); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("x + -y", ring); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("1/0*x", ring); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("w", ring); }) == ErrorCode::UnknownVariable);
  CHECK(code_of([&] { parse_polynomial("x^2147483648", ring); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { parse_polynomial("x^2147483647*x", ring); }) == ErrorCode::Overflow);
  CHECK_NOTHROW(parse_polynomial("x^2147483647", ring));

  try {
    parse_polynomial("x*y ) z", ring);
  } catch (const Error& e) {
    CHECK(e.location() == "4");
  }
  try {
    parse_polynomial("x + q", ring);
  } catch (const Error& e) {
    CHECK(e.location() == "q");
  }
}

TEST_CASE("format_polynomial") {
  const auto ring = xyz();
  CHECK(format_polynomial(parse_polynomial("-z^2 + y*x", ring), ring) == "x*y - z^2");
  CHECK(format_polynomial(parse_polynomial("3/4*x^2 - 1 + y", ring), ring) == "3/4*x^2 + y - 1");
  CHECK(format_polynomial(GradedPolynomial(), ring) == "0");
  CHECK(format_polynomial(parse_polynomial("-2/3", ring), ring) == "-2/3");
  CHECK(format_monomial(Monomial{{0, 0, 0}}, ring) == "1");
  CHECK(parse_monomial("x^2*z", ring).exponents == std::vector<Exponent>{2, 0, 1});
  CHECK_THROWS_AS(parse_monomial("2*x", ring), Error);
}

TEST_CASE("property: print then parse is a fixed point") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = testing_support::random_weighting(rng, 1, testing_support::uniform(rng, 1, 4), 2);
    std::vector<Term> terms;
    const long count = testing_support::uniform(rng, 0, 5);
    for (long i = 0; i < count; ++i) {
      Monomial m{std::vector<Exponent>(w.size())};
      for (auto& e : m.exponents) e = static_cast<Exponent>(testing_support::uniform(rng, 0, 3));
      terms.push_back({Rational(testing_support::uniform(rng, -9, 9), testing_support::uniform(rng, 1, 4)), m});
      terms.back().coefficient.canonicalize();
    }
    const GradedPolynomial p(terms);
    const std::string text = format_polynomial(p, w);
    const GradedPolynomial q = parse_polynomial(text, w);
    REQUIRE_MESSAGE(q == p, text);
    REQUIRE(format_polynomial(q, w) == text);
  }
}
