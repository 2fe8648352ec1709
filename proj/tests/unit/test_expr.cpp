#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "curvlab/expr.hpp"
#include "support.hpp"

using namespace curvlab;

namespace {

Vocabulary vocab() { return Vocabulary{{"r", "theta", "phi", "t"}, {{"M", 1.0}, {"alpha", 0.5}}}; }

double eval(const std::string& s, const Point4& x = {2.0, 0.5, 1.0, 3.0}) { return parse_expression(s, vocab())(x); }

ParseError error_of(const std::string& s) {
  try {
    parse_expression(s, vocab());
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << s);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("arithmetic and precedence") {
  CHECK(eval("1 + 2*3") == 7.0);
  CHECK(eval("(1 + 2)*3") == 9.0);
  CHECK(eval("2^3^2") == 512.0);
  CHECK(eval("-2^2") == -4.0);
  CHECK(eval("8/4/2") == 1.0);
  CHECK(eval("1 - 2 - 3") == -4.0);
  CHECK(eval("3e-1 + .5") == doctest::Approx(0.8));
  CHECK(eval("2^-1") == 0.5);
}

TEST_CASE("coordinates, constants and functions") {
  CHECK(eval("r") == 2.0);
  CHECK(eval("M + alpha") == 1.5);
  CHECK(eval("pi") == doctest::Approx(std::numbers::pi));
  CHECK(eval("sin(theta)^2 + cos(theta)^2") == doctest::Approx(1.0));
  CHECK(eval("tan(theta)*cot(theta)") == doctest::Approx(1.0));
  CHECK(eval("sqrt(r^2)") == doctest::Approx(2.0));
  CHECK(eval("exp(log(t))") == doctest::Approx(3.0));
  CHECK(eval("pow(r, 3)") == doctest::Approx(8.0));
  CHECK(eval("pow(r, 1/2)") == doctest::Approx(std::sqrt(2.0)));
  CHECK(expression_functions().size() == 8);
}

TEST_CASE("jets of parsed expressions agree with hand-written jets") {
  const Expression e = parse_expression("r^2 - 2*M*r + alpha^2*cos(theta)^2", vocab());
  const ChartPoint p{{3.0, 0.7, 0.0, 0.0}, "", true};
  const Coords x = seed(p);
  const Jet2 want = square(x[0]) - 2.0 * x[0] + 0.25 * square(cos(x[1]));
  const Jet2 got = e(x);
  CHECK(got.value() == doctest::Approx(want.value()));
  for (int i = 0; i < kDim; ++i) {
    CHECK(got.grad(i) == doctest::Approx(want.grad(i)));
    for (int j = 0; j < kDim; ++j) CHECK(got.hess(i, j) == doctest::Approx(want.hess(i, j)));
  }
  CHECK(e.depends_on_coordinates());
  CHECK_FALSE(parse_expression("M*alpha + pi", vocab()).depends_on_coordinates());
}

TEST_CASE("unknown identifiers are reported at their column") {
  const ParseError e = error_of("si n(theta)");
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);
  CHECK(std::string(e.what()).find("unknown identifier 'si'") != std::string::npos);
  const ParseError f = error_of("r + 2*foo(theta)");
  CHECK(f.column() == 7);
  const ParseError g = error_of("r + beta");
  CHECK(g.column() == 5);
}

TEST_CASE("malformed input is rejected") {
  CHECK(error_of("").column() >= 1);
  CHECK(error_of("r +").column() == 4);
  CHECK(error_of("(r + 1").column() == 7);
  CHECK(error_of("r $ 1").column() == 3);
  CHECK(error_of("sin(r, theta)").column() >= 1);
  CHECK(error_of("r^theta").column() >= 1);
  CHECK(error_of("pow(r, theta)").column() >= 1);
  CHECK(error_of("r r").column() == 3);
}

TEST_CASE("guards are chains of comparisons") {
  const GuardExpression g = parse_guard("0 < theta < pi", vocab());
  CHECK(g({1.0, 1.0, 0.0, 0.0}));
  CHECK_FALSE(g({1.0, 4.0, 0.0, 0.0}));
  CHECK_FALSE(g({1.0, 0.0, 0.0, 0.0}));
  const GuardExpression h = parse_guard("r^2 - 2*M*r >= 0", vocab());
  CHECK(h({2.0, 0.0, 0.0, 0.0}));
  CHECK_FALSE(h({1.0, 0.0, 0.0, 0.0}));
  const GuardExpression nan_guard = parse_guard("sqrt(r) > 0", vocab());
  CHECK_FALSE(nan_guard({-1.0, 0.0, 0.0, 0.0}));
  CHECK_THROWS_AS(parse_guard("r + 1", vocab()), ParseError);
}
