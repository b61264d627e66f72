#include <doctest.h>

#include "ffcount/zeta.hpp"

using namespace ffc;

namespace {
std::vector<BigInt> B(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("descriptor validation") {
  CHECK_NOTHROW(CurveDescriptor::make(3, 1, B({1, 0, 3})));
  CHECK_THROWS(CurveDescriptor::make(6, 0, B({1})));          // not a prime power
  CHECK_THROWS(CurveDescriptor::make(3, 1, B({2, 0, 6})));    // L(0) != 1
  CHECK_THROWS(CurveDescriptor::make(3, 1, B({1, 0, 2})));    // functional equation
  CHECK_THROWS(CurveDescriptor::make(3, 1, B({1, 0, 3, 0})));  // wrong length
  CHECK_THROWS(CurveDescriptor::make(3, 1, B({1, -4, 3})));   // J = 0
  CHECK_THROWS(CurveDescriptor::make(3, 0, B({1}), ClassDimsTable{{1}}));
  CHECK(CurveDescriptor::make(3, 1, B({1, 0, 3})).J() == 4);
}

TEST_CASE("zeta values at genus 0") {
  // 1 / ((1 - q^{-s}) (1 - q^{1-s}))
  CHECK(zeta_value(CurveDescriptor::rational(2), 2) == R(8, 3));
  CHECK(zeta_value(CurveDescriptor::rational(2), 3) == R(32, 21));
  CHECK(zeta_value(CurveDescriptor::rational(3), 2) == R(27, 16));
  CHECK(zeta_value(CurveDescriptor::rational(3), 3) == R(243, 208));
  CHECK_THROWS_AS(zeta_value(CurveDescriptor::rational(3), 1), std::domain_error);
}

TEST_CASE("Schanuel constants") {
  CHECK(schanuel_constant(CurveDescriptor::rational(2), 2) == R(3, 2));
  CHECK(schanuel_constant(CurveDescriptor::rational(3), 2) == R(8, 3));
  const auto E = CurveDescriptor::make(3, 1, B({1, 0, 3}));
  CHECK(zeta_value(E, 2) == R(7, 4));
  CHECK(schanuel_constant(E, 2) == R(8, 7));
}

TEST_CASE("a and b sequences") {
  const auto E = CurveDescriptor::make(3, 1, B({1, 0, 3}));
  CHECK(a_seq(E, 5) == B({1, 4, 16, 52, 160, 484}));
  CHECK(b_seq(E, 5) == B({1, -4, 0, 12, 0, -36}));
  CHECK(a_seq(CurveDescriptor::rational(2), 4) == B({1, 3, 7, 15, 31}));
  CHECK(b_seq(CurveDescriptor::rational(2), 4) == B({1, -3, 2, 0, 0}));
  CHECK(eval_Z(E, R(1, 9)) == R(7, 4));
  CHECK(eval_L(E, R(1)) == R(4));
  CHECK_THROWS(eval_Z(E, R(1, 3)));
}

TEST_CASE("Hasse-Weil checks") {
  CHECK(hasse_weil_check(CurveDescriptor::make(3, 1, B({1, 0, 3}))).passed());
  CHECK(hasse_weil_check(CurveDescriptor::make(2, 1, B({1, -2, 2}))).passed());
  // J = 9 at q = 2, g = 1 exceeds (sqrt 2 + 1)^2 and |c_1| <= 2 sqrt 2.
  const auto bad = hasse_weil_check(2, 1, B({1, 6, 2}));
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.upper_bound);
  CHECK_FALSE(bad.c1_bound);
  CHECK(bad.lower_bound);
  CHECK(sqrt_binomial(2, 1) == std::pair<BigInt, BigInt>{3, 2});  // (sqrt2 + 1)^2 = 3 + 2 sqrt2
  CHECK(sqrt_binomial(3, 2) == std::pair<BigInt, BigInt>{28, 16});
}

TEST_CASE("Euler product truncation") {
  const auto r = euler_product_truncation(3, 3, 20);
  CHECK(r.closed_form == R(243, 208));
  CHECK(r.within_certificate);
  CHECK(r.difference >= 0);
  const auto small = euler_product_truncation(2, 2, 3);
  REQUIRE(small.exact.has_value());
  // Places of degree 1,2,3 over F_2: 3, 1, 2.
  const Rational expect = Rational(1) / ((1 - R(1, 4)) * (1 - R(1, 4)) * (1 - R(1, 4)) * (1 - R(1, 16)) *
                                         (1 - R(1, 64)) * (1 - R(1, 64)));
  CHECK(*small.exact == expect);
  CHECK(small.tail_bound == R(8, 3) - (1 + R(3, 4) + R(7, 16) + R(15, 64)));
}

TEST_CASE("descriptor text format") {
  const auto d = parse_descriptor("# comment\nq = 3\ng = 1\nL_coeffs = 1, 0, 3\n");
  CHECK(d.q() == 3);
  CHECK(d.J() == 4);
  CHECK(parse_descriptor(format_descriptor(d)).L() == d.L());

  const std::string g1 = "q = 3\ng = 1\nL_coeffs = 1,0,3\nclass_dims = 1,0,0,0\n";
  CHECK(parse_descriptor(g1).class_dims()->size() == 1);

  auto line_of = [](const std::string& text) {
    try {
      parse_descriptor(text);
    } catch (const DescriptorParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("q = 3\ng = 1\nq = 5\nL_coeffs = 1,0,3\n") == 3);
  CHECK(line_of("q = 3\nfoo = 1\n") == 2);
  CHECK(line_of("q = 3\ng 1\n") == 2);
  CHECK(line_of("q = 3\ng = x\nL_coeffs = 1\n") == 2);
  CHECK(line_of("q = 3\ng = 1\nL_coeffs = 1,0,2\n") == 3);
  CHECK(line_of("q = 3\ng = 0\n") > 0);
  CHECK(line_of("q = 3\ng = 1\nL_coeffs = 1,0,3\nclass_dims = 1,0;1,1\n") == 4);
}
