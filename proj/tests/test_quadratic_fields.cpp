#include <doctest.h>

#include "ffcount/quadratic_fields.hpp"

using namespace ffc;

namespace {
std::vector<BigInt> B(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("genus from the discriminant degree") {
  CHECK(quadratic_genus(1) == 0);
  CHECK(quadratic_genus(2) == 0);
  CHECK(quadratic_genus(3) == 1);
  CHECK(quadratic_genus(4) == 1);
  CHECK(quadratic_genus(5) == 2);
  CHECK(quadratic_genus(6) == 2);
}

TEST_CASE("y^2 = x^3 - x over F_3") {
  const PolyRing R(FiniteField::make(3));
  const auto K = make_quadratic_field(R, R.from_ints({0, -1, 0, 1}), false);
  CHECK(K.genus == 1);
  CHECK(K.point_counts.at(0) == 4);  // three roots of x^3 - x plus one point at infinity
  CHECK(K.descriptor.L() == B({1, 0, 3}));
  CHECK(K.descriptor.J() == 4);
  CHECK(to_string(K.delta2_upper) == "3/2");
  CHECK(has_full_constant_field(R, K));
  // Over F_9 the count is 9 + 1 - (alpha^2 + conj^2) with alpha^2 = -3: 16.
  const auto counts = curve_point_counts(R.field(), R.field().one(), K.D, 2);
  CHECK(counts == B({4, 16}));
}

TEST_CASE("points at infinity for even degree") {
  const auto F = FiniteField::make(3);
  const PolyRing R(F);
  const Poly D = R.from_ints({1, 0, 1});  // T^2 + 1, irreducible
  // u = 1: two points at infinity, affine points where 1 + x^2 is a square.
  CHECK(curve_point_counts(F, F.one(), D, 1) == B({4}));
  // u = eps: no points at infinity over F_3, two over F_9; genus 0 keeps q^r + 1.
  const auto tw = curve_point_counts(F, F.first_nonsquare(), D, 2);
  CHECK(tw == B({4, 10}));
}

TEST_CASE("L-polynomial from point counts") {
  const auto d = build_descriptor(3, 1, B({4}));
  CHECK(d.L() == B({1, 0, 3}));
  const auto d0 = build_descriptor(3, 0, {});
  CHECK(d0.L() == B({1}));
}

TEST_CASE("field enumeration over F_3") {
  const PolyRing R(FiniteField::make(3));
  CHECK(enumerate_quadratic_fields(R, 1).size() == 6);
  // squarefree monic: 3 linear, 6 quadratic, 18 cubic; two twists each
  const auto upto3 = enumerate_quadratic_fields(R, 3, 4);
  CHECK(upto3.size() == 54);
  for (std::size_t i = 0; i < upto3.size(); ++i)
    for (std::size_t j = i + 1; j < upto3.size(); ++j)
      CHECK_FALSE(ratio_is_square(R, R.scale(upto3[i].D, upto3[i].u), R.scale(upto3[j].D, upto3[j].u)));
  for (const auto& K : upto3) CHECK(has_full_constant_field(R, K));
  // Twisting negates the Frobenius trace in odd degree.
  for (std::size_t i = 0; i + 1 < upto3.size(); i += 2)
    if (upto3[i].D.degree() % 2 == 1)
      CHECK(upto3[i].point_counts[0] + upto3[i + 1].point_counts[0] == 2 * (3 + 1));
}

TEST_CASE("rejections") {
  const PolyRing R3(FiniteField::make(3));
  CHECK_THROWS(make_quadratic_field(R3, R3.from_ints({0, 0, 1}), false));  // T^2 not squarefree
  CHECK_THROWS(make_quadratic_field(R3, R3.from_ints({1, 2}), false));     // not monic
  CHECK_THROWS(make_quadratic_field(R3, R3.one(), false));
  const PolyRing R2(FiniteField::make(2));
  CHECK_THROWS_AS(enumerate_quadratic_fields(R2, 2), Refusal);
}

TEST_CASE("square classes") {
  const PolyRing R(FiniteField::make(3));
  const Poly T = R.variable();
  CHECK(ratio_is_square(R, T, R.mul(T, R.from_ints({1, 1, 1}))));  // (T+2)^2 = T^2 + T + 1 over F_3
  CHECK_FALSE(ratio_is_square(R, T, R.scale(T, R.field().first_nonsquare())));
  CHECK_FALSE(ratio_is_square(R, T, R.from_ints({1, 1})));
}
