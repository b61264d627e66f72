#include <doctest.h>

#include "ffcount/riemann_roch.hpp"

using namespace ffc;

namespace {
std::vector<BigInt> B(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// q = 3, g = 2, L = 1 + t + 3t^2 + 3t^3 + 9t^4: J = 17, a(0..2) = 1, 5, 20.
ClassDimsTable genus2_table(int ones_in_degree1) {
  ClassDimsTable t(3, std::vector<int>(17, 0));
  t[0][0] = 1;
  for (int j = 0; j < ones_in_degree1; ++j) t[1][j] = 1;
  t[2].assign(17, 1);
  t[2][16] = 2;
  return t;
}
}  // namespace

TEST_CASE("genus 0 and 1 class models") {
  const auto M0 = ClassModel::from_descriptor(CurveDescriptor::rational(3));
  CHECK(M0.dims(0, 4) == 5);
  CHECK(M0.dims(0, -1) == 0);
  CHECK(l_dim(M0, 0, 2, 3) == 9);
  CHECK(lambda(M0, 0, 1, 2) == 80);

  const auto M1 = ClassModel::from_descriptor(CurveDescriptor::make(3, 1, B({1, 0, 3})));
  CHECK(M1.class_count() == 4);
  CHECK(M1.dims(0, 0) == 1);
  CHECK(M1.dims(3, 0) == 0);
  CHECK(M1.dims(2, 3) == 3);
  CHECK_THROWS_AS(M1.dims(4, 0), std::out_of_range);
  CHECK(lambda_class_sum(M1, 0, 2) == 8);
  CHECK_THROWS(ClassModel::from_descriptor(
      CurveDescriptor::make(3, 1, B({1, 0, 3}), ClassDimsTable{{0, 1, 0, 0}})));
}

TEST_CASE("class sums match the zeta numerator") {
  const auto desc = CurveDescriptor::make(3, 1, B({1, 2, 3}));
  const auto M = ClassModel::from_descriptor(desc);
  const auto a = a_seq(desc, 6);
  for (int i = 0; i <= 6; ++i) CHECK(lambda_class_sum(M, i, 1) == (desc.q() - 1) * a[i]);
}

TEST_CASE("genus 2 tables are validated") {
  const auto good = CurveDescriptor::make(3, 2, B({1, 1, 3, 3, 9}), genus2_table(5));
  const auto M = ClassModel::from_descriptor(good);
  CHECK(M.dims(16, 2) == 2);
  for (int i = 0; i <= 2; ++i)
    for (int n = 1; n <= 4; ++n) CHECK(lemma5_check(M, i, n).holds);

  CHECK_THROWS(ClassModel::from_descriptor(CurveDescriptor::make(3, 2, B({1, 1, 3, 3, 9}), genus2_table(4))));
  CHECK_THROWS(ClassModel::from_descriptor(CurveDescriptor::make(3, 2, B({1, 1, 3, 3, 9}))));
  auto bounds = genus2_table(5);
  bounds[1][0] = 2;  // 2 l > deg + 2
  CHECK_THROWS(ClassModel::from_descriptor(CurveDescriptor::make(3, 2, B({1, 1, 3, 3, 9}), bounds)));
}

TEST_CASE("reflection identity and explicit bound at genus 1") {
  const auto M = ClassModel::from_descriptor(CurveDescriptor::make(3, 1, B({1, 0, 3})));
  for (int n = 1; n <= 4; ++n) {
    const auto r = lemma5_check(M, 0, n);
    CHECK(r.holds);
    CHECK(r.lhs == r.rhs);
  }
  const auto b = lemma4_check(M, 0, 2);
  CHECK(b.holds);
  CHECK(b.lhs == 8);
  CHECK(b.rhs_sq == 144);
  CHECK_FALSE(b.half_exponent_holds);  // 64 > 48
  CHECK_THROWS(lemma4_check(M, 1, 2));
  CHECK_THROWS(lemma5_check(ClassModel::from_descriptor(CurveDescriptor::rational(3)), 0, 2));
}

TEST_CASE("genus 0 Riemann-Roch bases") {
  const PolyRing R(FiniteField::make(3));
  Divisor a;
  const Place p = Place::finite(R, R.from_ints({1, 0, 1}));  // T^2 + 1
  a.add(p, 1);
  a.add(Place::infinity(), 1);
  a.add(Place::finite(R, R.variable()), -1);
  // deg a = 2, so l(a, 1) = 3 and l(a, 2) = 6.
  const auto basis = genus0_basis(R, a, 2);
  CHECK(basis.size() == 6);
  for (const auto& v : basis)
    for (const auto& f : v) CHECK(in_riemann_roch_space(R, a, f));
  const auto outside = RationalFunction::make(R, R.one(), R.from_ints({1, 0, 1}));
  CHECK_FALSE(in_riemann_roch_space(R, a, outside));  // needs a zero at T
  const auto inside = RationalFunction::make(R, R.variable(), R.from_ints({1, 0, 1}));
  CHECK(in_riemann_roch_space(R, a, inside));
  Divisor negative;
  negative.add(Place::infinity(), -1);
  CHECK(genus0_basis(R, negative, 1).empty());
}
