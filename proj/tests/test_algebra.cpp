#include <doctest.h>

#include "ffcount/bivariate.hpp"
#include "ffcount/finite_field.hpp"
#include "ffcount/poly.hpp"

using namespace ffc;

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decomposition(2) == std::pair<unsigned, unsigned>{2, 1});
  CHECK(prime_power_decomposition(9) == std::pair<unsigned, unsigned>{3, 2});
  CHECK(prime_power_decomposition(256) == std::pair<unsigned, unsigned>{2, 8});
  CHECK_THROWS(prime_power_decomposition(6));
  CHECK_THROWS(prime_power_decomposition(1));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("finite field arithmetic") {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
    const auto F = FiniteField::make(q);
    CAPTURE(q);
    CHECK(F.size() == q);
    CHECK(F.elements().size() == q);
    std::size_t squares = 0;
    for (Elem a : F.elements()) {
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (a != F.zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.pow(a, q) == a);
      CHECK(F.pow(F.pth_root(a), F.characteristic()) == a);
      if (a != F.zero() && F.is_square(a)) ++squares;
    }
    // Half the units are squares in odd characteristic, all of them in even.
    CHECK(squares == (q % 2 == 1 ? (q - 1) / 2 : q - 1));
  }
  const auto F3 = FiniteField::make(3);
  CHECK(F3.first_nonsquare() == F3.from_integer(2));
  CHECK(F3.from_integer(-1) == F3.from_integer(2));
  CHECK_THROWS(F3.inv(F3.zero()));
}

TEST_CASE("F_4 modulus and embedding") {
  const auto F4 = FiniteField::make(4);
  CHECK(F4.modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK_THROWS(FiniteField::with_modulus(2, {1, 0, 1}));  // z^2 + 1 = (z+1)^2
  const auto emb = extend_field(FiniteField::make(3), 2);
  CHECK(emb.target.size() == 9);
  const auto& B = emb.base;
  for (Elem a : B.elements())
    for (Elem b : B.elements()) {
      CHECK(emb.map(B.add(a, b)) == emb.target.add(emb.map(a), emb.map(b)));
      CHECK(emb.map(B.mul(a, b)) == emb.target.mul(emb.map(a), emb.map(b)));
    }
}

TEST_CASE("polynomial gcd and division") {
  const PolyRing R(FiniteField::make(3));
  // (T^2 - 1)(T + 2) and (T^2 - 1) T share T^2 - 1.
  const Poly a = R.mul(R.from_ints({-1, 0, 1}), R.from_ints({2, 1}));
  const Poly b = R.mul(R.from_ints({-1, 0, 1}), R.variable());
  CHECK(R.gcd(a, b) == R.from_ints({-1, 0, 1}));
  CHECK(R.gcd(R.zero(), R.from_ints({2, 2})) == R.from_ints({1, 1}));
  CHECK_THROWS_AS(R.gcd(R.zero(), R.zero()), std::domain_error);
  const auto [qt, rm] = R.divmod(a, R.from_ints({1, 1}));
  CHECK(R.add(R.mul(qt, R.from_ints({1, 1})), rm) == a);
  CHECK_THROWS_AS(R.divmod(a, R.zero()), std::domain_error);
  CHECK(R.format(R.from_ints({1, 2, 0, 1})) == "T^3+2*T+1");
}

TEST_CASE("enumeration and indices") {
  const PolyRing R(FiniteField::make(2));
  CHECK(R.enumerate(-1).size() == 1);
  CHECK(R.enumerate(3).size() == 16);
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(R.index_of(R.from_index(i)) == i);
  CHECK(R.monic_of_degree(3).size() == 8);
}

TEST_CASE("irreducibility and factorization") {
  const PolyRing R2(FiniteField::make(2));
  int irreducible_quadratics = 0;
  for (const Poly& f : R2.monic_of_degree(2)) irreducible_quadratics += R2.is_irreducible(f);
  CHECK(irreducible_quadratics == 1);
  CHECK(R2.is_irreducible(R2.from_ints({1, 1, 1})));
  CHECK_THROWS(R2.is_irreducible(R2.one()));

  const PolyRing R3(FiniteField::make(3));
  int cubic = 0;
  for (const Poly& f : R3.monic_of_degree(3)) cubic += R3.is_irreducible(f);
  CHECK(cubic == 8);
  const Poly f = R3.mul(R3.from_ints({0, -1, 0, 1}), R3.pow(R3.variable(), 4));
  const auto fac = R3.factor(f);
  CHECK(fac.factors.size() == 3);
}

TEST_CASE("squarefree parts") {
  const PolyRing R(FiniteField::make(3));
  const Poly s = R.from_ints({0, -1, 0, 1});  // T^3 - T
  const Poly f = R.mul(s, R.pow(R.variable(), 4));
  const auto sp = R.squarefree_part(f);
  CHECK(sp.squarefree == R.from_ints({0, 2, 0, 1}));
  CHECK(R.mul(R.constant(sp.unit), R.mul(sp.squarefree, R.pow(sp.cofactor, 2))) == f);
  // T^p has zero derivative and is not squarefree.
  CHECK_FALSE(R.is_squarefree(R.pow(R.variable(), 3)));
  CHECK(R.pth_root(R.pow(R.from_ints({1, 1}), 3)) == R.from_ints({1, 1}));
  CHECK(R.is_squarefree(s));
  CHECK_THROWS(R.squarefree_part(R.zero()));
}

TEST_CASE("bivariate roots and irreducibility") {
  const PolyRing R2(FiniteField::make(2));
  // Y^2 + Y + 1 has no root over F_2(T) but splits over F_4.
  YPoly f{{R2.one(), R2.one(), R2.one()}};
  CHECK(is_irreducible_over_base(R2, f));
  CHECK_FALSE(is_irreducible_over_extension(R2, f, 2));
  CHECK(distinct_root_count(R2, f) == 2);

  const PolyRing R3(FiniteField::make(3));
  // Y^2 - T stays irreducible over F_9(T).
  YPoly g{{R3.from_ints({0, -1}), R3.zero(), R3.one()}};
  CHECK(is_irreducible_over_base(R3, g));
  CHECK(is_irreducible_over_extension(R3, g, 2));
  // Y^2 - T^2 has the root T.
  YPoly h{{R3.from_ints({0, 0, -1}), R3.zero(), R3.one()}};
  CHECK(has_root(R3, h));

  // Y^2 + T over F_2(T) is inseparable: one distinct root.
  YPoly ins{{R2.variable(), R2.zero(), R2.one()}};
  CHECK(is_irreducible_over_base(R2, ins));
  CHECK(distinct_root_count(R2, ins) == 1);
}
