#pragma once

#include "ffcount/places.hpp"
#include "ffcount/poly.hpp"
#include "ffcount/zeta.hpp"

#include <vector>

namespace ffc {

/// K = F_q(T)(sqrt(u D)) for odd q, D squarefree monic of degree >= 1 and
/// u in {1, eps} with eps the first non-square of F_q.
struct QuadraticFieldDesc {
  Poly D;
  Elem u;
  bool twisted = false;  // u == eps
  int genus = 0;
  std::vector<BigInt> point_counts;  // N_1..N_g (at least N_1)
  CurveDescriptor descriptor;
  HeightValue delta2_upper;
};

/// g = floor((deg D - 1)/2).
int quadratic_genus(int degD);

/// N_r for r = 1..r_max: affine solutions of y^2 = u D(x) over F_{q^r} plus
/// the points above infinity (one for odd deg D; two or zero for even deg D
/// depending on whether u is a square in F_{q^r}).
std::vector<BigInt> curve_point_counts(const FiniteField& F, Elem u, const Poly& D, int r_max);

/// L-polynomial from N_1..N_g through Newton's identities.
CurveDescriptor build_descriptor(std::int64_t q, int genus, const std::vector<BigInt>& counts);

/// Upper bound h(1 : sqrt(u D)) = deg D / 2 for the minimal height of a
/// generator.
HeightValue delta2_upper(const Poly& D);

/// Builds the descriptor of one field. Throws for even q, non-monic or
/// non-squarefree D, or u outside {1, eps}.
QuadraticFieldDesc make_quadratic_field(const PolyRing& R, const Poly& D, bool twisted);

/// All fields with 1 <= deg D <= degD_max ordered by (deg D, D, twist).
/// Throws Refusal for even q.
std::vector<QuadraticFieldDesc> enumerate_quadratic_fields(const PolyRing& R, int degD_max, unsigned workers = 1);

/// True iff f/g is a square in F_q(T)^*, i.e. both generate the same field.
bool ratio_is_square(const PolyRing& R, const Poly& f, const Poly& g);

/// Y^2 - u D stays irreducible over F_{q^2}(T): the constant field of K is F_q.
bool has_full_constant_field(const PolyRing& R, const QuadraticFieldDesc& K);

}  // namespace ffc
