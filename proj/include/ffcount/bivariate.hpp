#pragma once

#include "ffcount/poly.hpp"

#include <vector>

namespace ffc {

/// Polynomial in an auxiliary variable Y with coefficients in F_q[T]:
/// sum coeffs[i] * Y^i.
struct YPoly {
  std::vector<Poly> coeffs;

  int degree() const;
  const Poly& lead() const { return coeffs.at(static_cast<std::size_t>(degree())); }
};

YPoly map_coefficients(const YPoly& f, const FieldEmbedding& emb);

/// Evaluates the homogenisation sum a_i u^i v^(d-i), i.e. v^d f(u/v).
Poly eval_homogeneous(const PolyRing& R, const YPoly& f, const Poly& u, const Poly& v);

/// True iff f has a root in Frac(R) = F(T). Searches u/v with u | a_0 and
/// v | a_d (up to units), which covers every root written in lowest terms.
bool has_root(const PolyRing& R, const YPoly& f);

/// Irreducibility over F_q(T) for deg_Y f in 1..3, where reducible means
/// having a root. Throws std::domain_error for larger degrees.
bool is_irreducible_over_base(const PolyRing& R, const YPoly& f);

/// For f irreducible over F_q(T) with deg_Y f <= 3 and j >= 2: true iff f
/// stays irreducible over F_{q^j}(T). Only primes r dividing gcd(j, deg f)
/// can split f, and for deg f <= 3 such a split produces a linear factor.
bool is_irreducible_over_extension(const PolyRing& R, const YPoly& f, unsigned j);

/// Number of distinct roots of an irreducible f in an algebraic closure:
/// deg f / p^r where f is a polynomial in Y^(p^r) and no higher p-power.
int distinct_root_count(const PolyRing& R, const YPoly& f);

}  // namespace ffc
