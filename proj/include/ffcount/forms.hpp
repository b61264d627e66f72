#pragma once

#include "ffcount/arith.hpp"
#include "ffcount/counting.hpp"

#include <map>

namespace ffc {

/// Counts N_k(n, d', m) for the divisors d' = d/p^i of d.
struct FormCountInput {
  unsigned p = 0;  // characteristic
  int n = 0;
  int d = 0;
  int m = 0;
  std::map<int, BigInt> N;  // d' -> N_k(n, d', m)

  const BigInt& at(int dprime) const;
};

/// Largest r with p^r | d.
int p_adic_valuation(int d, unsigned p);

/// N^sep(n,d,m) = N(d) - N(d/p) if p | d, else N(d).
BigInt nsep_from_n(const FormCountInput& t);
BigInt nsep_from_n(const FormCountInput& t, int dprime);

/// (N(d) + sum_{i=1}^r (p^i - p^{i-1}) N(d/p^i)) / d, returned exactly.
Rational nf_from_n_rational(const FormCountInput& t);

/// Same value; throws ConsistencyError unless it is an integer.
BigInt nf_from_n(const FormCountInput& t);

/// Compares nf_from_n with sum_{i=0}^r N^sep(d/p^i) / (d/p^i).
bool nfsep_identity_check(const FormCountInput& t);

/// Binary quadratic forms aX^2 + bXY + cY^2 over F_q[T], up to scalars, with
/// coprime coefficients of max degree m, irreducible over F_q(T) and still
/// irreducible over F_{q^2}(T). Odd q decides this from the square class of
/// the discriminant; q = 2 searches linear factors over F_4[T] directly.
BigInt brute_force_forms(std::int64_t q, int m, const EnumerationOptions& opt = {});

}  // namespace ffc
