#include "ffcount/bivariate.hpp"

#include <numeric>
#include <stdexcept>

namespace ffc {

int YPoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!coeffs[i].is_zero()) return i;
  return -1;
}

YPoly map_coefficients(const YPoly& f, const FieldEmbedding& emb) {
  YPoly out;
  for (const Poly& c : f.coeffs) out.coeffs.push_back(map_coefficients(c, emb));
  return out;
}

Poly eval_homogeneous(const PolyRing& R, const YPoly& f, const Poly& u, const Poly& v) {
  const int d = f.degree();
  Poly acc;
  Poly upow = R.one();
  // a_i u^i v^(d-i), accumulating u^i incrementally.
  for (int i = 0; i <= d; ++i) {
    if (!f.coeffs[i].is_zero())
      acc = R.add(acc, R.mul(f.coeffs[i], R.mul(upow, R.pow(v, static_cast<unsigned>(d - i)))));
    upow = R.mul(upow, u);
  }
  return acc;
}

bool has_root(const PolyRing& R, const YPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("root search needs deg_Y >= 1");
  if (d == 1) return true;
  if (f.coeffs[0].is_zero()) return true;
  const auto& F = R.field();
  const auto dens = R.monic_divisors(f.lead());
  const auto nums = R.monic_divisors(f.coeffs[0]);
  for (const Poly& v : dens) {
    for (const Poly& u : nums) {
      if (!R.gcd(u, v).is_one()) continue;
      for (Elem c : F.elements()) {
        if (c == F.zero()) continue;
        if (eval_homogeneous(R, f, R.scale(u, c), v).is_zero()) return true;
      }
    }
  }
  return false;
}

bool is_irreducible_over_base(const PolyRing& R, const YPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("irreducibility needs deg_Y >= 1");
  if (d > 3) throw std::domain_error("irreducibility test supports deg_Y <= 3 only");
  if (d == 1) return true;
  return !has_root(R, f);
}

bool is_irreducible_over_extension(const PolyRing& R, const YPoly& f, unsigned j) {
  if (j < 2) throw std::invalid_argument("extension degree j must be >= 2");
  const int d = f.degree();
  if (d > 3) throw std::domain_error("extension irreducibility supports deg_Y <= 3 only");
  if (!is_irreducible_over_base(R, f)) throw std::invalid_argument("polynomial is reducible over the base field");
  if (d == 1) return true;
  const unsigned g = std::gcd(j, static_cast<unsigned>(d));
  for (unsigned r = 2; r <= g; ++r) {
    if (g % r != 0 || !is_prime(r)) continue;
    // With d <= 3 and r | d prime, r == d, so a split is into linear factors.
    FieldEmbedding emb = extend_field(R.field(), r);
    PolyRing E(emb.target);
    if (has_root(E, map_coefficients(f, emb))) return false;
  }
  return true;
}

int distinct_root_count(const PolyRing& R, const YPoly& f) {
  const int d = f.degree();
  const int p = static_cast<int>(R.field().characteristic());
  int step = 1;
  while (d % (step * p) == 0) {
    bool in_subring = true;
    for (int i = 0; i <= d; ++i)
      if (i % (step * p) != 0 && !f.coeffs[i].is_zero()) in_subring = false;
    if (!in_subring) break;
    step *= p;
  }
  return d / step;
}

}  // namespace ffc
