#include "ffcount/quadratic_fields.hpp"

#include "ffcount/bivariate.hpp"
#include "ffcount/parallel.hpp"

#include <stdexcept>

namespace ffc {

int quadratic_genus(int degD) {
  if (degD < 1) throw std::invalid_argument("deg D must be >= 1");
  return (degD - 1) / 2;
}

std::vector<BigInt> curve_point_counts(const FiniteField& F, Elem u, const Poly& D, int r_max) {
  if (F.characteristic() == 2) throw Refusal("point counts use the odd-characteristic model y^2 = uD");
  std::vector<BigInt> out;
  for (int r = 1; r <= r_max; ++r) {
    const FieldEmbedding emb = extend_field(F, static_cast<unsigned>(r));
    const FiniteField& E = emb.target;
    const PolyRing ER(E);
    const Poly f = ER.scale(map_coefficients(D, emb), emb.map(u));
    BigInt n = 0;
    for (Elem x : E.elements()) {
      const Elem y2 = ER.eval(f, x);
      if (y2 == E.zero())
        n += 1;
      else if (E.is_square(y2))
        n += 2;
    }
    if (D.degree() % 2 == 1)
      n += 1;
    else if (E.is_square(emb.map(u)))
      n += 2;
    out.push_back(n);
  }
  return out;
}

CurveDescriptor build_descriptor(std::int64_t q, int genus, const std::vector<BigInt>& counts) {
  if (static_cast<int>(counts.size()) < genus) throw std::invalid_argument("need point counts N_1..N_g");
  std::vector<BigInt> power_sums;  // S_r = sum alpha^r = q^r + 1 - N_r
  for (int r = 1; r <= genus; ++r) power_sums.push_back(ipow(q, r) + 1 - counts[r - 1]);
  std::vector<BigInt> L(static_cast<std::size_t>(2 * genus + 1), 0);
  L[0] = 1;
  for (int k = 1; k <= genus; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += power_sums[i - 1] * L[k - i];
    if (acc % k != 0) throw ConsistencyError("Newton identity produced a non-integral L coefficient");
    L[k] = -acc / k;
  }
  for (int i = 0; i < genus; ++i) L[2 * genus - i] = ipow(q, genus - i) * L[i];
  return CurveDescriptor::make(q, genus, std::move(L));
}

HeightValue delta2_upper(const Poly& D) { return HeightValue::make(D.degree(), 2); }

QuadraticFieldDesc make_quadratic_field(const PolyRing& R, const Poly& D, bool twisted) {
  const FiniteField& F = R.field();
  if (F.characteristic() == 2) throw Refusal("quadratic fields in characteristic 2 are out of scope");
  if (D.degree() < 1 || D.lead() != F.one()) throw std::invalid_argument("D must be monic of degree >= 1");
  if (!R.is_squarefree(D)) throw std::invalid_argument("D must be squarefree");
  const int g = quadratic_genus(D.degree());
  const Elem u = twisted ? F.first_nonsquare() : F.one();
  auto counts = curve_point_counts(F, u, D, std::max(g, 1));
  CurveDescriptor desc = build_descriptor(F.size(), g, counts);
  return QuadraticFieldDesc{D, u, twisted, g, std::move(counts), std::move(desc), delta2_upper(D)};
}

std::vector<QuadraticFieldDesc> enumerate_quadratic_fields(const PolyRing& R, int degD_max, unsigned workers) {
  if (R.field().characteristic() == 2) throw Refusal("quadratic fields need odd q (char 2 is Artin-Schreier)");
  if (degD_max < 1) throw std::invalid_argument("degD_max must be >= 1");
  std::vector<Poly> candidates;
  for (int deg = 1; deg <= degD_max; ++deg)
    for (Poly& D : R.monic_of_degree(deg))
      if (R.is_squarefree(D)) candidates.push_back(std::move(D));
  std::vector<std::optional<QuadraticFieldDesc>> slots(2 * candidates.size());
  parallel_for(slots.size(), workers,
               [&](unsigned, std::size_t i) { slots[i] = make_quadratic_field(R, candidates[i / 2], i % 2 == 1); });
  std::vector<QuadraticFieldDesc> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool ratio_is_square(const PolyRing& R, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("ratio of zero");
  const SquarefreePart sp = R.squarefree_part(R.mul(f, g));
  return sp.squarefree.is_one() && R.field().is_square(sp.unit);
}

bool has_full_constant_field(const PolyRing& R, const QuadraticFieldDesc& K) {
  YPoly f;
  f.coeffs = {R.neg(R.scale(K.D, K.u)), Poly{}, R.one()};
  return is_irreducible_over_extension(R, f, 2);
}

}  // namespace ffc
