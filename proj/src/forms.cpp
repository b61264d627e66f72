#include "ffcount/forms.hpp"

#include "ffcount/parallel.hpp"

#include <stdexcept>

namespace ffc {

const BigInt& FormCountInput::at(int dprime) const {
  auto it = N.find(dprime);
  if (it == N.end()) throw std::out_of_range("table has no entry for d' = " + std::to_string(dprime));
  if (it->second < 0) throw std::invalid_argument("counts must be non-negative");
  return it->second;
}

int p_adic_valuation(int d, unsigned p) {
  if (d < 1 || p < 2) throw std::invalid_argument("p-adic valuation needs d >= 1 and p >= 2");
  int r = 0;
  while (d % static_cast<int>(p) == 0) {
    d /= static_cast<int>(p);
    ++r;
  }
  return r;
}

BigInt nsep_from_n(const FormCountInput& t, int dprime) {
  if (dprime % static_cast<int>(t.p) == 0) return t.at(dprime) - t.at(dprime / static_cast<int>(t.p));
  return t.at(dprime);
}

BigInt nsep_from_n(const FormCountInput& t) { return nsep_from_n(t, t.d); }

Rational nf_from_n_rational(const FormCountInput& t) {
  const int r = p_adic_valuation(t.d, t.p);
  BigInt total = t.at(t.d);
  int dp = t.d;
  for (int i = 1; i <= r; ++i) {
    dp /= static_cast<int>(t.p);
    total += (ipow(t.p, i) - ipow(t.p, i - 1)) * t.at(dp);
  }
  return Rational(total, BigInt(t.d));
}

BigInt nf_from_n(const FormCountInput& t) {
  const Rational v = nf_from_n_rational(t);
  if (!is_integral(v))
    throw ConsistencyError("NF = " + to_string(v) + " is not an integer for d = " + std::to_string(t.d) +
                           ", m = " + std::to_string(t.m));
  return numerator_of(v);
}

bool nfsep_identity_check(const FormCountInput& t) {
  const int r = p_adic_valuation(t.d, t.p);
  Rational agg = 0;
  int dp = t.d;
  for (int i = 0; i <= r; ++i) {
    agg += Rational(nsep_from_n(t, dp), BigInt(dp));
    dp /= static_cast<int>(t.p);
  }
  return agg == nf_from_n_rational(t);
}

namespace {

struct FormEnumeration {
  std::vector<Poly> polys;  // degree <= m
  std::vector<bool> monic;
};

FormEnumeration polys_up_to(const PolyRing& R, int m) {
  FormEnumeration e;
  e.polys = R.enumerate(m);
  for (const Poly& f : e.polys) e.monic.push_back(!f.is_zero() && f.lead() == R.field().one());
  return e;
}

}  // namespace

BigInt brute_force_forms(std::int64_t q, int m, const EnumerationOptions& opt) {
  if (m < 0) return 0;
  if (!within_budget(q, 3 * static_cast<std::int64_t>(m + 1), opt.budget))
    throw Refusal("form enumeration needs q^{3(m+1)} candidates, over the budget");
  const PolyRing R(FiniteField::make(static_cast<unsigned>(q)));
  const auto P = polys_up_to(R, m);
  const bool odd = R.field().characteristic() != 2;

  // For q even: linear forms alpha X + beta Y over F_{q^2}[T], degree <= m,
  // first nonzero coordinate monic. Any linear factor of a primitive form of
  // height m has height <= m.
  std::vector<std::pair<Poly, Poly>> linear;
  std::optional<FieldEmbedding> emb;
  std::optional<PolyRing> E;
  if (!odd) {
    emb = extend_field(R.field(), 2);
    E.emplace(emb->target);
    const auto ext = polys_up_to(*E, m);
    for (std::size_t i = 0; i < ext.polys.size(); ++i)
      for (std::size_t j = 0; j < ext.polys.size(); ++j) {
        const bool lead_ok = i == 0 ? ext.monic[j] : ext.monic[i];
        if (lead_ok) linear.emplace_back(ext.polys[i], ext.polys[j]);
      }
  }

  std::vector<BigInt> partials(std::max(1U, opt.workers), BigInt(0));
  parallel_for(P.polys.size(), opt.workers, [&](unsigned w, std::size_t ia) {
    if (!(ia == 0 || P.monic[ia])) return;
    const Poly& a = P.polys[ia];
    std::uint64_t local = 0;
    for (std::size_t ib = 0; ib < P.polys.size(); ++ib) {
      if (ia == 0 && !(ib == 0 || P.monic[ib])) continue;
      const Poly& b = P.polys[ib];
      for (std::size_t ic = 0; ic < P.polys.size(); ++ic) {
        if (ia == 0 && ib == 0 && !P.monic[ic]) continue;
        const Poly& c = P.polys[ic];
        if (std::max({a.degree(), b.degree(), c.degree()}) != m) continue;
        Poly g = a.is_zero() ? (b.is_zero() ? R.monic(c) : R.gcd(b, c)) : R.gcd(R.gcd(a, b), c);
        if (!g.is_one()) continue;
        if (odd) {
          const Poly disc = R.sub(R.mul(b, b), R.scale(R.mul(a, c), R.field().from_integer(4)));
          if (disc.is_zero()) continue;
          if (R.squarefree_part(disc).squarefree.degree() >= 1) ++local;
        } else {
          // F(beta, -alpha) = a beta^2 - b alpha beta + c alpha^2 vanishes iff
          // alpha X + beta Y divides F.
          const Poly A = map_coefficients(a, *emb), B = map_coefficients(b, *emb), C = map_coefficients(c, *emb);
          bool factor = false;
          for (const auto& [al, be] : linear) {
            const Poly v = E->add(E->sub(E->mul(A, E->mul(be, be)), E->mul(B, E->mul(al, be))), E->mul(C, E->mul(al, al)));
            if (v.is_zero()) {
              factor = true;
              break;
            }
          }
          if (!factor) ++local;
        }
      }
    }
    partials[w] += local;
  });
  BigInt total = 0;
  for (const BigInt& p : partials) total += p;
  return total;
}

}  // namespace ffc
