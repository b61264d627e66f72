#include "ffcount/places.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ffc {

Place Place::finite(const PolyRing& R, Poly p) {
  if (p.degree() < 1) throw std::invalid_argument("a finite place needs a nonconstant polynomial");
  if (p.lead() != R.field().one()) throw std::invalid_argument("a finite place needs a monic polynomial");
  if (!R.is_irreducible(p)) throw std::invalid_argument("a finite place needs an irreducible polynomial");
  return Place(std::move(p));
}

const Poly& Place::poly() const {
  if (!poly_) throw std::logic_error("the place at infinity has no polynomial");
  return *poly_;
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
  return a.poly() <=> b.poly();
}

std::int64_t Valuation::value() const {
  if (!v_) throw std::logic_error("infinite valuation has no integer value");
  return *v_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return a.value() <=> b.value();
}

RationalFunction RationalFunction::make(const PolyRing& R, const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return RationalFunction(Poly{}, R.one());
  Poly g = R.gcd(num, den);
  Poly n = R.div_exact(num, g);
  Poly d = R.div_exact(den, g);
  const Elem lc = d.lead();
  const Elem lc_inv = R.field().inv(lc);
  return RationalFunction(R.scale(n, lc_inv), R.scale(d, lc_inv));
}

RationalFunction multiply(const PolyRing& R, const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(R, R.mul(a.num(), b.num()), R.mul(a.den(), b.den()));
}

RationalFunction add(const PolyRing& R, const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(R, R.add(R.mul(a.num(), b.den()), R.mul(b.num(), a.den())),
                                R.mul(a.den(), b.den()));
}

void Divisor::add(const Place& v, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(v, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Divisor::coefficient(const Place& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [v, c] : terms_) d += c * v.degree();
  return d;
}

HeightValue HeightValue::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("height denominator must be positive");
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return HeightValue{num / g, den / g};
}

std::string to_string(const HeightValue& h) {
  if (h.denominator == 1) return std::to_string(h.numerator);
  return std::to_string(h.numerator) + "/" + std::to_string(h.denominator);
}

std::int64_t multiplicity(const PolyRing& R, const Place& v, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  std::int64_t k = 0;
  Poly rest = f;
  while (true) {
    auto [quot, r] = R.divmod(rest, v.poly());
    if (!r.is_zero()) return k;
    rest = std::move(quot);
    ++k;
  }
}

Valuation ord_at(const PolyRing& R, const Place& v, const RationalFunction& f) {
  if (f.is_zero()) return Valuation::infinite();
  if (v.is_infinity()) return Valuation(f.den().degree() - f.num().degree());
  return Valuation(multiplicity(R, v, f.num()) - multiplicity(R, v, f.den()));
}

Valuation ord_vec(const PolyRing& R, const Place& v, std::span<const RationalFunction> x) {
  Valuation best = Valuation::infinite();
  for (const auto& xi : x) best = std::min(best, ord_at(R, v, xi));
  return best;
}

Divisor divisor_of_vector(const PolyRing& R, std::span<const RationalFunction> x) {
  bool nonzero = false;
  std::set<Place> support{Place::infinity()};
  for (const auto& xi : x) {
    if (xi.is_zero()) continue;
    nonzero = true;
    for (const Poly* part : {&xi.num(), &xi.den()})
      for (const auto& [p, mult] : R.factor(*part).factors) support.insert(Place::finite(R, p));
  }
  if (!nonzero) throw std::invalid_argument("divisor of the zero vector is undefined");
  Divisor out;
  for (const Place& v : support) out.add(v, ord_vec(R, v, x).value());
  return out;
}

std::int64_t height_relative(const PolyRing& R, std::span<const RationalFunction> x) {
  return -divisor_of_vector(R, x).degree();
}

std::vector<Poly> normalize_projective(const PolyRing& R, std::span<const RationalFunction> x) {
  Poly common = R.one();
  bool nonzero = false;
  for (const auto& xi : x) {
    if (xi.is_zero()) continue;
    nonzero = true;
    common = R.mul(common, R.div_exact(xi.den(), R.gcd(common, xi.den())));
  }
  if (!nonzero) throw std::invalid_argument("projective point needs a nonzero coordinate");
  std::vector<Poly> polys;
  for (const auto& xi : x) polys.push_back(R.div_exact(R.mul(xi.num(), common), xi.den()));
  Poly g;
  for (const Poly& p : polys) g = g.is_zero() ? R.monic(p) : (p.is_zero() ? g : R.gcd(g, p));
  Elem scale{};
  for (const Poly& p : polys)
    if (!p.is_zero()) {
      scale = R.field().inv(R.div_exact(p, g).lead());
      break;
    }
  for (Poly& p : polys) p = R.scale(R.div_exact(p, g), scale);
  return polys;
}

std::int64_t height_from_coprime_representative(const PolyRing& R, std::span<const RationalFunction> x) {
  std::int64_t h = 0;
  for (const Poly& p : normalize_projective(R, x)) h = std::max<std::int64_t>(h, p.degree());
  return h;
}

HeightValue height_absolute(const PolyRing& R, std::span<const RationalFunction> x, std::int64_t effective_degree) {
  return absolute_from_relative(height_relative(R, x), effective_degree);
}

HeightValue absolute_from_relative(std::int64_t relative_height, std::int64_t effective_degree) {
  if (effective_degree < 1) throw std::invalid_argument("effective degree must be >= 1");
  return HeightValue::make(relative_height, effective_degree);
}

std::int64_t relative_height_in_extension(std::int64_t relative_height_k, std::int64_t degree) {
  if (degree < 1) throw std::invalid_argument("extension degree must be >= 1");
  return relative_height_k * degree;
}

std::vector<Place> enumerate_places(const PolyRing& R, int degree) {
  if (degree < 1) throw std::invalid_argument("place degree must be >= 1");
  std::vector<Place> out;
  for (const Poly& f : R.monic_of_degree(degree))
    if (R.is_irreducible(f)) out.push_back(Place::finite(R, f));
  if (degree == 1) out.push_back(Place::infinity());
  return out;
}

namespace {
int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}
}  // namespace

BigInt place_count(std::int64_t q, int degree) {
  if (degree < 1) throw std::invalid_argument("place degree must be >= 1");
  BigInt total = 0;
  for (int e = 1; e <= degree; ++e)
    if (degree % e == 0) total += moebius(e) * ipow(q, degree / e);
  total /= degree;
  if (degree == 1) total += 1;
  return total;
}

}  // namespace ffc
