#include "ffcount/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffc {

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Poly PolyRing::constant(Elem c) const { return Poly(Poly::Coeffs{c}); }

Poly PolyRing::monomial(Elem c, int degree) const {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  Poly::Coeffs v(static_cast<std::size_t>(degree) + 1, F_.zero());
  v[degree] = c;
  return Poly(std::move(v));
}

Poly PolyRing::from_ints(std::initializer_list<long long> coeffs) const {
  return from_ints(std::span<const long long>(coeffs.begin(), coeffs.size()));
}

Poly PolyRing::from_ints(std::span<const long long> coeffs) const {
  Poly::Coeffs v;
  for (long long c : coeffs) v.push_back(F_.from_integer(c));
  return Poly(std::move(v));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  const int n = std::max(a.degree(), b.degree()) + 1;
  Poly::Coeffs v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = F_.add(a[i], b[i]);
  return Poly(std::move(v));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  const int n = std::max(a.degree(), b.degree()) + 1;
  Poly::Coeffs v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = F_.sub(a[i], b[i]);
  return Poly(std::move(v));
}

Poly PolyRing::neg(const Poly& a) const {
  Poly::Coeffs v;
  for (Elem c : a.coeffs()) v.push_back(F_.neg(c));
  return Poly(std::move(v));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Poly::Coeffs v(static_cast<std::size_t>(a.degree() + b.degree() + 1), F_.zero());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] == F_.zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) v[i + j] = F_.add(v[i + j], F_.mul(a[i], b[j]));
  }
  return Poly(std::move(v));
}

Poly PolyRing::scale(const Poly& a, Elem c) const {
  Poly::Coeffs v;
  for (Elem x : a.coeffs()) v.push_back(F_.mul(x, c));
  return Poly(std::move(v));
}

Poly PolyRing::pow(const Poly& a, unsigned exponent) const {
  Poly result = one();
  Poly base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  Poly::Coeffs r(a.coeffs().begin(), a.coeffs().end());
  Poly::Coeffs quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), F_.zero());
  const Elem lead_inv = F_.inv(b.lead());
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Elem c = r[k];
    if (c == F_.zero()) continue;
    Elem t = F_.mul(c, lead_inv);
    quot[k - db] = t;
    for (int i = 0; i <= db; ++i) r[k - db + i] = F_.sub(r[k - db + i], F_.mul(t, b[i]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly PolyRing::div_exact(const Poly& a, const Poly& b) const {
  auto [quot, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot;
}

bool PolyRing::divides(const Poly& d, const Poly& a) const {
  if (d.is_zero()) return a.is_zero();
  return rem(a, d).is_zero();
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, F_.inv(a.lead()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly PolyRing::derivative(const Poly& a) const {
  if (a.degree() < 1) return {};
  Poly::Coeffs v(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) v[i - 1] = F_.mul(F_.from_integer(i), a[i]);
  return Poly(std::move(v));
}

Elem PolyRing::eval(const Poly& a, Elem x) const {
  Elem acc = F_.zero();
  for (int i = a.degree(); i >= 0; --i) acc = F_.add(F_.mul(acc, x), a[i]);
  return acc;
}

Poly PolyRing::from_index(std::uint64_t idx) const {
  Poly::Coeffs v;
  while (idx > 0) {
    v.push_back(Elem{static_cast<std::uint8_t>(idx % F_.size())});
    idx /= F_.size();
  }
  return Poly(std::move(v));
}

std::uint64_t PolyRing::index_of(const Poly& a) const {
  std::uint64_t idx = 0;
  for (int i = a.degree(); i >= 0; --i) idx = idx * F_.size() + a[i].v;
  return idx;
}

std::vector<Poly> PolyRing::enumerate(int max_deg) const {
  if (max_deg < -1) throw std::invalid_argument("max_deg must be >= -1");
  std::uint64_t count = 1;
  for (int i = 0; i <= max_deg; ++i) count *= F_.size();
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(from_index(i));
  return out;
}

std::vector<Poly> PolyRing::monic_of_degree(int degree) const {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= F_.size();
  std::vector<Poly> out;
  out.reserve(count);
  const std::uint64_t top = count;  // index of T^degree
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(from_index(top + i));
  return out;
}

bool PolyRing::is_irreducible(const Poly& f) const {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility of a constant is undefined");
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const Poly& g : monic_of_degree(d))
      if (divides(g, f)) return false;
  return true;
}

Factorization PolyRing::factor(const Poly& f) const {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.lead();
  Poly rest = monic(f);
  // Any divisor found at degree d is irreducible: its smaller factors were
  // already removed.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& g : monic_of_degree(d)) {
      int mult = 0;
      while (rest.degree() >= d) {
        auto [quot, r] = divmod(rest, g);
        if (!r.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(g, mult);
      if (2 * d > rest.degree()) break;
    }
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

Poly PolyRing::pth_root(const Poly& f) const {
  const unsigned p = F_.characteristic();
  Poly::Coeffs v;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % static_cast<int>(p) != 0) {
      if (f[i] != F_.zero()) throw std::domain_error("polynomial is not a p-th power");
      continue;
    }
    v.push_back(F_.pth_root(f[i]));
  }
  return Poly(std::move(v));
}

std::vector<std::pair<Poly, int>> PolyRing::squarefree_decomposition(const Poly& f) const {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly a = monic(f);
  if (a.degree() < 1) return out;
  Poly c = gcd(a, derivative(a));
  Poly w = div_exact(a, c);
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = div_exact(w, y);
    if (!fac.is_one()) out.emplace_back(fac, i);
    ++i;
    w = std::move(y);
    c = div_exact(c, w);
  }
  if (!c.is_one()) {
    // Remaining part has zero derivative: it is a p-th power.
    const int p = static_cast<int>(F_.characteristic());
    for (auto& [g, mult] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, mult * p);
  }
  // Merge factors sharing a multiplicity (the p-th root branch can repeat one).
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& [g, mult] : out) {
    if (!merged.empty() && merged.back().second == mult)
      merged.back().first = mul(merged.back().first, g);
    else
      merged.emplace_back(g, mult);
  }
  return merged;
}

SquarefreePart PolyRing::squarefree_part(const Poly& f) const {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  SquarefreePart out{f.lead(), one(), one()};
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    if (mult % 2 == 1) out.squarefree = mul(out.squarefree, g);
    out.cofactor = mul(out.cofactor, pow(g, static_cast<unsigned>(mult / 2)));
  }
  return out;
}

bool PolyRing::is_squarefree(const Poly& f) const {
  for (const auto& [g, mult] : squarefree_decomposition(f))
    if (mult > 1) return false;
  return true;
}

std::vector<Poly> PolyRing::monic_divisors(const Poly& f) const {
  auto fac = factor(f);
  std::vector<Poly> divs{one()};
  for (const auto& [g, mult] : fac.factors) {
    std::vector<Poly> next;
    for (const Poly& d : divs) {
      Poly acc = d;
      next.push_back(acc);
      for (int k = 1; k <= mult; ++k) {
        acc = mul(acc, g);
        next.push_back(acc);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

std::string PolyRing::format(const Poly& f, char var) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Elem c = f[i];
    if (c == F_.zero()) continue;
    if (!first) os << "+";
    first = false;
    const bool unit_coeff = c == F_.one() && i > 0;
    if (!unit_coeff) os << F_.format(c);
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly map_coefficients(const Poly& f, const FieldEmbedding& emb) {
  Poly::Coeffs v;
  for (Elem c : f.coeffs()) v.push_back(emb.map(c));
  return Poly(std::move(v));
}

}  // namespace ffc
