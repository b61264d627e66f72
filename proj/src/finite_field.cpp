#include "ffcount/finite_field.hpp"

#include "ffcount/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ffc {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) throw std::invalid_argument("field size must be a prime power >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

namespace {

std::vector<unsigned> digits(unsigned index, unsigned p, unsigned e) {
  std::vector<unsigned> d(e);
  for (unsigned k = 0; k < e; ++k) {
    d[k] = index % p;
    index /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of residues modulo the monic modulus, all digits in [0, p).
std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& modulus, unsigned p) {
  const unsigned e = static_cast<unsigned>(a.size());
  std::vector<unsigned> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (unsigned k = 2 * e - 1; k >= e; --k) {
    unsigned c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + p * p - c * modulus[i] % p) % p;
  }
  prod.resize(e);
  return prod;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned k = 0; k < e; ++k) q_ *= p;
  if (q_ > 256) throw std::invalid_argument("field size above 256 is not supported");
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  square_.assign(q_, 0);
  pth_root_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits(a, p, e);
    std::vector<unsigned> dn(e);
    for (unsigned k = 0; k < e; ++k) dn[k] = (p - da[k]) % p;
    neg_[a] = static_cast<std::uint8_t>(undigits(dn, p));
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits(b, p, e);
      std::vector<unsigned> ds(e);
      for (unsigned k = 0; k < e; ++k) ds[k] = (da[k] + db[k]) % p;
      add_[a * q_ + b] = static_cast<std::uint8_t>(undigits(ds, p));
      unsigned prod = e == 1 ? (a * b) % p : undigits(mulmod(da, db, modulus_, p), p);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(prod);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
  for (unsigned a = 0; a < q_; ++a) {
    square_[mul_[a * q_ + a]] = 1;
    unsigned ap = 1;
    for (unsigned k = 0; k < p; ++k) ap = mul_[ap * q_ + a];
    pth_root_[ap] = static_cast<std::uint8_t>(a);
  }
}

FiniteField FiniteField::make(unsigned q) {
  auto [p, e] = prime_power_decomposition(q);
  if (e == 1) return FiniteField(p, 1, {});
  PolyRing Fp(FiniteField(p, 1, {}));
  for (const Poly& f : Fp.monic_of_degree(static_cast<int>(e))) {
    if (!Fp.is_irreducible(f)) continue;
    std::vector<unsigned> mod;
    for (Elem c : f.coeffs()) mod.push_back(c.v);
    return FiniteField(p, e, std::move(mod));
  }
  throw std::logic_error("no irreducible modulus found");
}

FiniteField FiniteField::with_modulus(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  PolyRing Fp(FiniteField(p, 1, {}));
  Poly::Coeffs c;
  for (unsigned v : modulus) {
    if (v >= p) throw std::invalid_argument("modulus coefficient out of range");
    c.push_back(Elem{static_cast<std::uint8_t>(v)});
  }
  const unsigned e = static_cast<unsigned>(modulus.size() - 1);
  if (!Fp.is_irreducible(Poly(c))) throw std::invalid_argument("modulus is reducible");
  if (e == 1) return FiniteField(p, 1, {});
  return FiniteField(p, e, std::move(modulus));
}

Elem FiniteField::element(unsigned index) const {
  if (index >= q_) throw std::out_of_range("field element index out of range");
  return Elem{static_cast<std::uint8_t>(index)};
}

Elem FiniteField::from_integer(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint8_t>(r)};
}

std::vector<Elem> FiniteField::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (unsigned i = 0; i < q_; ++i) out.push_back(Elem{static_cast<std::uint8_t>(i)});
  return out;
}

Elem FiniteField::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  return Elem{inv_[a.v]};
}

Elem FiniteField::pow(Elem a, std::uint64_t exponent) const {
  Elem result = one();
  Elem base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Elem FiniteField::first_nonsquare() const {
  if (p_ == 2) throw std::domain_error("every element is a square in characteristic 2");
  for (unsigned a = 1; a < q_; ++a)
    if (!square_[a]) return Elem{static_cast<std::uint8_t>(a)};
  throw std::logic_error("no non-square found");
}

std::string FiniteField::format(Elem a) const {
  if (e_ == 1) return std::to_string(a.v);
  // z denotes the class of the modulus variable.
  auto d = digits(a.v, p_, e_);
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(e_) - 1; k >= 0; --k) {
    if (d[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0 || d[k] != 1) os << d[k];
    if (k >= 1) os << "z";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return "(" + os.str() + ")";
}

FieldEmbedding extend_field(const FiniteField& base, unsigned relative_degree) {
  if (relative_degree < 1) throw std::invalid_argument("relative degree must be >= 1");
  unsigned big = 1;
  for (unsigned k = 0; k < relative_degree; ++k) big *= base.size();
  FiniteField target = FiniteField::make(big);
  std::vector<Elem> image(base.size());
  if (base.degree() == 1) {
    for (unsigned i = 0; i < base.size(); ++i) image[i] = target.from_integer(i);
  } else {
    // Send z to a root of the base modulus inside the target.
    const auto& mod = base.modulus();
    Elem beta{};
    bool found = false;
    for (Elem x : target.elements()) {
      Elem acc = target.zero();
      for (auto it = mod.rbegin(); it != mod.rend(); ++it)
        acc = target.add(target.mul(acc, x), target.from_integer(*it));
      if (acc == target.zero()) {
        beta = x;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in the extension");
    const unsigned p = base.characteristic();
    for (unsigned i = 0; i < base.size(); ++i) {
      auto d = digits(i, p, base.degree());
      Elem acc = target.zero();
      for (auto it = d.rbegin(); it != d.rend(); ++it)
        acc = target.add(target.mul(acc, beta), target.from_integer(*it));
      image[i] = acc;
    }
  }
  return FieldEmbedding{base, std::move(target), relative_degree, std::move(image)};
}

}  // namespace ffc
