#pragma once

#include "ffcount/finite_field.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ffc {

/// Univariate polynomial over a finite field; coefficient i multiplies T^i.
/// Always canonical: no trailing zero coefficients, the zero polynomial is
/// empty. Arithmetic lives in PolyRing, which carries the field.
class Poly {
 public:
  using Coeffs = boost::container::small_vector<Elem, 12>;

  Poly() = default;
  explicit Poly(Coeffs coeffs) : c_(std::move(coeffs)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
  Elem operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Elem{0};
  }
  std::span<const Elem> coeffs() const { return {c_.data(), c_.size()}; }
  bool is_one() const { return c_.size() == 1 && c_[0] == Elem{1}; }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Orders by degree, then coefficients from the top down; this is the
  /// numeric order of PolyRing::index_of.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Elem{0}) c_.pop_back();
  }
  Coeffs c_;
};

/// f = unit * prod factors[i].first ^ factors[i].second, factors monic.
struct Factorization {
  Elem unit{};
  std::vector<std::pair<Poly, int>> factors;
};

/// f = unit * squarefree * cofactor^2 with squarefree and cofactor monic.
struct SquarefreePart {
  Elem unit{};
  Poly squarefree;
  Poly cofactor;
};

class PolyRing {
 public:
  explicit PolyRing(FiniteField field) : F_(std::move(field)) {}

  const FiniteField& field() const { return F_; }
  unsigned q() const { return F_.size(); }

  Poly zero() const { return {}; }
  Poly one() const { return constant(F_.one()); }
  Poly constant(Elem c) const;
  /// c * T^degree.
  Poly monomial(Elem c, int degree) const;
  Poly variable() const { return monomial(F_.one(), 1); }
  /// Integer coefficients (low to high) mapped into the prime subfield.
  Poly from_ints(std::initializer_list<long long> coeffs) const;
  Poly from_ints(std::span<const long long> coeffs) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, Elem c) const;
  Poly pow(const Poly& a, unsigned exponent) const;
  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  /// a / b, throwing if b does not divide a.
  Poly div_exact(const Poly& a, const Poly& b) const;
  bool divides(const Poly& d, const Poly& a) const;
  /// Monic gcd. Throws std::domain_error when both inputs are zero.
  Poly gcd(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;
  Poly derivative(const Poly& a) const;
  Elem eval(const Poly& a, Elem x) const;

  /// Polynomial with index idx = sum c_k q^k.
  Poly from_index(std::uint64_t idx) const;
  std::uint64_t index_of(const Poly& a) const;
  /// All q^(max_deg+1) polynomials of degree <= max_deg, lexicographic by
  /// coefficient vector with constants first. max_deg = -1 gives {0}.
  std::vector<Poly> enumerate(int max_deg) const;
  std::vector<Poly> monic_of_degree(int degree) const;

  /// Throws std::invalid_argument for constants.
  bool is_irreducible(const Poly& f) const;
  /// Trial division by monic polynomials of increasing degree.
  Factorization factor(const Poly& f) const;
  /// Squarefree decomposition via gcd(f, f') with p-th root extraction for
  /// the part killed by differentiation. Pairs are (squarefree factor,
  /// multiplicity); factors are monic and pairwise coprime.
  std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) const;
  /// Throws std::invalid_argument for the zero polynomial.
  SquarefreePart squarefree_part(const Poly& f) const;
  bool is_squarefree(const Poly& f) const;
  /// g with g^p = f; requires f' = 0.
  Poly pth_root(const Poly& f) const;

  std::vector<Poly> monic_divisors(const Poly& f) const;

  std::string format(const Poly& f, char var = 'T') const;

 private:
  FiniteField F_;
};

/// Coefficients mapped through an embedding F_q -> F_{q^r}.
Poly map_coefficients(const Poly& f, const FieldEmbedding& emb);

}  // namespace ffc
