#pragma once

#include "ffcount/arith.hpp"
#include "ffcount/poly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffc {

/// A place of F_q(T): a monic irreducible polynomial, or the place at
/// infinity (degree 1).
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Validates that p is monic and irreducible.
  static Place finite(const PolyRing& R, Poly p);

  bool is_infinity() const { return !poly_.has_value(); }
  const Poly& poly() const;
  int degree() const { return poly_ ? poly_->degree() : 1; }

  /// Finite places by polynomial order, infinity last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) = default;

 private:
  Place() = default;
  explicit Place(Poly p) : poly_(std::move(p)) {}
  std::optional<Poly> poly_;
};

/// Value of ord_v: an integer or +infinity (the order of 0).
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  explicit Valuation(std::int64_t v) : v_(v) {}

  bool is_infinite() const { return !v_.has_value(); }
  std::int64_t value() const;

  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) = default;

 private:
  Valuation() = default;
  std::optional<std::int64_t> v_;
};

/// num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  static RationalFunction make(const PolyRing& R, const Poly& num, const Poly& den);
  static RationalFunction polynomial(const PolyRing& R, const Poly& num) { return make(R, num, R.one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend auto operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

 private:
  RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
  Poly num_;
  Poly den_;
};

RationalFunction multiply(const PolyRing& R, const RationalFunction& a, const RationalFunction& b);
RationalFunction add(const PolyRing& R, const RationalFunction& a, const RationalFunction& b);

/// Finite-support map Place -> integer; zero coefficients are never stored.
class Divisor {
 public:
  void add(const Place& v, std::int64_t coeff);
  std::int64_t coefficient(const Place& v) const;
  std::int64_t degree() const;
  const std::map<Place, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Place, std::int64_t> terms_;
};

/// Exact rational height m/(d*e), kept in lowest terms.
struct HeightValue {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  static HeightValue make(std::int64_t num, std::int64_t den);
  Rational as_rational() const { return Rational(BigInt(numerator), BigInt(denominator)); }
  friend bool operator==(const HeightValue&, const HeightValue&) = default;
};

std::string to_string(const HeightValue& h);

/// Multiplicity of the place in a nonzero polynomial.
std::int64_t multiplicity(const PolyRing& R, const Place& v, const Poly& f);

Valuation ord_at(const PolyRing& R, const Place& v, const RationalFunction& f);
Valuation ord_vec(const PolyRing& R, const Place& v, std::span<const RationalFunction> x);

/// div(x) = sum_v ord_v(x) v for a nonzero vector. Throws for the zero
/// vector.
Divisor divisor_of_vector(const PolyRing& R, std::span<const RationalFunction> x);

/// h_k(x) = -deg div(x).
std::int64_t height_relative(const PolyRing& R, std::span<const RationalFunction> x);

/// Coprime polynomial representative of the projective point, first nonzero
/// coordinate monic. Throws for the zero vector.
std::vector<Poly> normalize_projective(const PolyRing& R, std::span<const RationalFunction> x);

/// Second route to h_k: max coordinate degree of the coprime representative.
std::int64_t height_from_coprime_representative(const PolyRing& R, std::span<const RationalFunction> x);

/// h = h_k(x)/e for a point over a field of effective degree e.
HeightValue height_absolute(const PolyRing& R, std::span<const RationalFunction> x, std::int64_t effective_degree);

/// Absolute height from a relative height in a field of effective degree e.
HeightValue absolute_from_relative(std::int64_t relative_height, std::int64_t effective_degree);

/// h_K(P) for P defined over k, measured in K with [K:k] = d and q_K = q_k.
std::int64_t relative_height_in_extension(std::int64_t relative_height_k, std::int64_t degree);

/// Places of the given degree: monic irreducibles, plus infinity for deg 1.
std::vector<Place> enumerate_places(const PolyRing& R, int degree);

/// Number of places of F_q(T) of the given degree, via the Moebius
/// count of monic irreducibles (plus infinity in degree 1).
BigInt place_count(std::int64_t q, int degree);

}  // namespace ffc
