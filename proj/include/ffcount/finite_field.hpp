#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ffc {

/// An element of a FiniteField, stored by index. Index i encodes the residue
/// polynomial whose base-p digits (least significant first) are its
/// coefficients; 0 and 1 are the additive and multiplicative identities.
struct Elem {
  std::uint8_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// F_q with q = p^e <= 256, table driven. Extension fields are realised as
/// F_p[z]/(modulus) with a fixed monic irreducible modulus.
class FiniteField {
 public:
  /// F_q using the first monic irreducible of degree e (enumeration order).
  static FiniteField make(unsigned q);
  /// F_p[z]/(modulus); coefficients low to high, modulus must be monic and
  /// irreducible over F_p.
  static FiniteField with_modulus(unsigned p, std::vector<unsigned> modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  unsigned size() const { return q_; }
  /// Empty for prime fields.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem element(unsigned index) const;
  /// Image of an integer in the prime subfield.
  Elem from_integer(long long value) const;
  std::vector<Elem> elements() const;

  Elem add(Elem a, Elem b) const { return Elem{add_[a.v * q_ + b.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[a.v * q_ + b.v]}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t exponent) const;

  bool is_square(Elem a) const { return square_[a.v] != 0; }
  /// Smallest-index non-square; only defined for odd q.
  Elem first_nonsquare() const;
  /// The unique b with b^p = a.
  Elem pth_root(Elem a) const { return Elem{pth_root_[a.v]}; }

  std::string format(Elem a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  FiniteField(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned p_ = 0;
  unsigned e_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_, square_, pth_root_;
};

/// F_q inside F_{q^r}, with an explicit injective homomorphism.
struct FieldEmbedding {
  FiniteField base;
  FiniteField target;
  unsigned relative_degree = 1;
  std::vector<Elem> image;

  Elem map(Elem a) const { return image[a.v]; }
};

FieldEmbedding extend_field(const FiniteField& base, unsigned relative_degree);

/// Returns (p, e) with q = p^e, or throws if q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q);

bool is_prime(unsigned n);

}  // namespace ffc
