#pragma once

#include "ffcount/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffc {

/// dims[i][j] = l(a_j + i*a_0, 1) for degree i in 0..2g-2 and class j.
using ClassDimsTable = std::vector<std::vector<int>>;

/// Abstract function field as seen by the zeta and counting layers.
class CurveDescriptor {
 public:
  /// Validates L(0) = 1, deg L = 2g, the functional equation
  /// c_{2g-i} = q^{g-i} c_i, and J = L(1) >= 1. Class-dimension tables are
  /// shape-checked here and validated against Riemann-Roch in ClassModel.
  static CurveDescriptor make(std::int64_t q, int genus, std::vector<BigInt> L,
                              std::optional<ClassDimsTable> class_dims = std::nullopt);
  static CurveDescriptor rational(std::int64_t q) { return make(q, 0, {BigInt(1)}); }

  std::int64_t q() const { return q_; }
  int genus() const { return g_; }
  const std::vector<BigInt>& L() const { return L_; }
  const BigInt& J() const { return J_; }
  const std::optional<ClassDimsTable>& class_dims() const { return dims_; }

  /// J as a machine integer; throws if it does not fit the class-model range.
  int class_count() const;

 private:
  CurveDescriptor() = default;
  std::int64_t q_ = 0;
  int g_ = 0;
  std::vector<BigInt> L_;
  BigInt J_;
  std::optional<ClassDimsTable> dims_;
};

/// L(x) for rational x.
Rational eval_L(const CurveDescriptor& desc, const Rational& x);

/// Z(x) = L(x)/((1-x)(1-qx)); x must avoid the poles 1 and 1/q.
Rational eval_Z(const CurveDescriptor& desc, const Rational& x);

/// Coefficients of Z(t): counts of effective divisors by degree.
std::vector<BigInt> a_seq(const CurveDescriptor& desc, int l_max);

/// Coefficients of 1/Z(t): the Moebius function summed by degree.
std::vector<BigInt> b_seq(const CurveDescriptor& desc, int l_max);

/// zeta(s) = Z(q^{-s}) for integer s >= 2.
Rational zeta_value(const CurveDescriptor& desc, std::int64_t s);

/// S = J / ((q-1) zeta(n) q^{n(g-1)}).
Rational schanuel_constant(const CurveDescriptor& desc, std::int64_t n);

struct EulerProductResult {
  std::int64_t q = 0;
  std::int64_t s = 0;
  int cutoff = 0;
  /// Present when the exact product is small enough to form.
  std::optional<Rational> exact;
  HighPrecision value;
  Rational closed_form;
  /// sum_{l > D} a(l) q^{-sl}; 0 <= zeta - product <= tail_bound.
  Rational tail_bound;
  HighPrecision difference;  // closed_form - value
  bool within_certificate = false;
};

/// Product over places of F_q(T) of degree <= D of (1 - q^{-s deg v})^{-1}.
EulerProductResult euler_product_truncation(std::int64_t q, std::int64_t s, int cutoff);

struct HasseWeilReport {
  bool functional_equation = false;
  bool lower_bound = false;  // (sqrt q - 1)^{2g} <= J
  bool upper_bound = false;  // J <= (sqrt q + 1)^{2g}
  bool c1_bound = false;     // |c_1| <= 2g sqrt q
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Exact checks; every square root is removed by squaring.
HasseWeilReport hasse_weil_check(const CurveDescriptor& desc);

/// Same check for raw data, so invalid descriptors can be diagnosed.
HasseWeilReport hasse_weil_check(std::int64_t q, int genus, const std::vector<BigInt>& L);

/// (sqrt q + sign)^{2g} = A + sign * B sqrt q, returned as (A, B).
std::pair<BigInt, BigInt> sqrt_binomial(std::int64_t q, int genus);

class DescriptorParseError : public std::runtime_error {
 public:
  DescriptorParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented "key = value" text. Keys: q, g, L_coeffs (comma list),
/// class_dims (semicolon-separated per-degree comma lists). '#' starts a
/// comment. Unknown or repeated keys are rejected.
CurveDescriptor parse_descriptor(const std::string& text);
std::string format_descriptor(const CurveDescriptor& desc);

}  // namespace ffc
