#include "ffcount/riemann_roch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ffc {

ClassModel ClassModel::from_descriptor(const CurveDescriptor& desc) {
  const int g = desc.genus();
  const int J = desc.class_count();
  ClassModel m(desc, J);
  if (g == 0) return m;
  if (g == 1) {
    // Only constants live in a degree-0 class, and only in the principal one.
    std::vector<int> row(static_cast<std::size_t>(J), 0);
    row[0] = 1;
    m.table_.push_back(std::move(row));
    if (desc.class_dims() && *desc.class_dims() != m.table_)
      throw std::invalid_argument("genus-1 class_dims must be 1 for the principal class and 0 otherwise");
    return m;
  }
  if (!desc.class_dims()) throw std::invalid_argument("genus >= 2 needs an explicit class_dims table");
  m.table_ = *desc.class_dims();

  const auto a = a_seq(desc, 2 * g - 2);
  for (int i = 0; i <= 2 * g - 2; ++i) {
    BigInt sum = 0;
    for (int j = 0; j < J; ++j) {
      const int d = m.table_[i][j];
      if (d < std::max(0, i + 1 - g) || 2 * d > i + 2)
        throw std::invalid_argument("class_dims entry violates Riemann-Roch/Clifford bounds at degree " +
                                    std::to_string(i));
      sum += ipow(desc.q(), d);
    }
    if (sum - J != (desc.q() - 1) * a[i])
      throw std::invalid_argument("class_dims fails sum_j q^dims - J = (q-1) a(i) at degree " + std::to_string(i));
  }
  if (m.table_[0][0] != 1)
    throw std::invalid_argument("class 0 must be principal (dimension 1 in degree 0)");
  for (int i = 0; i <= 2 * g - 2; ++i)
    for (int n = 1; n <= 3; ++n)
      if (!lemma5_check(m, i, n).holds)
        throw std::invalid_argument("class_dims fails the reflection identity at degree " + std::to_string(i));
  return m;
}

int ClassModel::dims(int j, int i) const {
  if (j < 0 || j >= J_) throw std::out_of_range("class index out of range");
  const int g = genus();
  if (i < 0) return 0;
  if (i >= 2 * g - 1) return i + 1 - g;
  return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int l_dim(const ClassModel& model, int j, int i, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return n * model.dims(j, i);
}

BigInt lambda(const ClassModel& model, int j, int i, int n) { return ipow(model.q(), l_dim(model, j, i, n)) - 1; }

BigInt lambda_class_sum(const ClassModel& model, int i, int n) {
  const int g = model.genus();
  if (i >= 2 * g - 1) return BigInt(model.class_count()) * (ipow(model.q(), n * (i + 1 - g)) - 1);
  BigInt s = 0;
  for (int j = 0; j < model.class_count(); ++j) s += lambda(model, j, i, n);
  return s;
}

std::vector<std::vector<RationalFunction>> genus0_basis(const PolyRing& R, const Divisor& a, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Poly num = R.one();
  Poly den = R.one();
  for (const auto& [v, c] : a.terms()) {
    if (v.is_infinity()) continue;
    // f has ord_v(f) >= -c, so f * P^c must be integral at v.
    if (c > 0)
      den = R.mul(den, R.pow(v.poly(), static_cast<unsigned>(c)));
    else
      num = R.mul(num, R.pow(v.poly(), static_cast<unsigned>(-c)));
  }
  std::vector<RationalFunction> scalar;
  for (std::int64_t k = 0; k <= a.degree(); ++k)
    scalar.push_back(RationalFunction::make(R, R.mul(num, R.monomial(R.field().one(), static_cast<int>(k))), den));
  std::vector<std::vector<RationalFunction>> out;
  const RationalFunction zero = RationalFunction::polynomial(R, Poly{});
  for (int c = 0; c < n; ++c)
    for (const auto& f : scalar) {
      std::vector<RationalFunction> vec(static_cast<std::size_t>(n), zero);
      vec[static_cast<std::size_t>(c)] = f;
      out.push_back(std::move(vec));
    }
  return out;
}

bool in_riemann_roch_space(const PolyRing& R, const Divisor& a, const RationalFunction& f) {
  if (f.is_zero()) return true;
  std::set<Place> support{Place::infinity()};
  for (const auto& [v, c] : a.terms()) support.insert(v);
  for (const Poly* part : {&f.num(), &f.den()})
    for (const auto& [p, mult] : R.factor(*part).factors) support.insert(Place::finite(R, p));
  for (const Place& v : support)
    if (ord_at(R, v, f).value() < -a.coefficient(v)) return false;
  return true;
}

Lemma4Result lemma4_check(const ClassModel& model, int i, int n) {
  const int g = model.genus();
  if (g < 1 || i < 0 || i > 2 * g - 2) throw std::invalid_argument("lemma4_check needs g >= 1 and 0 <= i <= 2g-2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::int64_t q = model.q();
  const BigInt ai = a_seq(model.descriptor(), i)[static_cast<std::size_t>(i)];
  Lemma4Result r;
  r.lhs = lambda_class_sum(model, i, n);
  r.lhs_sq = r.lhs * r.lhs;
  const BigInt base = BigInt(n) * (q - 1) * ai;
  r.rhs_sq = base * base * ipow(q, static_cast<std::int64_t>(n - 1) * (i + 2));
  r.holds = r.lhs_sq <= r.rhs_sq;
  r.half_exponent_holds = r.lhs_sq <= base * base * ipow(q, static_cast<std::int64_t>(n - 1) * (i + 1));
  return r;
}

Lemma5Result lemma5_check(const ClassModel& model, int i, int n) {
  const int g = model.genus();
  if (g < 1 || i < 0 || i > 2 * g - 2) throw std::invalid_argument("lemma5_check needs g >= 1 and 0 <= i <= 2g-2");
  const Rational scale = qpow(model.q(), static_cast<std::int64_t>(n) * (i + 1 - g));
  Lemma5Result r;
  r.lhs = Rational(lambda_class_sum(model, i, n)) - model.class_count() * (scale - 1);
  r.rhs = scale * Rational(lambda_class_sum(model, 2 * g - 2 - i, n));
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace ffc
