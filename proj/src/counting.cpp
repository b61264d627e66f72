#include "ffcount/counting.hpp"

#include "ffcount/bivariate.hpp"
#include "ffcount/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace ffc {

bool within_budget(std::int64_t q, std::int64_t exponent, std::uint64_t budget) {
  if (exponent < 0) return true;
  return ipow(q, exponent) <= BigInt(budget);
}

namespace {

// All polynomials of degree <= max_deg, addressed by enumeration index.
class PolyIndex {
 public:
  PolyIndex(const PolyRing& R, int max_deg) : R_(R) {
    for (Poly& f : R.enumerate(max_deg)) {
      degree_.push_back(f.degree());
      monic_.push_back(!f.is_zero() && f.lead() == R.field().one());
      polys_.push_back(std::move(f));
    }
    const std::size_t P = polys_.size();
    if (P <= kTableLimit) {
      table_.assign(P * P, 0);
      for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = a; b < P; ++b) {
          const std::uint32_t g = compute_gcd(a, b);
          table_[a * P + b] = g;
          table_[b * P + a] = g;
        }
    }
  }

  std::size_t size() const { return polys_.size(); }
  int degree(std::uint32_t i) const { return degree_[i]; }
  bool monic(std::uint32_t i) const { return monic_[i]; }
  const Poly& poly(std::uint32_t i) const { return polys_[i]; }

  // Index of the monic gcd; gcd(0, 0) = 0.
  std::uint32_t gcd(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[a * polys_.size() + b];
    return compute_gcd(a, b);
  }

 private:
  static constexpr std::size_t kTableLimit = 1024;

  std::uint32_t compute_gcd(std::size_t a, std::size_t b) const {
    if (a == 0 && b == 0) return 0;
    return static_cast<std::uint32_t>(R_.index_of(R_.gcd(polys_[a], polys_[b])));
  }

  const PolyRing& R_;
  std::vector<Poly> polys_;
  std::vector<int> degree_;
  std::vector<bool> monic_;
  std::vector<std::uint32_t> table_;
};

struct VectorSpec {
  int length = 0;
  int height = 0;
  bool normalized = true;      // first nonzero coordinate monic
  bool lead_nonzero = false;   // coordinate 0 must be nonzero
};

// Calls leaf(coords) for every coprime vector of exact max degree `height`.
// Work is split over the choices for coordinate 0.
template <class Leaf>
void for_each_coprime_vector(const PolyIndex& P, const VectorSpec& spec, unsigned workers, Leaf make_leaf_sum,
                             std::vector<BigInt>& partials) {
  std::vector<std::uint32_t> all, first_nonzero;
  for (std::uint32_t i = 0; i < P.size(); ++i) {
    all.push_back(i);
    if (i == 0 || P.monic(i)) first_nonzero.push_back(i);
  }
  std::vector<std::uint32_t> first_choices;
  for (std::uint32_t i : spec.normalized ? first_nonzero : all)
    if (!(spec.lead_nonzero && i == 0)) first_choices.push_back(i);

  partials.assign(std::max(1U, workers), BigInt(0));
  parallel_for(first_choices.size(), workers, [&](unsigned w, std::size_t idx) {
    auto leaf = make_leaf_sum();
    std::vector<std::uint32_t> coords(static_cast<std::size_t>(spec.length));
    std::uint64_t local = 0;
    // Explicit recursion on (position, running gcd, running max degree).
    auto rec = [&](auto&& self, int pos, std::uint32_t g, int maxdeg) -> void {
      if (pos == spec.length) {
        if (g == 1 && maxdeg == spec.height) local += leaf(coords);
        return;
      }
      const auto& choices = (spec.normalized && g == 0) ? first_nonzero : all;
      for (std::uint32_t c : choices) {
        coords[pos] = c;
        self(self, pos + 1, P.gcd(g, c), std::max(maxdeg, P.degree(c)));
      }
    };
    const std::uint32_t c0 = first_choices[idx];
    coords[0] = c0;
    rec(rec, 1, P.gcd(0, c0), P.degree(c0));
    partials[w] += local;
  });
}

BigInt sum_partials(const std::vector<BigInt>& partials) {
  BigInt s = 0;
  for (const BigInt& p : partials) s += p;
  return s;
}

BigInt count_rational(std::int64_t q, int n, int m, const EnumerationOptions& opt, bool normalized) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 0) return 0;
  if (!within_budget(q, static_cast<std::int64_t>(n) * (m + 1), opt.budget))
    throw Refusal("brute force needs q^{n(m+1)} = " + ipow(q, static_cast<std::int64_t>(n) * (m + 1)).str() +
                  " candidate tuples, over the budget of " + std::to_string(opt.budget));
  const PolyRing R(FiniteField::make(static_cast<unsigned>(q)));
  const PolyIndex P(R, m);
  std::vector<BigInt> partials;
  for_each_coprime_vector(P, VectorSpec{n, m, normalized, false}, opt.workers,
                          [] { return [](const std::vector<std::uint32_t>&) { return std::uint64_t{1}; }; },
                          partials);
  return sum_partials(partials);
}

}  // namespace

BigInt brute_count_rational(std::int64_t q, int n, int m, const EnumerationOptions& opt) {
  return count_rational(q, n, m, opt, true);
}

BigInt brute_count_rational_unnormalized(std::int64_t q, int n, int m, const EnumerationOptions& opt) {
  return count_rational(q, n, m, opt, false);
}

std::vector<Rational> CountResult::error_parts() const {
  const Rational qm1(q - 1);
  return {-b_sum / qm1, -zeta_tail / qm1, window / qm1};
}

CountResult moebius_count(const ClassModel& model, int n, int m) {
  if (n < 2) throw std::invalid_argument("moebius_count needs n >= 2");
  const CurveDescriptor& desc = model.descriptor();
  const std::int64_t q = desc.q();
  const int g = desc.genus();
  const BigInt J = desc.J();
  CountResult r;
  r.q = q;
  r.genus = g;
  r.J = J;
  r.n = n;
  r.m = m;
  if (m < 0) {
    r.N = 0;
    r.precount = 0;
    return r;
  }
  const auto b = b_seq(desc, m);
  BigInt pre = 0;
  for (int l = 0; l <= m; ++l) pre += b[l] * lambda_class_sum(model, m - l, n);
  if (pre % (q - 1) != 0) throw ConsistencyError("(q-1) does not divide the Moebius pre-count");
  r.precount = pre;
  r.N = pre / (q - 1);
  if (r.N < 0) throw ConsistencyError("negative point count");

  const Rational zn = zeta_value(desc, n);
  const Rational scale = qpow(q, static_cast<std::int64_t>(n) * (m + 1 - g));
  Rational head = 0;
  BigInt bsum = 0;
  for (int l = 0; l <= m; ++l) {
    head += Rational(b[l]) * qpow(q, -static_cast<std::int64_t>(n) * l);
    bsum += b[l];
  }
  r.zeta_main = Rational(J) * scale / zn;
  r.b_sum = Rational(J * bsum);
  r.zeta_tail = Rational(J) * scale * (1 / zn - head);
  r.window = 0;
  for (int i = 0; i <= std::min(m, 2 * g - 2); ++i) {
    const Rational full = Rational(J) * (qpow(q, static_cast<std::int64_t>(n) * (i + 1 - g)) - 1);
    r.window += Rational(b[m - i]) * (Rational(lambda_class_sum(model, i, n)) - full);
  }
  if (r.zeta_main - r.b_sum - r.zeta_tail + r.window != Rational(pre))
    throw ConsistencyError("decomposition does not reproduce the Moebius pre-count");
  r.main_term = r.zeta_main / (q - 1);
  return r;
}

ErrorDecompositionReport error_decomposition(const ClassModel& model, const CountResult& res) {
  const int g = model.genus();
  const int m = res.m;
  const int n = res.n;
  if (m < 2 * g - 1) throw std::domain_error("the decomposition is stated for m >= 2g-1 only");
  const CurveDescriptor& desc = model.descriptor();
  const std::int64_t q = desc.q();
  const Rational J(desc.J());
  const auto a = a_seq(desc, m);
  const auto b = b_seq(desc, m);

  ErrorDecompositionReport rep;
  rep.zeta_tail_piece = -res.zeta_tail;
  rep.b_sum_piece = -res.b_sum;
  rep.window_piece = res.window;
  rep.window_reflected = 0;
  rep.window_abs_bound = 0;
  rep.window_bound_reflected = 0;
  bool nonneg = true;
  for (int i = 0; i <= 2 * g - 2; ++i) {
    const Rational qi = qpow(q, static_cast<std::int64_t>(n) * (i + 1 - g));
    const Rational excess = Rational(lambda_class_sum(model, i, n)) - J * (qi - 1);
    if (excess < 0) nonneg = false;
    rep.window_reflected += Rational(b[m - i]) * qi * Rational(lambda_class_sum(model, 2 * g - 2 - i, n));
    rep.window_abs_bound += Rational(a[m - i]) * excess;
    const int ip = i;  // i' in the reflected sum
    rep.window_bound_reflected += Rational(a[m + ip - 2 * g + 2]) *
                                  qpow(q, static_cast<std::int64_t>(n) * (g - 1 - ip)) *
                                  Rational(lambda_class_sum(model, ip, n));
  }
  BigInt asum = 0;
  Rational ahead = 0;
  for (int l = 0; l <= m; ++l) {
    asum += a[l];
    ahead += Rational(a[l]) * qpow(q, -static_cast<std::int64_t>(n) * l);
  }
  rep.b_sum_abs_bound = J * Rational(asum);
  const Rational scale = qpow(q, static_cast<std::int64_t>(n) * (m + 1 - g));
  rep.zeta_tail_abs_bound = J * scale * (zeta_value(desc, n) - ahead);
  rep.total = Rational(res.q - 1) * (Rational(res.N) - res.main_term);
  rep.sum_identity = rep.total == rep.zeta_tail_piece + rep.b_sum_piece + rep.window_piece;
  rep.reflection_identity =
      rep.window_reflected == rep.window_piece && rep.window_bound_reflected == rep.window_abs_bound;
  auto absr = [](const Rational& x) { return x < 0 ? Rational(-x) : x; };
  rep.bounds_hold = nonneg && absr(rep.window_piece) <= rep.window_abs_bound &&
                    absr(res.b_sum) <= rep.b_sum_abs_bound && absr(res.zeta_tail) <= rep.zeta_tail_abs_bound;
  return rep;
}

BigInt count_degree_d_P1(std::int64_t q, int d, int m, const EnumerationOptions& opt) {
  if (d < 1 || d > 3) throw std::invalid_argument("count_degree_d_P1 supports 1 <= d <= 3");
  if (d == 1) return brute_count_rational(q, 2, m, opt);
  if (m < 0) return 0;
  if (!within_budget(q, static_cast<std::int64_t>(d + 1) * (m + 1), opt.budget))
    throw Refusal("degree-d enumeration needs q^{(d+1)(m+1)} = " +
                  ipow(q, static_cast<std::int64_t>(d + 1) * (m + 1)).str() + " candidates, over the budget of " +
                  std::to_string(opt.budget));
  const PolyRing R(FiniteField::make(static_cast<unsigned>(q)));
  // d <= 3, so the only prime dividing d is d itself (or 2 for d = 2).
  const FieldEmbedding emb = extend_field(R.field(), static_cast<unsigned>(d));
  const PolyRing E(emb.target);
  const PolyIndex P(R, m);
  std::vector<BigInt> partials;
  for_each_coprime_vector(
      P, VectorSpec{d + 1, m, true, true}, opt.workers,
      [&] {
        return [&](const std::vector<std::uint32_t>& coords) -> std::uint64_t {
          YPoly f;
          for (int i = 0; i <= d; ++i) f.coeffs.push_back(P.poly(coords[static_cast<std::size_t>(d - i)]));
          if (has_root(R, f)) return 0;
          if (has_root(E, map_coefficients(f, emb))) return 0;
          return static_cast<std::uint64_t>(distinct_root_count(R, f));
        };
      },
      partials);
  return sum_partials(partials);
}

BigInt count_quadratic_generators(const PolyRing& R, const QuadraticFieldDesc& K, int m,
                                  const EnumerationOptions& opt) {
  if (R.field().characteristic() == 2) throw Refusal("discriminant matching needs odd q");
  if (m < 0) return 0;
  const std::int64_t q = R.q();
  if (!within_budget(q, 3 * static_cast<std::int64_t>(m + 1), opt.budget))
    throw Refusal("generator enumeration needs q^{3(m+1)} = " + ipow(q, 3 * static_cast<std::int64_t>(m + 1)).str() +
                  " candidates, over the budget of " + std::to_string(opt.budget));
  const PolyIndex P(R, m);
  const Poly uD = R.scale(K.D, K.u);
  const Elem four = R.field().from_integer(4);
  std::vector<BigInt> partials;
  for_each_coprime_vector(
      P, VectorSpec{3, m, true, true}, opt.workers,
      [&] {
        return [&](const std::vector<std::uint32_t>& c) -> std::uint64_t {
          const Poly& a = P.poly(c[0]);
          const Poly& b = P.poly(c[1]);
          const Poly& cc = P.poly(c[2]);
          const Poly disc = R.sub(R.mul(b, b), R.scale(R.mul(a, cc), four));
          if (disc.is_zero() || !R.divides(K.D, disc)) return 0;
          return ratio_is_square(R, disc, uD) ? 1 : 0;
        };
      },
      partials);
  return sum_partials(partials);
}

BigInt brute_count_quadratic_P1(const PolyRing& R, const QuadraticFieldDesc& K, int m,
                                const EnumerationOptions& opt) {
  BigInt total = 2 * count_quadratic_generators(R, K, m, opt);
  if (m >= 0 && m % 2 == 0) total += brute_count_rational(R.q(), 2, m / 2, opt);
  return total;
}

AssemblyResult assemble_N_quadratic(std::int64_t q, int n, int m, unsigned workers) {
  if (q % 2 == 0) throw Refusal("the quadratic assembler needs odd q");
  if (m > 2)
    throw Refusal("m > 2 would need fields with deg D > 4, i.e. genus >= 2, which have no exact class model");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  AssemblyResult out;
  out.q = q;
  out.n = n;
  out.m = m;
  out.N = 0;
  if (m < 1) return out;  // deg D <= 2m = 0 admits no field
  const PolyRing R(FiniteField::make(static_cast<unsigned>(q)));
  const auto fields = enumerate_quadratic_fields(R, 2 * m, workers);
  BigInt correction = 0;
  if (m % 2 == 0) correction = moebius_count(ClassModel::from_descriptor(CurveDescriptor::rational(q)), n, m / 2).N;
  std::vector<AssemblyRow> rows(fields.size());
  parallel_for(fields.size(), workers, [&](unsigned, std::size_t i) {
    const auto& K = fields[i];
    AssemblyRow row;
    row.D = R.format(K.D);
    row.twisted = K.twisted;
    row.genus = K.genus;
    row.J = K.descriptor.J();
    row.N_K = moebius_count(ClassModel::from_descriptor(K.descriptor), n, m).N;
    row.correction = correction;
    row.contribution = row.N_K - correction;
    if (row.contribution < 0) throw ConsistencyError("negative field contribution for D = " + row.D);
    rows[i] = std::move(row);
  });
  for (const auto& row : rows) out.N += row.contribution;
  out.rows = std::move(rows);
  return out;
}

SchanuelSumReport schanuel_sum_partial(std::int64_t q, int n, int degD_max, unsigned workers) {
  if (n <= 4) throw Refusal("the sum over quadratic fields is only known to converge for n > d + 2 = 4");
  if (q % 2 == 0) throw Refusal("quadratic field enumeration needs odd q");
  const PolyRing R(FiniteField::make(static_cast<unsigned>(q)));
  const auto fields = enumerate_quadratic_fields(R, degD_max, workers);
  SchanuelSumReport rep;
  rep.q = q;
  rep.n = n;
  rep.degD_max = degD_max;
  rep.partial_sum = 0;
  rep.increments.assign(static_cast<std::size_t>(degD_max), Rational(0));
  rep.field_counts.assign(static_cast<std::size_t>(degD_max), 0);
  rep.genus_sums.assign(static_cast<std::size_t>(quadratic_genus(degD_max) + 1), Rational(0));
  for (const auto& K : fields) {
    const Rational S = schanuel_constant(K.descriptor, n);
    rep.partial_sum += S;
    rep.increments[static_cast<std::size_t>(K.D.degree() - 1)] += S;
    rep.field_counts[static_cast<std::size_t>(K.D.degree() - 1)] += 1;
    rep.genus_sums[static_cast<std::size_t>(K.genus)] += S;
  }
  for (std::size_t k = 0; k + 1 < rep.increments.size(); ++k)
    rep.increment_ratios.push_back(
        static_cast<double>(rep.increments[k + 1].convert_to<HighPrecision>() / rep.increments[k].convert_to<HighPrecision>()));
  return rep;
}

std::vector<ReportLine> corollary_bounds_report(std::int64_t q, int m_max, unsigned workers) {
  std::vector<ReportLine> out;
  const ClassModel rational = ClassModel::from_descriptor(CurveDescriptor::rational(q));
  for (int m = 0; m <= m_max; ++m) {
    const BigInt N = moebius_count(rational, 2, m).N;
    out.push_back({"genus0_n2_ratio", "m=" + std::to_string(m),
                   to_string(Rational(N) / Rational(ipow(q, 2 * m)))});
  }
  if (q % 2 == 1) {
    const PolyRing R(FiniteField::make(static_cast<unsigned>(q)));
    for (int m = 0; m <= std::min(m_max, 2); ++m) {
      const EnumerationOptions opt{kDefaultBudget, workers};
      if (!within_budget(q, 3 * static_cast<std::int64_t>(m + 1), opt.budget)) break;
      const BigInt N2 = count_degree_d_P1(q, 2, m, opt);
      const BigInt N3 = moebius_count(rational, 3, m).N;
      out.push_back({"degree2_vs_n3", "m=" + std::to_string(m),
                     to_string(Rational(N2) / Rational(2 * N3))});
    }
    const int deg_cap = std::min(2 * m_max + 2, 6);
    const auto fields = enumerate_quadratic_fields(R, deg_cap, workers);
    for (int m = 0; 2 * m + 2 <= deg_cap; ++m) {
      std::size_t count = 0;
      for (const auto& K : fields)
        if (K.genus <= m) ++count;
      std::ostringstream os;
      os << count << " fields; q^{3m} = " << ipow(q, 3 * m);
      out.push_back({"fields_genus_at_most_m", "m=" + std::to_string(m), os.str()});
    }
  }
  return out;
}

}  // namespace ffc
