#pragma once

#include "ffcount/arith.hpp"
#include "ffcount/quadratic_fields.hpp"
#include "ffcount/riemann_roch.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ffc {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// q^{count} as a double-free check against a budget; true iff within it.
bool within_budget(std::int64_t q, std::int64_t exponent, std::uint64_t budget);

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
};

/// Projective points of P^{n-1}(F_q(T)) of relative height exactly m, by
/// enumerating coprime polynomial vectors of max degree m with the first
/// nonzero coordinate monic. Refuses when q^{n(m+1)} exceeds the budget.
BigInt brute_count_rational(std::int64_t q, int n, int m, const EnumerationOptions& opt = {});

/// Same enumeration without the monic normalisation; equals (q-1) times
/// brute_count_rational. Used as a cross-check of the scalar bookkeeping.
BigInt brute_count_rational_unnormalized(std::int64_t q, int n, int m, const EnumerationOptions& opt = {});

/// Exact count with its decomposition. With T1..T4 as below,
/// (q-1) N = T1 - T2 - T3 + T4 and main_term = T1/(q-1) = S q^{nm}.
struct CountResult {
  std::int64_t q = 0;
  int genus = 0;
  BigInt J;
  int n = 0;
  int m = 0;
  int d = 1;
  BigInt N;
  BigInt precount;     // (q-1) N before division
  Rational main_term;  // S q^{nm}
  Rational zeta_main;  // T1 = J q^{n(m+1-g)} / zeta(n)
  Rational b_sum;      // T2 = J sum_{l<=m} b(l)
  Rational zeta_tail;  // T3 = J sum_{l>m} b(l) q^{n(m-l+1-g)}
  Rational window;     // T4 = sum over i = m-l in 0..min(m,2g-2) of b(l) E(i)

  /// -T2/(q-1), -T3/(q-1), T4/(q-1): N = main_term + sum of these.
  std::vector<Rational> error_parts() const;
};

/// Moebius inversion over the class model:
/// (q-1) N = sum_{l=0}^m b(l) sum_j lambda(a_j + (m-l) a_0, n).
/// Throws ConsistencyError if (q-1) does not divide the sum or the
/// decomposition does not reproduce it.
CountResult moebius_count(const ClassModel& model, int n, int m);

struct ErrorDecompositionReport {
  Rational zeta_tail_piece;       // -T3
  Rational b_sum_piece;           // -T2
  Rational window_piece;          // T4, direct
  Rational window_reflected;      // T4 via the reflection identity
  Rational window_abs_bound;      // sum_i a(m-i) E(i) >= |T4|
  Rational window_bound_reflected;  // same bound, reflected form
  Rational b_sum_abs_bound;       // J sum_{l<=m} a(l) >= |T2|
  Rational zeta_tail_abs_bound;   // J sum_{l>m} a(l) q^{n(m-l+1-g)} >= |T3|
  Rational total;                 // (q-1)(N - S q^{nm})
  bool sum_identity = false;
  bool reflection_identity = false;
  bool bounds_hold = false;
  bool passed() const { return sum_identity && reflection_identity && bounds_hold; }
};

/// Requires m >= 2g-1.
ErrorDecompositionReport error_decomposition(const ClassModel& model, const CountResult& result);

/// N_k(2,d,m) on F_q(T) for d <= 3: sum over projective coefficient vectors
/// (a_d..a_0), coprime, max degree m, a_d != 0, irreducible over F_q(T) and
/// over F_{q^d}(T) when d is prime, of the number of distinct roots.
/// d = 1 delegates to brute_count_rational(q, 2, m).
BigInt count_degree_d_P1(std::int64_t q, int d, int m, const EnumerationOptions& opt = {});

/// Number of projective (a,b,c) over F_q[T], coprime, max degree m, a != 0,
/// whose discriminant lies in the square class of u D (so the roots generate
/// K = k(sqrt(uD))). Odd q only.
BigInt count_quadratic_generators(const PolyRing& R, const QuadraticFieldDesc& K, int m,
                                  const EnumerationOptions& opt = {});

/// N_K(2,1,m) by brute force over minimal polynomials: two conjugate points
/// per generator vector, plus k-rational points with h_K = 2 h_k.
BigInt brute_count_quadratic_P1(const PolyRing& R, const QuadraticFieldDesc& K, int m,
                                const EnumerationOptions& opt = {});

struct AssemblyRow {
  std::string D;
  bool twisted = false;
  int genus = 0;
  BigInt J;
  BigInt N_K;         // N_K(n,1,m)
  BigInt correction;  // [2|m] N_k(n,1,m/2)
  BigInt contribution;
};

struct AssemblyResult {
  std::int64_t q = 0;
  int n = 0;
  int m = 0;
  BigInt N;
  std::vector<AssemblyRow> rows;
};

/// N_k(n,2,m) = sum_K (N_K(n,1,m) - [2|m] N_k(n,1,m/2)) over quadratic K with
/// deg D <= 2m. Odd q; refuses m > 2 where genus >= 2 fields would enter.
AssemblyResult assemble_N_quadratic(std::int64_t q, int n, int m, unsigned workers = 1);

struct SchanuelSumReport {
  std::int64_t q = 0;
  int n = 0;
  int degD_max = 0;
  Rational partial_sum;
  std::vector<Rational> increments;  // index deg D - 1
  std::vector<std::size_t> field_counts;
  std::vector<double> increment_ratios;  // inc(k+1)/inc(k), report only
  /// Per-genus sums; the increments within one genus grow with the field count.
  std::vector<Rational> genus_sums;
};

/// Partial sums of S_k(n,2) = sum_K S_K(n,1) over quadratic K with
/// deg D <= degD_max. Refuses n <= 4.
SchanuelSumReport schanuel_sum_partial(std::int64_t q, int n, int degD_max, unsigned workers = 1);

struct ReportLine {
  std::string section;
  std::string key;
  std::string value;
};

/// Report-only ratios: N/q^{nm} at genus 0, N_k(2,2,m)/(2 N_k(3,1,m)), and
/// field counts with g_K <= m against q^{3m}.
std::vector<ReportLine> corollary_bounds_report(std::int64_t q, int m_max, unsigned workers = 1);

}  // namespace ffc
