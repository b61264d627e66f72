#pragma once

#include "ffcount/arith.hpp"
#include "ffcount/poly.hpp"

#include <string>
#include <vector>

namespace ffc {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Effective divisors of F_q(T) by degree, from the enumerated places:
/// coefficients of prod_v (1 - t^{deg v})^{-1} up to l_max.
std::vector<BigInt> effective_divisor_counts(const PolyRing& R, int l_max);

/// sum of mu(c) over effective c of degree l: coefficients of
/// prod_v (1 - t^{deg v}) up to l_max.
std::vector<BigInt> moebius_divisor_sums(const PolyRing& R, int l_max);

std::vector<std::string> verify_suite_names();

/// Runs one suite ("algebra", "places", "zeta", "riemann_roch", "counting",
/// "quadratic_fields", "forms") or "all".
std::vector<Check> run_verify_suite(const std::string& suite, unsigned workers = 1);

}  // namespace ffc
