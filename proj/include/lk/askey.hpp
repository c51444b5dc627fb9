#pragma once

#include <cstdint>
#include <vector>

#include "lk/leonard.hpp"
#include "lk/parameter_array.hpp"

namespace lk {

// Exact dense polynomial, coefficients low degree first, trimmed so the last
// entry is nonzero; the zero polynomial is the single coefficient 0.
struct Polynomial {
  std::vector<FieldElement> coeffs;

  explicit Polynomial(std::vector<FieldElement> c);

  int degree() const;  // -1 for the zero polynomial
  FieldElement eval(const FieldElement& x) const;

  bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

// The d + 1 polynomials
//   u_i = sum_l (theta*_i - theta*_0) ... (theta*_i - theta*_{l-1})
//               (x - theta_0) ... (x - theta_{l-1}) / (varphi_1 ... varphi_l),
// each of degree i with u_i(theta_0) = 1. The array must be valid.
std::vector<Polynomial> u_polynomials(const ParameterArray& pa);

// E_i v = k*_i (<u, v>/||u||^2) sum_j u*_i(theta*_j) E*_j u, for nonzero
// u in E_0 V and v in E*_0 V, where u*_i are the u-polynomials of the dual
// system and k*_i its multiplicities. True on every Leonard system.
bool expansion_identity_check(const LeonardSystem& ls);

// sum_l u*_i(theta*_{rho+l}) u*'_j(theta*'_l) k'_l, the sum of the two dual
// polynomial families against the target multiplicities. Vanishes whenever
// i < j or i > j + d - d'; values inside that window are reported as-is.
// Errors with NotADescendent unless the pair passes the criterion at rho.
FieldElement orthogonality_sum(const ParameterArray& pa, const ParameterArray& pa_prime, int rho,
                               int i, int j);

// Terminating Gauss series sum_l (a)_l (b)_l / ((c)_l l!) z^l with a, b
// nonpositive; errors with DenominatorVanishes when a denominator image is
// zero in the field before the series terminates.
FieldElement hypergeometric_2F1(std::int64_t a, std::int64_t b, std::int64_t c,
                                const FieldElement& z);

// The Krawtchouk form of the vanishing pattern: for every (i, j) with
// i < j or i > j + d - d',
//   sum_l C(d', l) (p/(1-p))^l 2F1(-i, -rho-l; -d; 1/p) 2F1(-j, -l; -d'; 1/p)
// must be zero. p must avoid 0 and 1.
bool krawtchouk_identity_check(int d, int d_prime, int rho, const FieldElement& p);

}  // namespace lk
