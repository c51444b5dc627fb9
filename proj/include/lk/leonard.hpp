#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lk/linalg.hpp"
#include "lk/parameter_array.hpp"

namespace lk {

// A Leonard system on the coordinate space K^{d+1}: a multiplicity-free pair
// A, A* together with orderings of their primitive idempotents, satisfying
// the tridiagonal axioms checked by check_axioms.
struct LeonardSystem {
  int d = 0;
  Matrix A;
  Matrix A_star;
  std::vector<Matrix> E;       // primitive idempotents of A, E[i] for theta_i
  std::vector<Matrix> E_star;  // primitive idempotents of A*
  std::vector<FieldElement> eigen;
  std::vector<FieldElement> eigen_star;

  LeonardSystem() : A(1, 1, FieldSpec::rationals()), A_star(1, 1, FieldSpec::rationals()) {}

  std::size_t n() const { return static_cast<std::size_t>(d) + 1; }
  const FieldSpecPtr& field() const { return A.field(); }
  bool operator==(const LeonardSystem& o) const;
  bool operator!=(const LeonardSystem& o) const { return !(*this == o); }
};

struct AxiomReport {
  bool pass = false;
  std::vector<ConditionReport> conditions;  // LS1..LS5

  const ConditionReport& condition(const std::string& name) const;
};

// Split-form construction: A lower bidiagonal with diagonal theta_0..theta_d
// and subdiagonal 1; A* upper bidiagonal with diagonal theta*_0..theta*_d and
// superdiagonal varphi_1..varphi_d. Idempotents by Lagrange interpolation.
LeonardSystem from_parameter_array(const ParameterArray& pa);

// LS1: A, A* multiplicity-free (distinct listed eigenvalues, annihilated by
//      the product of the corresponding linear factors, idempotents nonzero).
// LS2: {E_i} is a resolution of the identity for A with A E_i = theta_i E_i.
// LS3: the starred analogue.
// LS4: E*_i A E*_j = 0 iff |i-j| > 1 and != 0 iff |i-j| = 1.
// LS5: E_i A* E_j = 0 iff |i-j| > 1 and != 0 iff |i-j| = 1.
AxiomReport check_axioms(const LeonardSystem& ls);

enum class D4Gen { Star, Down, DoubleDown };

// Word syntax: '*' for Star; 'v' or UTF-8 down arrow for Down (reverses the
// E* ordering); 'V' or UTF-8 double down arrow for DoubleDown (reverses the
// E ordering). Whitespace is ignored.
std::vector<D4Gen> parse_d4_word(const std::string& text);

LeonardSystem d4_apply(const LeonardSystem& ls, const std::vector<D4Gen>& word);
LeonardSystem d4_apply(const LeonardSystem& ls, const std::string& word);

// (A; A*) -> (xi A + zeta I; xi* A* + zeta* I), idempotents unchanged.
LeonardSystem affine_transform(const LeonardSystem& ls, const FieldElement& xi,
                               const FieldElement& zeta, const FieldElement& xi_star,
                               const FieldElement& zeta_star);

// Inverts the split form: v_0 spans E*_0 V, v_{i+1} = (A - theta_i I) v_i;
// in the basis {v_i} the matrix A* must come out upper bidiagonal and its
// superdiagonal is varphi. phi is the varphi of the DoubleDown image.
ParameterArray extract_parameter_array(const LeonardSystem& ls);

// nu = 1/trace(E*_0 E_0), k_i = trace(E*_i E_0) nu. Every trace must be
// nonzero; k_0 = 1 and sum k_i = nu.
std::pair<FieldElement, std::vector<FieldElement>> nu_and_k(const LeonardSystem& ls);

// S* = sum_l (phi_1...phi_l)/(varphi_1...varphi_l) E*_l, the unique element
// of span{E*_i} (up to scalar) carrying E_0 V into E_d V.
Matrix dual_switching_element(const LeonardSystem& ls);

// The bilinear form with <X u, v> = <u, X† v> for X in {A, A*}, normalized so
// that ||u||^2 = nu. In the basis {E*_i u} its Gram matrix is diag(k_i).
struct StandardForm {
  Matrix G;      // diag(k_0..k_d), Gram matrix in the basis {E*_i u}
  Matrix basis;  // columns E*_0 u, ..., E*_d u in standard coordinates
  std::vector<FieldElement> u;
  FieldElement nu;
  std::vector<FieldElement> k;

  StandardForm(Matrix g, Matrix b, std::vector<FieldElement> u_, FieldElement nu_,
               std::vector<FieldElement> k_)
      : G(std::move(g)), basis(std::move(b)), u(std::move(u_)), nu(std::move(nu_)),
        k(std::move(k_)) {}

  // Gram matrix in standard coordinates, basis^{-T} G basis^{-1}.
  Matrix gram_standard() const;
};

StandardForm standard_form(const LeonardSystem& ls);

// E*_0 V + ... + E*_i V = E*_0 V + A E*_0 V + ... + A^i E*_0 V for every i.
bool span_filtration_check(const LeonardSystem& ls);

}  // namespace lk
