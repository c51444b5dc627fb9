#pragma once

#include <string>
#include <vector>

#include "lk/descent.hpp"
#include "lk/leonard.hpp"

namespace lk {

// A bilinear pairing K^{d+1} x K^{d'+1} -> K between the modules of two
// Leonard systems, stored as the Gram matrix with respect to the split bases
// {E*_i u} of the source and {E*'_j u'} of the target, where u, u' are the
// standard_form seed vectors. Entry (i, j) is (E*_i u | E*'_j u').
struct BalancedForm {
  LeonardSystem source;
  LeonardSystem target;
  int rho = 0;
  Matrix B;

  BalancedForm(LeonardSystem src, LeonardSystem tgt, int rho_, Matrix b);
};

// The canonical rho-balanced pairing: B(rho + j, j) = k'_j and every other
// entry zero, where k' is the multiplicity vector of the target. Errors with
// NotADescendent when the target fails the descendence criterion at rho.
BalancedForm build_balanced_form(const LeonardSystem& source, const LeonardSystem& target,
                                 int rho);

// Gram matrix of the same pairing in standard coordinates of both modules,
// basis^{-T} B basis'^{-1}.
Matrix standard_coordinates_gram(const BalancedForm& form);

struct BalanceReport {
  bool pass = false;
  std::vector<ConditionReport> conditions;

  const ConditionReport& condition(const std::string& name) const;
};

// Conditions reported:
//   nonzero  the matrix B is not identically zero
//   B1       (E*_i V | E*'_j V') = 0 whenever i - rho != j
//   B2       (E_i V | E'_j V') = 0 whenever i < j or i > j + d - d'
//   rank     B has full rank d' + 1
//   pair v   B1 and B2 for the Down images at endpoint d - d' - rho
//   pair V   B1 and B2 for the DoubleDown images at endpoint rho
//   pair vV  B1 and B2 for the Down DoubleDown images at endpoint d - d' - rho
BalanceReport check_balanced(const BalancedForm& form);

// The pairing transports the dual idempotent algebra along E*_i -> E*'_{i-rho}
// (zero when i - rho is out of range): checks (E*_i)^T M = M E*'_{i-rho} in
// standard coordinates for every i.
bool sigma_intertwine_check(const BalancedForm& form);

// Adjoint maps of the pairing against the standard bilinear forms of the two
// systems, as matrices on split-basis coordinates:
//   proj       source -> target, <proj v, v'>' = (v | v')
//   proj_prime target -> source, <v, proj_prime v'> = (v | v')
// epsilon is the scalar with proj u = epsilon u'.
struct ProjectionPair {
  Matrix proj;
  Matrix proj_prime;
  FieldElement epsilon;
};

// Verifies that proj carries E_0 V onto E'_0 V' (this pins epsilon) and that
// proj_prime is injective; errors with HypothesisViolated otherwise.
ProjectionPair projection_maps(const BalancedForm& form);

// Operator-level descendence: with the witness (xi*, zeta*) of the underlying
// parameter arrays, checks in standard coordinates of the target
//   A*' = xi* (sum_i theta*_{rho+i} E*'_i) + zeta* I
//   S*' = (varphi_1 ... varphi_rho)/(phi_1 ... phi_rho) sum_i c_{rho+i} E*'_i
// where S* = sum_l c_l E*_l is the dual switching element of the source.
bool dual_objects_check(const BalancedForm& form);

// The pairing (v, v'') -> (v | proj'' v'') where proj'' is the adjoint of the
// second form; balanced at endpoint first.rho + second.rho. Errors with
// MiddleSystemMismatch unless first.target == second.source.
BalancedForm compose(const BalancedForm& first, const BalancedForm& second);

// Dimension of the space of pairings satisfying the B1 support pattern and
// the B2 window pattern, by exact kernel computation; 1 means the balanced
// pairing is unique up to a scalar.
int balanced_space_dimension(const LeonardSystem& source, const LeonardSystem& target, int rho);

// Reconstructs the descendent system pinned by a full-rank pairing and two
// decompositions of K^{d'+1} into lines: returns the unique Leonard system
// Phi' with E'_i V' = u_decomp[i], E*'_i V' = u_star_decomp[i] such that
// b_raw (given in standard coordinates) is rho-balanced for (source, Phi').
// source_params must describe the source system; the free decompositions are
// checked against the hypotheses
//   (i)   (E*_i V | u_star_decomp[j]) = 0 whenever i - rho != j
//   (ii)  (E_i V | u_decomp[j]) = 0 whenever i < j or i > j + d - d'
//   (iii) b_raw has full rank d' + 1
// and errors with HypothesisViolated naming the first one that fails, or with
// NotAdmissible when no descendent of diameter d' at endpoint rho exists.
LeonardSystem induce_descendent(const CaseParams& source_params, const LeonardSystem& source,
                                const std::vector<Subspace>& u_decomp,
                                const std::vector<Subspace>& u_star_decomp, const Matrix& b_raw,
                                int rho);

}  // namespace lk
