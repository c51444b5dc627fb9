#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lk/parameter_array.hpp"

namespace lk {

// Witness that one array descends from another at endpoint rho:
//   theta*'_i = xi_star theta*_{rho+i} + zeta_star   (0 <= i <= d')
//   phi'_i / varphi'_i = phi_{rho+i} / varphi_{rho+i} (1 <= i <= d')
// xi_star is nonzero whenever the witness exists.
struct DescentWitness {
  int rho;
  FieldElement xi_star;
  FieldElement zeta_star;
};

// Decides the criterion above for a fixed rho. xi_star and zeta_star are
// solved from the first two indices and then every index is verified.
std::optional<DescentWitness> is_descendent(const ParameterArray& pa,
                                            const ParameterArray& pa_prime,
                                            int rho);

// All rho in [0, d - d'] accepted by is_descendent, in increasing order.
// The endpoint need not be unique for a given pair.
std::vector<int> valid_rhos(const ParameterArray& pa,
                            const ParameterArray& pa_prime);

// Three identities tying the vartheta sequences, the varphi/phi columns and
// the eigenvalue spans of a descendent pair to the witness scalars. They hold
// for every genuine witness; a false return flags a bug.
bool scalar_identities_check(const ParameterArray& pa, const ParameterArray& pa_prime,
                       const DescentWitness& w);

struct AdmissibilityVerdict {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Whether a descendent with diameter d' and endpoint rho can exist for a
// source in the given case family. Only Cases III and IV constrain the
// shape: III with d even needs d' = 1 or d' even; III with d odd needs d'
// odd and rho even; IV allows exactly (d', rho) in {(1,0), (1,2), (3,0)}.
AdmissibilityVerdict admissible(CaseTag tag, int d, int d_prime, int rho);

// Emits the descendent's case parameters. Determined slots (shifted or
// scaled copies of the source parameters) are filled in; `free` must supply
// exactly the unconstrained ones: theta0, theta0_star and the free scales of
// the target case. Where the target is only fixed up to a ratio (Case IA:
// s/r; IIC-type targets: s s*/r), supply the numerator slots and optionally
// r as well; an omitted r is derived, a supplied r is checked against the
// ratio. The result is instantiated, validated and witness-checked before
// being returned.
CaseParams construct_descendent(const CaseParams& cp, int d_prime, int rho,
                                const std::map<std::string, FieldElement>& free);

// Searches for a feasible descendent at (d_prime, rho): canonical defaults
// first (carry matching source scales, unit fallback, zero base points),
// then a lexicographic sweep of small values, at most 16 per free scale.
// Absent means the bounded search found nothing feasible.
std::optional<CaseParams> existence_probe(const CaseParams& cp, int d_prime,
                                          int rho);

}  // namespace lk
