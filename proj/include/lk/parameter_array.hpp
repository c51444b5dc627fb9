#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lk/field.hpp"

namespace lk {

// The parameter array ({theta_i}; {theta*_i}; {varphi_i}; {phi_i}) of a
// Leonard system with diameter d. varphi and phi are 1-indexed in the
// mathematics; entry i lives at index i-1.
struct ParameterArray {
  int d = 0;
  std::vector<FieldElement> theta;       // d+1 entries
  std::vector<FieldElement> theta_star;  // d+1 entries
  std::vector<FieldElement> varphi;      // d entries
  std::vector<FieldElement> phi;         // d entries

  const FieldSpecPtr& field() const { return theta.at(0).field(); }
  bool operator==(const ParameterArray& o) const;
  bool operator!=(const ParameterArray& o) const { return !(*this == o); }
};

// Shape-checked construction; derives d from the sequence lengths.
ParameterArray make_parameter_array(std::vector<FieldElement> theta,
                                    std::vector<FieldElement> theta_star,
                                    std::vector<FieldElement> varphi,
                                    std::vector<FieldElement> phi);

struct ConditionReport {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure location, empty on pass
};

struct ValidationReport {
  bool pass = false;
  std::vector<ConditionReport> conditions;

  const ConditionReport& condition(const std::string& name) const;
};

// The five defining conditions PA1..PA5:
//   PA1  varphi_i != 0, phi_i != 0
//   PA2  theta_i pairwise distinct, theta*_i pairwise distinct
//   PA3  varphi_i = phi_1 * vartheta_i + (theta*_i - theta*_0)(theta_{i-1} - theta_d)
//   PA4  phi_i = varphi_1 * vartheta_i + (theta*_i - theta*_0)(theta_{d-i+1} - theta_0)
//   PA5  (theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i) and the starred
//        analogue exist, agree, and are independent of i for 2 <= i <= d-1
// where vartheta_i = sum_{l<i} (theta_l - theta_{d-l}) / (theta_0 - theta_d).
ValidationReport validate(const ParameterArray& pa);

enum class CaseTag { I, IA, II, IIA, IIB, IIC, III, IV };

const char* to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(const std::string& s);

// Named parameters of one of the eight closed-form families. Expected names
// per tag (d is carried separately; Case IV forces d = 3):
//   I:   q, h, h_star, r1, r2, s, s_star, theta0, theta0_star
//   IA:  q, h_star, r, s, theta0, theta0_star
//   II:  h, h_star, r1, r2, s, s_star, theta0, theta0_star
//   IIA: h, r, s, s_star, theta0, theta0_star
//   IIB: h_star, r, s, s_star, theta0, theta0_star
//   IIC: r, s, s_star, theta0, theta0_star
//   III: h, h_star, r1, r2, s, s_star, theta0, theta0_star
//   IV:  h, h_star, r, s, s_star, theta0, theta0_star
struct CaseParams {
  CaseTag tag = CaseTag::IIC;
  int d = 0;
  std::map<std::string, FieldElement> named;

  const FieldElement& at(const std::string& name) const;
  const FieldSpecPtr& field() const;
};

// Names required by instantiate for the given tag, in display order.
std::vector<std::string> case_parameter_names(CaseTag tag);

// Evaluates the closed-form family display. Side constraints (Case I:
// r1 r2 = s s* q^{d+1}; Case II: r1+r2 = s+s*+d+1; Case III: r1+r2 =
// -s-s*+d+1; Case IV: characteristic 2, d = 3) raise CaseConstraintViolated.
// The output is validated; a PA failure raises InfeasibleParameters naming
// the failing condition.
ParameterArray instantiate(const CaseParams& cp);

struct DerivedScalars {
  std::vector<FieldElement> vartheta;   // d entries, vartheta_i at index i-1
  std::optional<FieldElement> beta;     // absent (undetermined) when d < 3
};

DerivedScalars derived_scalars(const ParameterArray& pa);

// The six-branch closed-form table for vartheta_i; must agree entrywise with
// derived_scalars(instantiate(cp)).vartheta.
std::vector<FieldElement> closed_form_vartheta(const CaseParams& cp);

// varphi_i - phi_i = (theta*_i - theta*_{i-1})(theta_0 - theta_d) vartheta_i
// for all i; a theorem for valid arrays.
bool how_related_check(const ParameterArray& pa);

enum class CaseFamily { IFamily, IIFamily, III, IV };

const char* to_string(CaseFamily f);

// Every case family whose beta-value (q + 1/q for some field element q; 2;
// -2; 0) matches beta of pa. Inverse parameter recovery is out of scope, so
// coincidences (notably in characteristic 2) yield ambiguity sets.
std::set<CaseFamily> case_family_of_beta(const ParameterArray& pa);

}  // namespace lk
