#include "lk/descent.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

#include "lk/error.hpp"

namespace lk {

namespace {

void check_pair_shape(const ParameterArray& pa, const ParameterArray& pa_prime,
                      int rho) {
  if (!same_field(pa.field(), pa_prime.field()))
    fail(ErrorKind::MismatchedField, "the two arrays lie in different fields");
  if (pa_prime.d > pa.d || rho < 0 || rho > pa.d - pa_prime.d)
    fail(ErrorKind::EndpointOutOfRange,
         "require d' <= d and 0 <= rho <= d - d'");
}

// Target description emitted by the classification: fixed slots, names the
// caller must choose freely, and (for ratio-constrained targets) the value
// the product of `ratio_numerator` slots must have relative to r.
struct TargetPlan {
  CaseTag tag;
  std::map<std::string, FieldElement> determined;
  std::vector<std::string> required_free;
  std::optional<FieldElement> ratio;
  std::vector<std::string> ratio_numerator;
};

TargetPlan make_plan(const CaseParams& cp, int d_prime, int rho) {
  const FieldSpecPtr& F = cp.field();
  auto K = [&](std::int64_t n) { return FieldElement::from_integer(n, F); };
  const int d = cp.d;
  TargetPlan plan{cp.tag, {}, {"theta0", "theta0_star"}, std::nullopt, {}};
  auto iic_degeneration = [&]() {
    ParameterArray src = instantiate(cp);
    plan.tag = CaseTag::IIC;
    plan.required_free.push_back("s");
    plan.required_free.push_back("s_star");
    plan.ratio = K(1) - src.phi[rho] / src.varphi[rho];
    plan.ratio_numerator = {"s", "s_star"};
  };
  switch (cp.tag) {
    case CaseTag::I: {
      const FieldElement& q = cp.at("q");
      plan.determined.emplace("q", q);
      plan.determined.emplace("r1", cp.at("r1") * q.pow(rho));
      plan.determined.emplace("r2", cp.at("r2") * q.pow(rho));
      plan.determined.emplace("s", cp.at("s") * q.pow(d - d_prime));
      plan.determined.emplace("s_star", cp.at("s_star") * q.pow(2 * rho));
      plan.required_free.push_back("h");
      plan.required_free.push_back("h_star");
      break;
    }
    case CaseTag::IA: {
      const FieldElement& q = cp.at("q");
      plan.determined.emplace("q", q);
      plan.required_free.push_back("h_star");
      plan.required_free.push_back("s");
      plan.ratio = q.pow(d - d_prime - rho) * cp.at("s") / cp.at("r");
      plan.ratio_numerator = {"s"};
      break;
    }
    case CaseTag::II:
      plan.determined.emplace("r1", cp.at("r1") + K(rho));
      plan.determined.emplace("r2", cp.at("r2") + K(rho));
      plan.determined.emplace("s", cp.at("s") + K(d - d_prime));
      plan.determined.emplace("s_star", cp.at("s_star") + K(2 * rho));
      plan.required_free.push_back("h");
      plan.required_free.push_back("h_star");
      break;
    case CaseTag::IIA:
      plan.determined.emplace("r", cp.at("r") + K(rho));
      plan.determined.emplace("s", cp.at("s") + K(d - d_prime));
      plan.required_free.push_back("h");
      plan.required_free.push_back("s_star");
      break;
    case CaseTag::IIB:
      plan.determined.emplace("r", cp.at("r") + K(rho));
      plan.determined.emplace("s_star", cp.at("s_star") + K(2 * rho));
      plan.required_free.push_back("h_star");
      plan.required_free.push_back("s");
      break;
    case CaseTag::IIC:
      plan.required_free.push_back("s");
      plan.required_free.push_back("s_star");
      plan.ratio = cp.at("s") * cp.at("s_star") / cp.at("r");
      plan.ratio_numerator = {"s", "s_star"};
      break;
    case CaseTag::III:
      if (d % 2 == 0 && d_prime == 1) {
        iic_degeneration();
      } else {
        const bool swap = d % 2 == 0 && rho % 2 == 1;
        plan.determined.emplace("r1", cp.at(swap ? "r2" : "r1") + K(rho));
        plan.determined.emplace("r2", cp.at(swap ? "r1" : "r2") + K(rho));
        plan.determined.emplace("s", cp.at("s") - K(d - d_prime));
        plan.determined.emplace("s_star", cp.at("s_star") - K(2 * rho));
        plan.required_free.push_back("h");
        plan.required_free.push_back("h_star");
      }
      break;
    case CaseTag::IV:
      if (d_prime == 3) {
        plan.determined.emplace("r", cp.at("r"));
        plan.determined.emplace("s", cp.at("s"));
        plan.determined.emplace("s_star", cp.at("s_star"));
        plan.required_free.push_back("h");
        plan.required_free.push_back("h_star");
      } else {
        iic_degeneration();
      }
      break;
  }
  return plan;
}

}  // namespace

std::optional<DescentWitness> is_descendent(const ParameterArray& pa,
                                            const ParameterArray& pa_prime,
                                            int rho) {
  check_pair_shape(pa, pa_prime, rho);
  const int dp = pa_prime.d;
  FieldElement xi = (pa_prime.theta_star[1] - pa_prime.theta_star[0]) /
                    (pa.theta_star[rho + 1] - pa.theta_star[rho]);
  FieldElement zeta = pa_prime.theta_star[0] - xi * pa.theta_star[rho];
  for (int i = 0; i <= dp; ++i)
    if (pa_prime.theta_star[i] != xi * pa.theta_star[rho + i] + zeta)
      return std::nullopt;
  for (int i = 1; i <= dp; ++i)
    if (pa_prime.phi[i - 1] * pa.varphi[rho + i - 1] !=
        pa.phi[rho + i - 1] * pa_prime.varphi[i - 1])
      return std::nullopt;
  return DescentWitness{rho, xi, zeta};
}

std::vector<int> valid_rhos(const ParameterArray& pa,
                            const ParameterArray& pa_prime) {
  std::vector<int> out;
  if (pa_prime.d > pa.d) return out;
  for (int rho = 0; rho <= pa.d - pa_prime.d; ++rho)
    if (is_descendent(pa, pa_prime, rho)) out.push_back(rho);
  return out;
}

bool scalar_identities_check(const ParameterArray& pa, const ParameterArray& pa_prime,
                       const DescentWitness& w) {
  check_pair_shape(pa, pa_prime, w.rho);
  const int dp = pa_prime.d;
  const int rho = w.rho;
  const std::vector<FieldElement> vt = derived_scalars(pa).vartheta;
  const std::vector<FieldElement> vtp = derived_scalars(pa_prime).vartheta;
  const FieldElement span = pa.theta[pa.d] - pa.theta[0];
  const FieldElement span_p = pa_prime.theta[dp] - pa_prime.theta[0];
  for (int i = 1; i <= dp; ++i) {
    const FieldElement& vt_ri = vt[rho + i - 1];
    const FieldElement rhs_base = w.xi_star * span_p * vtp[i - 1];
    if (span * vt_ri * pa_prime.varphi[i - 1] != rhs_base * pa.varphi[rho + i - 1])
      return false;
    if (span * vt_ri * pa_prime.phi[i - 1] != rhs_base * pa.phi[rho + i - 1])
      return false;
    const FieldElement lhs3 =
        span * vt[rho] * vt_ri *
        (pa.theta_star[rho + i] - pa.theta_star[rho]) *
        (pa_prime.theta[dp - i + 1] - pa_prime.theta[0]);
    const FieldElement rhs3 =
        span_p * vtp[i - 1] *
        (vt[rho] * pa.phi[rho + i - 1] - vt_ri * pa.varphi[rho]);
    if (lhs3 != rhs3) return false;
  }
  return true;
}

AdmissibilityVerdict admissible(CaseTag tag, int d, int d_prime, int rho) {
  if (d_prime < 1 || d_prime > d || rho < 0 || rho > d - d_prime)
    fail(ErrorKind::EndpointOutOfRange,
         "require 1 <= d' <= d and 0 <= rho <= d - d'");
  switch (tag) {
    case CaseTag::III:
      if (d % 2 == 0) {
        if (d_prime == 1 || d_prime % 2 == 0) return {true, ""};
        return {false, "with d even the descendent diameter must be 1 or even"};
      }
      if (d_prime % 2 == 1 && rho % 2 == 0) return {true, ""};
      return {false,
              "with d odd the descendent diameter must be odd and the endpoint even"};
    case CaseTag::IV:
      if ((d_prime == 1 && (rho == 0 || rho == 2)) || (d_prime == 3 && rho == 0))
        return {true, ""};
      return {false, "the only feasible (d', rho) are (1,0), (1,2) and (3,0)"};
    default:
      return {true, ""};
  }
}

CaseParams construct_descendent(const CaseParams& cp, int d_prime, int rho,
                                const std::map<std::string, FieldElement>& free) {
  AdmissibilityVerdict verdict = admissible(cp.tag, cp.d, d_prime, rho);
  if (!verdict.ok) fail(ErrorKind::NotAdmissible, verdict.reason);
  TargetPlan plan = make_plan(cp, d_prime, rho);

  const std::set<std::string> expected(plan.required_free.begin(),
                                       plan.required_free.end());
  bool r_supplied = false;
  for (const auto& [name, value] : free) {
    (void)value;
    if (plan.ratio && name == "r") {
      r_supplied = true;
    } else if (!expected.count(name)) {
      fail(ErrorKind::ConfigParse, "unexpected free parameter " + name);
    }
  }
  for (const std::string& name : plan.required_free)
    if (!free.count(name))
      fail(ErrorKind::ConfigParse, "missing free parameter " + name);

  CaseParams out;
  out.tag = plan.tag;
  out.d = d_prime;
  out.named = plan.determined;
  for (const std::string& name : plan.required_free)
    out.named.emplace(name, free.at(name));
  if (plan.ratio) {
    FieldElement num = out.named.at(plan.ratio_numerator.front());
    for (std::size_t k = 1; k < plan.ratio_numerator.size(); ++k)
      num = num * out.named.at(plan.ratio_numerator[k]);
    if (r_supplied) {
      const FieldElement& r = free.at("r");
      if (num != *plan.ratio * r)
        fail(ErrorKind::FreeParameterConstraintViolated,
             "the supplied scales break the ratio the target must satisfy");
      out.named.emplace("r", r);
    } else {
      out.named.emplace("r", num / *plan.ratio);
    }
  }

  ParameterArray target = instantiate(out);
  if (!is_descendent(instantiate(cp), target, rho))
    fail(ErrorKind::NotADescendent,
         "internal error: the emitted array fails the descent criterion");
  return out;
}

std::optional<CaseParams> existence_probe(const CaseParams& cp, int d_prime,
                                          int rho) {
  AdmissibilityVerdict verdict = admissible(cp.tag, cp.d, d_prime, rho);
  if (!verdict.ok) fail(ErrorKind::NotAdmissible, verdict.reason);
  TargetPlan plan = make_plan(cp, d_prime, rho);
  const FieldSpecPtr& F = cp.field();
  const FieldElement zero = FieldElement::zero(F);

  std::vector<std::string> slots;
  for (const std::string& name : plan.required_free)
    if (name != "theta0" && name != "theta0_star") slots.push_back(name);

  std::vector<std::vector<FieldElement>> candidates(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    std::vector<FieldElement>& list = candidates[k];
    auto push_unique = [&](const FieldElement& v) {
      if (!v.is_zero() && std::find(list.begin(), list.end(), v) == list.end())
        list.push_back(v);
    };
    auto it = cp.named.find(slots[k]);
    if (it != cp.named.end()) push_unique(it->second);
    push_unique(FieldElement::one(F));
    if (F->characteristic() == 0) {
      for (std::int64_t n : {-1, 2, -2, 3, -3})
        push_unique(FieldElement::from_integer(n, F));
    } else {
      for (const FieldElement& v : enumerate_field(F, 16)) push_unique(v);
    }
  }

  std::vector<std::size_t> idx(slots.size(), 0);
  while (true) {
    std::map<std::string, FieldElement> free;
    free.emplace("theta0", zero);
    free.emplace("theta0_star", zero);
    for (std::size_t k = 0; k < slots.size(); ++k)
      free.emplace(slots[k], candidates[k][idx[k]]);
    try {
      return construct_descendent(cp, d_prime, rho, free);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InfeasibleParameters) throw;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == candidates[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) return std::nullopt;
  }
}

}  // namespace lk
