#include "lk/parameter_array.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lk {

namespace {

std::string entry(const char* base, int i) {
  return std::string(base) + "_" + std::to_string(i);
}

// vartheta_i = sum_{l=0}^{i-1} (theta_l - theta_{d-l}) / (theta_0 - theta_d),
// for 1 <= i <= d. Caller guarantees theta_0 != theta_d.
std::vector<FieldElement> vartheta_from_definition(const ParameterArray& pa) {
  const FieldElement den = pa.theta[0] - pa.theta[pa.d];
  FieldElement acc = FieldElement::zero(pa.field());
  std::vector<FieldElement> vt;
  vt.reserve(pa.d);
  for (int i = 1; i <= pa.d; ++i) {
    acc += (pa.theta[i - 1] - pa.theta[pa.d - (i - 1)]) / den;
    vt.push_back(acc);
  }
  return vt;
}

}  // namespace

bool ParameterArray::operator==(const ParameterArray& o) const {
  return d == o.d && theta == o.theta && theta_star == o.theta_star &&
         varphi == o.varphi && phi == o.phi;
}

ParameterArray make_parameter_array(std::vector<FieldElement> theta,
                                    std::vector<FieldElement> theta_star,
                                    std::vector<FieldElement> varphi,
                                    std::vector<FieldElement> phi) {
  if (theta.size() < 2)
    fail(ErrorKind::DiameterTooSmall, "a parameter array needs d >= 1, so at least two eigenvalues");
  const std::size_t n = theta.size();
  if (theta_star.size() != n || varphi.size() != n - 1 || phi.size() != n - 1)
    fail(ErrorKind::ShapeMismatch, "parameter array sequences have inconsistent lengths");
  const FieldSpecPtr& F = theta[0].field();
  auto same = [&](const std::vector<FieldElement>& v) {
    for (const auto& x : v)
      if (!same_field(x.field(), F))
        fail(ErrorKind::MismatchedField, "parameter array entries lie in different fields");
  };
  same(theta);
  same(theta_star);
  same(varphi);
  same(phi);
  ParameterArray pa;
  pa.d = static_cast<int>(n) - 1;
  pa.theta = std::move(theta);
  pa.theta_star = std::move(theta_star);
  pa.varphi = std::move(varphi);
  pa.phi = std::move(phi);
  return pa;
}

const ConditionReport& ValidationReport::condition(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::out_of_range("no condition named " + name);
}

ValidationReport validate(const ParameterArray& pa) {
  const int d = pa.d;
  ValidationReport rep;

  {
    ConditionReport c{"PA1", true, ""};
    for (int i = 1; i <= d && c.pass; ++i)
      if (pa.varphi[i - 1].is_zero()) {
        c.pass = false;
        c.detail = entry("varphi", i) + " = 0";
      }
    for (int i = 1; i <= d && c.pass; ++i)
      if (pa.phi[i - 1].is_zero()) {
        c.pass = false;
        c.detail = entry("phi", i) + " = 0";
      }
    rep.conditions.push_back(c);
  }

  {
    ConditionReport c{"PA2", true, ""};
    for (int i = 0; i <= d && c.pass; ++i)
      for (int j = i + 1; j <= d && c.pass; ++j)
        if (pa.theta[i] == pa.theta[j]) {
          c.pass = false;
          c.detail = entry("theta", i) + " = " + entry("theta", j);
        }
    for (int i = 0; i <= d && c.pass; ++i)
      for (int j = i + 1; j <= d && c.pass; ++j)
        if (pa.theta_star[i] == pa.theta_star[j]) {
          c.pass = false;
          c.detail = entry("theta*", i) + " = " + entry("theta*", j);
        }
    rep.conditions.push_back(c);
  }

  const bool vt_ok = pa.theta[0] != pa.theta[d];
  std::vector<FieldElement> vt;
  if (vt_ok) vt = vartheta_from_definition(pa);

  {
    ConditionReport c{"PA3", true, ""};
    if (!vt_ok) {
      c.pass = false;
      c.detail = "theta_0 = theta_d, so the vartheta sum is undefined";
    } else {
      for (int i = 1; i <= d && c.pass; ++i) {
        const FieldElement rhs =
            pa.phi[0] * vt[i - 1] +
            (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[i - 1] - pa.theta[d]);
        if (pa.varphi[i - 1] != rhs) {
          c.pass = false;
          c.detail = "fails at i = " + std::to_string(i);
        }
      }
    }
    rep.conditions.push_back(c);
  }

  {
    ConditionReport c{"PA4", true, ""};
    if (!vt_ok) {
      c.pass = false;
      c.detail = "theta_0 = theta_d, so the vartheta sum is undefined";
    } else {
      for (int i = 1; i <= d && c.pass; ++i) {
        const FieldElement rhs =
            pa.varphi[0] * vt[i - 1] +
            (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[d - i + 1] - pa.theta[0]);
        if (pa.phi[i - 1] != rhs) {
          c.pass = false;
          c.detail = "fails at i = " + std::to_string(i);
        }
      }
    }
    rep.conditions.push_back(c);
  }

  {
    ConditionReport c{"PA5", true, ""};
    std::optional<FieldElement> common;
    for (int i = 2; i <= d - 1; ++i) {
      const FieldElement den = pa.theta[i - 1] - pa.theta[i];
      const FieldElement den_star = pa.theta_star[i - 1] - pa.theta_star[i];
      if (den.is_zero() || den_star.is_zero()) {
        c.pass = false;
        c.detail = "denominator vanishes at i = " + std::to_string(i);
        break;
      }
      const FieldElement ratio = (pa.theta[i - 2] - pa.theta[i + 1]) / den;
      const FieldElement ratio_star = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) / den_star;
      if (ratio != ratio_star) {
        c.pass = false;
        c.detail = "plain and starred ratios differ at i = " + std::to_string(i);
        break;
      }
      if (!common) {
        common = ratio;
      } else if (*common != ratio) {
        c.pass = false;
        c.detail = "ratio at i = " + std::to_string(i) + " differs from i = 2";
        break;
      }
    }
    rep.conditions.push_back(c);
  }

  rep.pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                         [](const ConditionReport& c) { return c.pass; });
  return rep;
}

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::IA: return "IA";
    case CaseTag::II: return "II";
    case CaseTag::IIA: return "IIA";
    case CaseTag::IIB: return "IIB";
    case CaseTag::IIC: return "IIC";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
  }
  throw std::logic_error("unknown case tag");
}

std::optional<CaseTag> case_tag_from_string(const std::string& s) {
  static const std::map<std::string, CaseTag> table = {
      {"I", CaseTag::I},     {"IA", CaseTag::IA},   {"II", CaseTag::II},
      {"IIA", CaseTag::IIA}, {"IIB", CaseTag::IIB}, {"IIC", CaseTag::IIC},
      {"III", CaseTag::III}, {"IV", CaseTag::IV}};
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const FieldElement& CaseParams::at(const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end())
    fail(ErrorKind::ConfigParse,
         std::string("case ") + to_string(tag) + " needs parameter '" + name + "'");
  return it->second;
}

const FieldSpecPtr& CaseParams::field() const {
  if (named.empty()) fail(ErrorKind::ConfigParse, "case parameters are empty");
  return named.begin()->second.field();
}

std::vector<std::string> case_parameter_names(CaseTag tag) {
  switch (tag) {
    case CaseTag::I:
      return {"q", "h", "h_star", "r1", "r2", "s", "s_star", "theta0", "theta0_star"};
    case CaseTag::IA:
      return {"q", "h_star", "r", "s", "theta0", "theta0_star"};
    case CaseTag::II:
      return {"h", "h_star", "r1", "r2", "s", "s_star", "theta0", "theta0_star"};
    case CaseTag::IIA:
      return {"h", "r", "s", "s_star", "theta0", "theta0_star"};
    case CaseTag::IIB:
      return {"h_star", "r", "s", "s_star", "theta0", "theta0_star"};
    case CaseTag::IIC:
      return {"r", "s", "s_star", "theta0", "theta0_star"};
    case CaseTag::III:
      return {"h", "h_star", "r1", "r2", "s", "s_star", "theta0", "theta0_star"};
    case CaseTag::IV:
      return {"h", "h_star", "r", "s", "s_star", "theta0", "theta0_star"};
  }
  throw std::logic_error("unknown case tag");
}

ParameterArray instantiate(const CaseParams& cp) {
  const int d = cp.d;
  if (d < 1) fail(ErrorKind::DiameterTooSmall, "instantiation needs d >= 1");

  const std::vector<std::string> names = case_parameter_names(cp.tag);
  for (const auto& n : names)
    if (!cp.named.count(n))
      fail(ErrorKind::ConfigParse,
           std::string("case ") + to_string(cp.tag) + " needs parameter '" + n + "'");
  for (const auto& [k, v] : cp.named)
    if (std::find(names.begin(), names.end(), k) == names.end())
      fail(ErrorKind::ConfigParse,
           std::string("case ") + to_string(cp.tag) + " does not take parameter '" + k + "'");

  const FieldSpecPtr& F = cp.field();
  for (const auto& [k, v] : cp.named)
    if (!same_field(v.field(), F))
      fail(ErrorKind::MismatchedField, "case parameters lie in different fields");

  const FieldElement one = FieldElement::one(F);
  auto K = [&](std::int64_t n) { return FieldElement::from_integer(n, F); };
  const FieldElement& t0 = cp.at("theta0");
  const FieldElement& t0s = cp.at("theta0_star");

  std::vector<FieldElement> theta, theta_star, varphi, phi;

  switch (cp.tag) {
    case CaseTag::I: {
      const FieldElement& q = cp.at("q");
      const FieldElement& h = cp.at("h");
      const FieldElement& hs = cp.at("h_star");
      const FieldElement& r1 = cp.at("r1");
      const FieldElement& r2 = cp.at("r2");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      if (q.is_zero()) fail(ErrorKind::CaseConstraintViolated, "case I needs q != 0");
      if (r1 * r2 != s * ss * q.pow(d + 1))
        fail(ErrorKind::CaseConstraintViolated, "case I needs r1 r2 = s s* q^(d+1)");
      for (int i = 0; i <= d; ++i) {
        theta.push_back(t0 + h * (one - q.pow(i)) * (one - s * q.pow(i + 1)) * q.pow(-i));
        theta_star.push_back(t0s + hs * (one - q.pow(i)) * (one - ss * q.pow(i + 1)) * q.pow(-i));
      }
      for (int i = 1; i <= d; ++i) {
        varphi.push_back(h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) * (one - q.pow(i - d - 1)) *
                         (one - r1 * q.pow(i)) * (one - r2 * q.pow(i)));
        if (!ss.is_zero())
          phi.push_back(h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) * (one - q.pow(i - d - 1)) *
                        (r1 - ss * q.pow(i)) * (r2 - ss * q.pow(i)) / ss);
        else
          phi.push_back(h * hs * q.pow(d + 2 - 2 * i) * (one - q.pow(i)) *
                        (one - q.pow(i - d - 1)) * (s - r1 * q.pow(i - d - 1) - r2 * q.pow(i - d - 1)));
      }
      break;
    }
    case CaseTag::IA: {
      const FieldElement& q = cp.at("q");
      const FieldElement& hs = cp.at("h_star");
      const FieldElement& r = cp.at("r");
      const FieldElement& s = cp.at("s");
      if (q.is_zero()) fail(ErrorKind::CaseConstraintViolated, "case IA needs q != 0");
      for (int i = 0; i <= d; ++i) {
        theta.push_back(t0 - s * q * (one - q.pow(i)));
        theta_star.push_back(t0s + hs * (one - q.pow(i)) * q.pow(-i));
      }
      for (int i = 1; i <= d; ++i) {
        varphi.push_back(-(r * hs) * q.pow(1 - i) * (one - q.pow(i)) * (one - q.pow(i - d - 1)));
        phi.push_back(hs * q.pow(d + 2 - 2 * i) * (one - q.pow(i)) * (one - q.pow(i - d - 1)) *
                      (s - r * q.pow(i - d - 1)));
      }
      break;
    }
    case CaseTag::II: {
      const FieldElement& h = cp.at("h");
      const FieldElement& hs = cp.at("h_star");
      const FieldElement& r1 = cp.at("r1");
      const FieldElement& r2 = cp.at("r2");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      if (r1 + r2 != s + ss + K(d + 1))
        fail(ErrorKind::CaseConstraintViolated, "case II needs r1 + r2 = s + s* + d + 1");
      for (int i = 0; i <= d; ++i) {
        theta.push_back(t0 + h * K(i) * (K(i + 1) + s));
        theta_star.push_back(t0s + hs * K(i) * (K(i + 1) + ss));
      }
      for (int i = 1; i <= d; ++i) {
        varphi.push_back(h * hs * K(i) * K(i - d - 1) * (K(i) + r1) * (K(i) + r2));
        phi.push_back(h * hs * K(i) * K(i - d - 1) * (K(i) + ss - r1) * (K(i) + ss - r2));
      }
      break;
    }
    case CaseTag::IIA: {
      const FieldElement& h = cp.at("h");
      const FieldElement& r = cp.at("r");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      for (int i = 0; i <= d; ++i) {
        theta.push_back(t0 + h * K(i) * (K(i + 1) + s));
        theta_star.push_back(t0s + ss * K(i));
      }
      for (int i = 1; i <= d; ++i) {
        varphi.push_back(h * ss * K(i) * K(i - d - 1) * (K(i) + r));
        phi.push_back(h * ss * K(i) * K(i - d - 1) * (K(i) + r - s - K(d + 1)));
      }
      break;
    }
    case CaseTag::IIB: {
      const FieldElement& hs = cp.at("h_star");
      const FieldElement& r = cp.at("r");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      for (int i = 0; i <= d; ++i) {
        theta.push_back(t0 + s * K(i));
        theta_star.push_back(t0s + hs * K(i) * (K(i + 1) + ss));
      }
      for (int i = 1; i <= d; ++i) {
        varphi.push_back(hs * s * K(i) * K(i - d - 1) * (K(i) + r));
        phi.push_back(-(hs * s) * K(i) * K(i - d - 1) * (K(i) + ss - r));
      }
      break;
    }
    case CaseTag::IIC: {
      const FieldElement& r = cp.at("r");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      for (int i = 0; i <= d; ++i) {
        theta.push_back(t0 + s * K(i));
        theta_star.push_back(t0s + ss * K(i));
      }
      for (int i = 1; i <= d; ++i) {
        varphi.push_back(r * K(i) * K(i - d - 1));
        phi.push_back((r - s * ss) * K(i) * K(i - d - 1));
      }
      break;
    }
    case CaseTag::III: {
      const FieldElement& h = cp.at("h");
      const FieldElement& hs = cp.at("h_star");
      const FieldElement& r1 = cp.at("r1");
      const FieldElement& r2 = cp.at("r2");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      if (r1 + r2 != -s - ss + K(d + 1))
        fail(ErrorKind::CaseConstraintViolated, "case III needs r1 + r2 = -s - s* + d + 1");
      for (int i = 0; i <= d; ++i) {
        const FieldElement sign = (i % 2 == 0) ? one : -one;
        theta.push_back(t0 + h * (s - one + (one - s + K(2 * i)) * sign));
        theta_star.push_back(t0s + hs * (ss - one + (one - ss + K(2 * i)) * sign));
      }
      const FieldElement four = K(4);
      for (int i = 1; i <= d; ++i) {
        const bool i_even = (i % 2 == 0);
        if (d % 2 == 0) {
          varphi.push_back(i_even ? -four * h * hs * K(i) * (K(i) + r1)
                                  : -four * h * hs * K(i - d - 1) * (K(i) + r2));
          phi.push_back(i_even ? four * h * hs * K(i) * (K(i) - ss - r1)
                               : four * h * hs * K(i - d - 1) * (K(i) - ss - r2));
        } else {
          varphi.push_back(i_even ? -four * h * hs * K(i) * K(i - d - 1)
                                  : -four * h * hs * (K(i) + r1) * (K(i) + r2));
          phi.push_back(i_even ? -four * h * hs * K(i) * K(i - d - 1)
                               : -four * h * hs * (K(i) - ss - r1) * (K(i) - ss - r2));
        }
      }
      break;
    }
    case CaseTag::IV: {
      if (F->characteristic() != 2)
        fail(ErrorKind::CaseConstraintViolated, "case IV needs characteristic 2");
      if (d != 3) fail(ErrorKind::CaseConstraintViolated, "case IV needs d = 3");
      const FieldElement& h = cp.at("h");
      const FieldElement& hs = cp.at("h_star");
      const FieldElement& r = cp.at("r");
      const FieldElement& s = cp.at("s");
      const FieldElement& ss = cp.at("s_star");
      theta = {t0, t0 + h * (s + one), t0 + h, t0 + h * s};
      theta_star = {t0s, t0s + hs * (ss + one), t0s + hs, t0s + hs * ss};
      const FieldElement hh = h * hs;
      varphi = {hh * r, hh, hh * (r + s + ss)};
      phi = {hh * (r + s * (one + ss)), hh, hh * (r + ss * (one + s))};
      break;
    }
  }

  ParameterArray pa = make_parameter_array(std::move(theta), std::move(theta_star),
                                           std::move(varphi), std::move(phi));
  const ValidationReport rep = validate(pa);
  if (!rep.pass) {
    for (const auto& c : rep.conditions)
      if (!c.pass)
        fail(ErrorKind::InfeasibleParameters,
             std::string("case ") + to_string(cp.tag) + " parameters give an invalid array: " +
                 c.name + " fails (" + c.detail + ")");
  }
  return pa;
}

DerivedScalars derived_scalars(const ParameterArray& pa) {
  if (pa.theta[0] == pa.theta[pa.d])
    fail(ErrorKind::InvalidParameterArray, "theta_0 = theta_d, so vartheta is undefined");
  DerivedScalars out;
  out.vartheta = vartheta_from_definition(pa);
  if (pa.d < 3) return out;  // beta undetermined
  std::optional<FieldElement> common;
  for (int i = 2; i <= pa.d - 1; ++i) {
    const FieldElement den = pa.theta[i - 1] - pa.theta[i];
    const FieldElement den_star = pa.theta_star[i - 1] - pa.theta_star[i];
    if (den.is_zero() || den_star.is_zero())
      fail(ErrorKind::InvalidParameterArray,
           "consecutive eigenvalues coincide at i = " + std::to_string(i));
    const FieldElement ratio = (pa.theta[i - 2] - pa.theta[i + 1]) / den;
    const FieldElement ratio_star = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) / den_star;
    if (ratio != ratio_star)
      fail(ErrorKind::InvalidParameterArray,
           "plain and starred eigenvalue ratios differ at i = " + std::to_string(i));
    if (!common)
      common = ratio;
    else if (*common != ratio)
      fail(ErrorKind::InvalidParameterArray, "the eigenvalue ratio depends on i");
  }
  out.beta = *common - FieldElement::one(pa.field());
  return out;
}

std::vector<FieldElement> closed_form_vartheta(const CaseParams& cp) {
  const int d = cp.d;
  if (d < 1) fail(ErrorKind::DiameterTooSmall, "need d >= 1");
  const FieldSpecPtr& F = cp.field();
  const FieldElement one = FieldElement::one(F);
  auto K = [&](std::int64_t n) { return FieldElement::from_integer(n, F); };
  std::vector<FieldElement> vt;
  vt.reserve(d);
  switch (cp.tag) {
    case CaseTag::I:
    case CaseTag::IA: {
      const FieldElement& q = cp.at("q");
      if (q.is_zero()) fail(ErrorKind::CaseConstraintViolated, "closed form needs q != 0");
      const FieldElement den = (q - one) * (q.pow(d) - one);
      if (den.is_zero())
        fail(ErrorKind::CaseConstraintViolated, "closed form needs q != 1 and q^d != 1");
      for (int i = 1; i <= d; ++i)
        vt.push_back((q.pow(i) - one) * (q.pow(d - i + 1) - one) / den);
      break;
    }
    case CaseTag::II:
    case CaseTag::IIA:
    case CaseTag::IIB:
    case CaseTag::IIC: {
      const FieldElement dd = K(d);
      if (dd.is_zero())
        fail(ErrorKind::CaseConstraintViolated, "closed form needs d nonzero in the field");
      for (int i = 1; i <= d; ++i) vt.push_back(K(i) * K(d - i + 1) / dd);
      break;
    }
    case CaseTag::III: {
      if (d % 2 == 0) {
        const FieldElement dd = K(d);
        if (dd.is_zero())
          fail(ErrorKind::CaseConstraintViolated, "closed form needs d nonzero in the field");
        for (int i = 1; i <= d; ++i)
          vt.push_back(i % 2 == 0 ? K(i) / dd : K(d - i + 1) / dd);
      } else {
        for (int i = 1; i <= d; ++i) vt.push_back(i % 2 == 0 ? K(0) : one);
      }
      break;
    }
    case CaseTag::IV:
      for (int i = 1; i <= d; ++i) vt.push_back(i % 2 == 0 ? K(0) : one);
      break;
  }
  return vt;
}

bool how_related_check(const ParameterArray& pa) {
  const DerivedScalars ds = derived_scalars(pa);
  const FieldElement span = pa.theta[0] - pa.theta[pa.d];
  for (int i = 1; i <= pa.d; ++i) {
    const FieldElement rhs =
        (pa.theta_star[i] - pa.theta_star[i - 1]) * span * ds.vartheta[i - 1];
    if (pa.varphi[i - 1] - pa.phi[i - 1] != rhs) return false;
  }
  return true;
}

const char* to_string(CaseFamily f) {
  switch (f) {
    case CaseFamily::IFamily: return "I-family";
    case CaseFamily::IIFamily: return "II-family";
    case CaseFamily::III: return "III";
    case CaseFamily::IV: return "IV";
  }
  throw std::logic_error("unknown case family");
}

std::set<CaseFamily> case_family_of_beta(const ParameterArray& pa) {
  if (pa.d < 3) fail(ErrorKind::DiameterTooSmall, "beta is undetermined when d < 3");
  const FieldElement beta = *derived_scalars(pa).beta;
  const FieldSpecPtr& F = pa.field();
  auto K = [&](std::int64_t n) { return FieldElement::from_integer(n, F); };
  const FieldElement one = FieldElement::one(F);

  std::set<CaseFamily> out;
  if (beta == K(2)) out.insert(CaseFamily::IIFamily);
  if (beta == K(-2)) out.insert(CaseFamily::III);
  if (F->characteristic() == 2 && beta.is_zero() && pa.d == 3) out.insert(CaseFamily::IV);

  // The first family asks for q with q + 1/q = beta and q outside {0, 1, -1}.
  // Roots of q^2 - beta q + 1 multiply to 1, so q = 0 never occurs and q = 1
  // or q = -1 only when beta is 2 or -2.
  bool first_family = false;
  if (F->characteristic() == 2) {
    if (beta.is_zero()) {
      // All four beta values collide at 0; report the whole ambiguity set.
      first_family = true;
    } else {
      for (const FieldElement& q : enumerate_field(F, 16))
        if (q * q - beta * q + one == FieldElement::zero(F) && !q.is_zero() && q != one) {
          first_family = true;
          break;
        }
    }
  } else if (beta != K(2) && beta != K(-2)) {
    first_family = has_square_root(beta * beta - K(4));
  }
  if (first_family) out.insert(CaseFamily::IFamily);
  return out;
}

}  // namespace lk
