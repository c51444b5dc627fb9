#include "lk/cli.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lk/askey.hpp"

namespace lk {

namespace {

using Json = nlohmann::ordered_json;

const Json* get(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& need(const Json& obj, const char* key, const std::string& where) {
  const Json* v = get(obj, key);
  if (!v) fail(ErrorKind::ConfigParse, where + " needs key '" + key + "'");
  return *v;
}

void allow_keys(const Json& obj, const std::vector<const char*>& allowed,
                const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) fail(ErrorKind::ConfigParse, where + " does not take key '" + item.key() + "'");
  }
}

std::string need_string(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(ErrorKind::ConfigParse, where + " must be a string");
  return v.get<std::string>();
}

int need_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(ErrorKind::ConfigParse, where + " must be an integer");
  return v.get<int>();
}

bool need_bool(const Json& v, const std::string& where) {
  if (!v.is_boolean()) fail(ErrorKind::ConfigParse, where + " must be true or false");
  return v.get<bool>();
}

FieldElement need_scalar(const Json& v, const FieldSpecPtr& field, const std::string& where) {
  if (v.is_string()) return FieldElement::parse(v.get<std::string>(), field);
  if (v.is_number_integer()) return FieldElement::from_integer(v.get<std::int64_t>(), field);
  if (v.is_number_float())
    fail(ErrorKind::ConfigParse, where + " is a decimal float; write exact strings like \"4/3\"");
  if (v.is_array()) {
    std::vector<std::int64_t> coeffs;
    for (const auto& x : v) {
      if (!x.is_number_integer())
        fail(ErrorKind::ConfigParse, where + " coefficients must be integers");
      coeffs.push_back(x.get<std::int64_t>());
    }
    return FieldElement::from_coefficients(coeffs, field);
  }
  fail(ErrorKind::ConfigParse, where + " must be a string, an integer or a coefficient list");
}

FieldSpecPtr parse_field(const Json& v) {
  if (!v.is_object()) fail(ErrorKind::ConfigParse, "'field' must be an object");
  allow_keys(v, {"kind", "p", "modulus"}, "'field'");
  const std::string kind = need_string(need(v, "kind", "'field'"), "'field.kind'");
  if (kind == "rational") {
    if (get(v, "p") || get(v, "modulus"))
      fail(ErrorKind::ConfigParse, "the rational field takes no 'p' or 'modulus'");
    return FieldSpec::rationals();
  }
  const int p = need_int(need(v, "p", "'field'"), "'field.p'");
  if (kind == "prime") {
    if (get(v, "modulus")) fail(ErrorKind::ConfigParse, "a prime field takes no 'modulus'");
    return FieldSpec::prime(p);
  }
  if (kind == "extension") {
    const Json& mod = need(v, "modulus", "'field'");
    if (!mod.is_array())
      fail(ErrorKind::ConfigParse, "'field.modulus' must be an array of integers");
    std::vector<std::int64_t> coeffs;
    for (const auto& x : mod) {
      if (!x.is_number_integer())
        fail(ErrorKind::ConfigParse, "'field.modulus' must be an array of integers");
      coeffs.push_back(x.get<std::int64_t>());
    }
    return FieldSpec::extension(p, coeffs);
  }
  fail(ErrorKind::ConfigParse, "unknown field kind '" + kind + "'");
}

std::vector<std::pair<std::string, SystemEntry>> parse_systems(const Json& v,
                                                               const FieldSpecPtr& field) {
  if (!v.is_object()) fail(ErrorKind::ConfigParse, "'systems' must be an object of named systems");
  std::vector<std::pair<std::string, SystemEntry>> out;
  for (const auto& item : v.items()) {
    const std::string& name = item.key();
    const Json& body = item.value();
    const std::string where = "system '" + name + "'";
    if (!body.is_object()) fail(ErrorKind::ConfigParse, where + " must be an object");
    allow_keys(body, {"case", "raw"}, where);
    const Json* cs = get(body, "case");
    const Json* raw = get(body, "raw");
    if ((cs != nullptr) == (raw != nullptr))
      fail(ErrorKind::ConfigParse, where + " needs exactly one of 'case' or 'raw'");
    if (cs) {
      if (!cs->is_object()) fail(ErrorKind::ConfigParse, where + ".case must be an object");
      allow_keys(*cs, {"tag", "d", "params"}, where + ".case");
      const std::string tag_text = need_string(need(*cs, "tag", where + ".case"), where + ".case.tag");
      const auto tag = case_tag_from_string(tag_text);
      if (!tag) fail(ErrorKind::ConfigParse, where + ": unknown case tag '" + tag_text + "'");
      CaseParams cp;
      cp.tag = *tag;
      cp.d = need_int(need(*cs, "d", where + ".case"), where + ".case.d");
      const Json& params = need(*cs, "params", where + ".case");
      if (!params.is_object())
        fail(ErrorKind::ConfigParse, where + ".case.params must be an object");
      for (const auto& p : params.items())
        cp.named.emplace(p.key(),
                         need_scalar(p.value(), field, where + " parameter '" + p.key() + "'"));
      ParameterArray arr = instantiate(cp);
      out.push_back({name, SystemEntry{std::move(cp), std::move(arr)}});
    } else {
      if (!raw->is_object()) fail(ErrorKind::ConfigParse, where + ".raw must be an object");
      allow_keys(*raw, {"theta", "theta_star", "varphi", "phi"}, where + ".raw");
      const auto seq = [&](const char* key) {
        const Json& entries = need(*raw, key, where + ".raw");
        if (!entries.is_array())
          fail(ErrorKind::ConfigParse, where + ".raw." + key + " must be an array");
        std::vector<FieldElement> xs;
        for (const auto& x : entries)
          xs.push_back(need_scalar(x, field, where + ".raw." + key));
        return xs;
      };
      auto theta = seq("theta");
      auto theta_star = seq("theta_star");
      auto varphi = seq("varphi");
      auto phi = seq("phi");
      ParameterArray arr = make_parameter_array(std::move(theta), std::move(theta_star),
                                                std::move(varphi), std::move(phi));
      out.push_back({name, SystemEntry{std::nullopt, std::move(arr)}});
    }
  }
  return out;
}

bool usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConfigParse:
    case ErrorKind::EndpointOutOfRange:
    case ErrorKind::DenominatorVanishes:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::MismatchedField:
    case ErrorKind::UnsupportedField:
    case ErrorKind::DiameterTooSmall:
      return true;
    default:
      return false;
  }
}

void finish(Report& r) {
  r.exit_code = 0;
  for (const auto& v : r.verdicts)
    if (!v.pass) r.exit_code = 1;
}

std::string case_params_string(const CaseParams& cp) {
  std::string out = std::string("case ") + to_string(cp.tag) + ", d' = " + std::to_string(cp.d);
  for (const auto& name : case_parameter_names(cp.tag))
    out += ", " + name + " = " + cp.named.at(name).str();
  return out;
}

std::string witness_string(const DescentWitness& w) {
  return "xi* = " + w.xi_star.str() + ", zeta* = " + w.zeta_star.str();
}

void check_rho_range(int rho, int d, int d_prime) {
  if (rho < 0 || rho > d - d_prime)
    fail(ErrorKind::EndpointOutOfRange, "require 0 <= rho <= d - d'");
}

}  // namespace

const SystemEntry& JobConfig::entry(const std::string& name) const {
  for (const auto& [n, e] : systems)
    if (n == name) return e;
  fail(ErrorKind::ConfigParse, "no system named '" + name + "' in the config");
}

void Report::fact(const std::string& name, const std::string& value) {
  facts.emplace_back(name, value);
}

void Report::verdict(const std::string& name, bool pass, const std::string& detail) {
  verdicts.push_back({name, pass, detail});
}

const ConditionReport& Report::find_verdict(const std::string& name) const {
  for (const auto& c : verdicts)
    if (c.name == name) return c;
  throw std::out_of_range("no verdict named " + name);
}

JobConfig parse_job_config(const std::string& command, const std::string& config_text) {
  Json root;
  try {
    root = Json::parse(config_text);
  } catch (const std::exception& e) {
    fail(ErrorKind::ConfigParse, std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail(ErrorKind::ConfigParse, "the config must be a JSON object");

  std::vector<const char*> allowed = {"schema", "field", "systems"};
  if (command == "validate") {
    allowed.push_back("system");
    allowed.push_back("axioms");
  } else if (command == "descend") {
    allowed.push_back("source");
    allowed.push_back("target");
    allowed.push_back("rho");
    allowed.push_back("d_prime");
  } else if (command == "form") {
    allowed.push_back("source");
    allowed.push_back("target");
    allowed.push_back("rho");
    allowed.push_back("induce");
    allowed.push_back("chain");
    allowed.push_back("rhos");
  } else if (command == "ortho") {
    allowed.push_back("source");
    allowed.push_back("target");
    allowed.push_back("rho");
    allowed.push_back("indices");
    allowed.push_back("krawtchouk");
  } else {
    fail(ErrorKind::ConfigParse,
         "unknown command '" + command + "'; expected validate, descend, form or ortho");
  }
  allow_keys(root, allowed, "command " + command);

  const Json& schema = need(root, "schema", "the config");
  if (!schema.is_number_integer() || schema.get<int>() != 1)
    fail(ErrorKind::ConfigParse, "this tool reads schema 1 configs");

  JobConfig job;
  job.command = command;
  job.field = parse_field(need(root, "field", "the config"));
  if (const Json* v = get(root, "systems")) job.systems = parse_systems(*v, job.field);

  if (const Json* v = get(root, "system")) job.system = need_string(*v, "'system'");
  if (const Json* v = get(root, "axioms")) job.axioms = need_bool(*v, "'axioms'");
  if (const Json* v = get(root, "source")) job.source = need_string(*v, "'source'");
  if (const Json* v = get(root, "target")) job.target = need_string(*v, "'target'");
  if (const Json* v = get(root, "rho")) job.rho = need_int(*v, "'rho'");
  if (const Json* v = get(root, "d_prime")) job.d_prime = need_int(*v, "'d_prime'");
  if (const Json* v = get(root, "induce")) job.induce = need_bool(*v, "'induce'");
  if (const Json* v = get(root, "chain")) {
    if (!v->is_array()) fail(ErrorKind::ConfigParse, "'chain' must be an array of system names");
    for (const auto& x : *v) job.chain.push_back(need_string(x, "'chain' entries"));
  }
  if (const Json* v = get(root, "rhos")) {
    if (!v->is_array()) fail(ErrorKind::ConfigParse, "'rhos' must be an array of integers");
    for (const auto& x : *v) job.rhos.push_back(need_int(x, "'rhos' entries"));
  }
  if (const Json* v = get(root, "indices")) {
    if (!v->is_array() || v->size() != 2)
      fail(ErrorKind::ConfigParse, "'indices' must be a pair [i, j]");
    job.indices = std::make_pair(need_int((*v)[0], "'indices'"), need_int((*v)[1], "'indices'"));
  }
  if (const Json* v = get(root, "krawtchouk")) {
    if (!v->is_object()) fail(ErrorKind::ConfigParse, "'krawtchouk' must be an object");
    allow_keys(*v, {"d", "d_prime", "rho", "p"}, "'krawtchouk'");
    job.krawtchouk = JobConfig::KrawtchoukJob{
        need_int(need(*v, "d", "'krawtchouk'"), "'krawtchouk.d'"),
        need_int(need(*v, "d_prime", "'krawtchouk'"), "'krawtchouk.d_prime'"),
        need_int(need(*v, "rho", "'krawtchouk'"), "'krawtchouk.rho'"),
        need_scalar(need(*v, "p", "'krawtchouk'"), job.field, "'krawtchouk.p'")};
  }
  return job;
}

Report cmd_validate(const JobConfig& job) {
  Report r;
  r.command = "validate";
  if (!job.system) fail(ErrorKind::ConfigParse, "command validate needs key 'system'");
  const SystemEntry& se = job.entry(*job.system);
  r.fact("system", *job.system);
  r.fact("field", job.field->describe());
  r.fact("d", std::to_string(se.array.d));
  if (se.case_params) r.fact("case", to_string(se.case_params->tag));
  const ValidationReport rep = validate(se.array);
  for (const auto& c : rep.conditions) r.verdict(c.name, c.pass, c.detail);
  if (rep.pass) {
    const DerivedScalars ds = derived_scalars(se.array);
    r.fact("beta", ds.beta ? ds.beta->str() : "undetermined");
    if (job.axioms) {
      const AxiomReport ax = check_axioms(from_parameter_array(se.array));
      for (const auto& c : ax.conditions) r.verdict(c.name, c.pass, c.detail);
    }
  } else if (job.axioms) {
    r.notes.push_back("axiom checks skipped: the parameter array is invalid");
  }
  finish(r);
  return r;
}

Report cmd_descend(const JobConfig& job) {
  Report r;
  r.command = "descend";
  if (!job.source) fail(ErrorKind::ConfigParse, "command descend needs key 'source'");
  if (job.target.has_value() == job.d_prime.has_value())
    fail(ErrorKind::ConfigParse, "command descend needs exactly one of 'target' or 'd_prime'");
  const SystemEntry& src = job.entry(*job.source);
  const ParameterArray& pa = src.array;
  r.fact("source", *job.source);
  r.fact("field", job.field->describe());
  r.fact("d", std::to_string(pa.d));

  if (job.target) {
    const ParameterArray& pb = job.entry(*job.target).array;
    r.fact("target", *job.target);
    r.fact("d'", std::to_string(pb.d));
    if (job.rho) {
      check_rho_range(*job.rho, pa.d, pb.d);
      r.fact("rho", std::to_string(*job.rho));
      const auto w = is_descendent(pa, pb, *job.rho);
      if (w) {
        r.fact("xi_star", w->xi_star.str());
        r.fact("zeta_star", w->zeta_star.str());
        r.verdict("descendent", true);
        r.verdict("scalar identities", scalar_identities_check(pa, pb, *w));
      } else {
        r.verdict("descendent", false,
                  "the criterion has no witness at rho " + std::to_string(*job.rho));
      }
    } else {
      const std::vector<int> rhos = valid_rhos(pa, pb);
      bool identities = true;
      std::string set_text = "{";
      for (std::size_t idx = 0; idx < rhos.size(); ++idx) {
        const auto w = is_descendent(pa, pb, rhos[idx]);
        r.fact("rho " + std::to_string(rhos[idx]), witness_string(*w));
        identities = identities && scalar_identities_check(pa, pb, *w);
        set_text += (idx ? ", " : "") + std::to_string(rhos[idx]);
      }
      set_text += "}";
      r.verdict("descendent", !rhos.empty(),
                rhos.empty() ? "no endpoint admits a witness" : "valid rho set " + set_text);
      if (!rhos.empty()) r.verdict("scalar identities", identities);
    }
  } else {
    if (!src.case_params)
      fail(ErrorKind::ConfigParse, "command descend with 'd_prime' needs a case-mode source");
    const CaseParams& cp = *src.case_params;
    const int dp = *job.d_prime;
    if (dp < 1 || dp > cp.d) fail(ErrorKind::EndpointOutOfRange, "require 1 <= d' <= d");
    r.fact("d'", std::to_string(dp));
    std::vector<int> candidates;
    if (job.rho) {
      check_rho_range(*job.rho, cp.d, dp);
      candidates.push_back(*job.rho);
    } else {
      for (int rho = 0; rho <= cp.d - dp; ++rho) candidates.push_back(rho);
    }
    bool any = false;
    std::string reason;
    for (const int rho : candidates) {
      const std::string key = "rho " + std::to_string(rho);
      const AdmissibilityVerdict av = admissible(cp.tag, cp.d, dp, rho);
      if (!av.ok) {
        r.fact(key, "inadmissible: " + av.reason);
        if (reason.empty()) reason = av.reason;
        continue;
      }
      const auto found = existence_probe(cp, dp, rho);
      if (!found) {
        r.fact(key, "admissible, but the bounded search found no feasible parameters");
        if (reason.empty()) reason = "the bounded search found no feasible parameters";
        continue;
      }
      any = true;
      r.fact(key, "target " + case_params_string(*found));
      const auto w = is_descendent(pa, instantiate(*found), rho);
      if (w) r.fact(key + " witness", witness_string(*w));
    }
    if (any)
      r.verdict("occurs", true);
    else
      r.verdict("occurs", false, "does not occur: " + reason);
  }
  finish(r);
  return r;
}

Report cmd_form(const JobConfig& job) {
  Report r;
  r.command = "form";
  if (!job.chain.empty()) {
    if (job.source || job.target || job.rho || job.induce)
      fail(ErrorKind::ConfigParse, "compose mode takes only 'chain' and 'rhos'");
    if (job.chain.size() < 2)
      fail(ErrorKind::ConfigParse, "'chain' needs at least two system names");
    if (job.rhos.size() != job.chain.size() - 1)
      fail(ErrorKind::ConfigParse, "'rhos' needs one endpoint per chain step");
    std::vector<LeonardSystem> systems;
    systems.reserve(job.chain.size());
    std::string chain_text = job.chain[0];
    for (std::size_t i = 1; i < job.chain.size(); ++i) chain_text += " -> " + job.chain[i];
    for (const auto& name : job.chain)
      systems.push_back(from_parameter_array(job.entry(name).array));
    r.fact("chain", chain_text);
    r.fact("field", job.field->describe());
    std::optional<BalancedForm> acc;
    int rho_sum = 0;
    std::string sum_text;
    for (std::size_t i = 0; i + 1 < systems.size(); ++i) {
      BalancedForm step = build_balanced_form(systems[i], systems[i + 1], job.rhos[i]);
      rho_sum += job.rhos[i];
      sum_text += (i ? " + " : "") + std::to_string(job.rhos[i]);
      acc = acc ? compose(*acc, step) : std::move(step);
    }
    r.fact("endpoint", std::to_string(acc->rho));
    r.verdict("endpoint additivity", acc->rho == rho_sum,
              sum_text + " = " + std::to_string(rho_sum));
    const BalanceReport rep = check_balanced(*acc);
    for (const auto& c : rep.conditions) r.verdict(c.name, c.pass, c.detail);
    r.matrices.emplace_back("B", acc->B);
    finish(r);
    return r;
  }

  if (!job.source || !job.target || !job.rho)
    fail(ErrorKind::ConfigParse, "command form needs 'source', 'target' and 'rho'");
  const SystemEntry& se = job.entry(*job.source);
  const ParameterArray& pa = se.array;
  const ParameterArray& pb = job.entry(*job.target).array;
  const LeonardSystem src = from_parameter_array(pa);
  const LeonardSystem tgt = from_parameter_array(pb);
  const int rho = *job.rho;
  const BalancedForm form = build_balanced_form(src, tgt, rho);
  r.fact("source", *job.source);
  r.fact("target", *job.target);
  r.fact("field", job.field->describe());
  r.fact("d", std::to_string(pa.d));
  r.fact("d'", std::to_string(pb.d));
  r.fact("rho", std::to_string(rho));
  const auto w = is_descendent(pa, pb, rho);
  if (w) {
    r.fact("xi_star", w->xi_star.str());
    r.fact("zeta_star", w->zeta_star.str());
  }
  const ProjectionPair pp = projection_maps(form);
  r.fact("epsilon", pp.epsilon.str());
  FieldElement factor = FieldElement::one(job.field);
  for (int m = 1; m <= rho; ++m) factor *= pa.varphi[m - 1] / pa.phi[m - 1];
  r.fact("switching factor", factor.str());
  const int dim = balanced_space_dimension(src, tgt, rho);
  r.fact("uniqueness dimension", std::to_string(dim));
  const BalanceReport rep = check_balanced(form);
  for (const auto& c : rep.conditions) r.verdict(c.name, c.pass, c.detail);
  r.verdict("sigma", sigma_intertwine_check(form));
  r.verdict("dual objects", dual_objects_check(form));
  r.verdict("uniqueness", dim == 1, "the balanced space has dimension " + std::to_string(dim));
  if (job.induce) {
    if (!se.case_params) fail(ErrorKind::ConfigParse, "'induce' needs a case-mode source");
    std::vector<Subspace> u_decomp, u_star_decomp;
    for (int i = 0; i <= tgt.d; ++i) {
      u_decomp.push_back(Subspace::span_of_columns(tgt.E[i]));
      u_star_decomp.push_back(Subspace::span_of_columns(tgt.E_star[i]));
    }
    const LeonardSystem out = induce_descendent(*se.case_params, src, u_decomp, u_star_decomp,
                                                standard_coordinates_gram(form), rho);
    bool match = true;
    for (int i = 0; i <= tgt.d; ++i) {
      match = match && Subspace::span_of_columns(out.E[i]) == u_decomp[i];
      match = match && Subspace::span_of_columns(out.E_star[i]) == u_star_decomp[i];
    }
    r.verdict("induce", match, match ? "" : "the induced idempotent spans differ");
  }
  r.matrices.emplace_back("B", form.B);
  r.matrices.emplace_back("B standard", standard_coordinates_gram(form));
  finish(r);
  return r;
}

Report cmd_ortho(const JobConfig& job) {
  Report r;
  r.command = "ortho";
  if (job.krawtchouk) {
    if (job.source || job.target || job.rho || job.indices)
      fail(ErrorKind::ConfigParse, "krawtchouk mode takes no pair keys");
    const auto& kj = *job.krawtchouk;
    r.fact("field", job.field->describe());
    r.fact("d", std::to_string(kj.d));
    r.fact("d'", std::to_string(kj.d_prime));
    r.fact("rho", std::to_string(kj.rho));
    r.fact("p", kj.p.str());
    const bool ok = krawtchouk_identity_check(kj.d, kj.d_prime, kj.rho, kj.p);
    r.verdict("krawtchouk identity", ok, ok ? "" : "a sum outside the window is nonzero");
    finish(r);
    return r;
  }

  if (!job.source || !job.target || !job.rho)
    fail(ErrorKind::ConfigParse, "command ortho needs 'source', 'target' and 'rho'");
  const ParameterArray& pa = job.entry(*job.source).array;
  const ParameterArray& pb = job.entry(*job.target).array;
  const int rho = *job.rho;
  check_rho_range(rho, pa.d, pb.d);
  r.fact("source", *job.source);
  r.fact("target", *job.target);
  r.fact("field", job.field->describe());
  r.fact("d", std::to_string(pa.d));
  r.fact("d'", std::to_string(pb.d));
  r.fact("rho", std::to_string(rho));
  const int band = pa.d - pb.d;

  if (job.indices) {
    const auto [i, j] = *job.indices;
    const FieldElement s = orthogonality_sum(pa, pb, rho, i, j);
    r.fact("sum(" + std::to_string(i) + ", " + std::to_string(j) + ")", s.str());
    if (i < j || i > j + band)
      r.verdict("zero outside window", s.is_zero());
    else
      r.notes.push_back("(i, j) lies in the window, so the value is unconstrained");
    finish(r);
    return r;
  }

  r.fact("window", "j <= i <= j + " + std::to_string(band));
  bool all_zero = true;
  std::string offender;
  for (int i = 0; i <= pa.d; ++i) {
    std::string row;
    for (int j = 0; j <= pb.d; ++j) {
      const FieldElement s = orthogonality_sum(pa, pb, rho, i, j);
      const bool in_window = !(i < j || i > j + band);
      if (!in_window && !s.is_zero() && offender.empty()) {
        all_zero = false;
        offender = "nonzero at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
      row += (j ? " " : "") + s.str() + (in_window ? "*" : "");
    }
    r.fact("row " + std::to_string(i), row);
  }
  r.notes.push_back("'*' marks the window; every unmarked entry must vanish");
  r.verdict("zeros outside window", all_zero, offender);
  finish(r);
  return r;
}

Report run_command(const std::string& command, const std::string& config_text) {
  try {
    const JobConfig job = parse_job_config(command, config_text);
    if (command == "validate") return cmd_validate(job);
    if (command == "descend") return cmd_descend(job);
    if (command == "form") return cmd_form(job);
    return cmd_ortho(job);
  } catch (const Error& e) {
    Report r;
    r.command = command;
    r.notes.push_back(std::string("error: ") + e.what());
    r.exit_code = usage_error(e.kind()) ? 2 : 1;
    return r;
  } catch (const std::exception& e) {
    Report r;
    r.command = command;
    r.notes.push_back(std::string("error: ConfigParse: ") + e.what());
    r.exit_code = 2;
    return r;
  }
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [name, value] : r.facts) os << name << ": " << value << "\n";
  for (const auto& v : r.verdicts) {
    os << "check " << v.name << ": " << (v.pass ? "pass" : "fail");
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  for (const auto& [name, m] : r.matrices) {
    os << name << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << " ";
      for (std::size_t j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
      os << "\n";
    }
  }
  for (const auto& n : r.notes) os << n << "\n";
  os << "exit: " << r.exit_code << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  Json facts = Json::object();
  for (const auto& [name, value] : r.facts) facts[name] = value;
  out["facts"] = std::move(facts);
  Json checks = Json::array();
  for (const auto& v : r.verdicts)
    checks.push_back(Json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  out["checks"] = std::move(checks);
  Json mats = Json::object();
  for (const auto& [name, m] : r.matrices) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
      rows.push_back(std::move(row));
    }
    mats[name] = std::move(rows);
  }
  out["matrices"] = std::move(mats);
  out["notes"] = r.notes;
  out["exit_code"] = r.exit_code;
  return out.dump(2) + "\n";
}

}  // namespace lk
