#include "lk/balanced_form.hpp"

#include <utility>

#include "lk/error.hpp"

namespace lk {

namespace {

Matrix inverse_of(const Matrix& m, const char* what) {
  auto rki = rank_kernel_inverse(m);
  if (!rki.inverse) fail(ErrorKind::DegenerateBasis, std::string(what) + " is not invertible");
  return *rki.inverse;
}

FieldElement pair_value(const std::vector<FieldElement>& x, const Matrix& m,
                        const std::vector<FieldElement>& y) {
  FieldElement acc = FieldElement::zero(m.field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc = acc + x[i] * m.at(i, j) * y[j];
  }
  return acc;
}

std::string at_entry(int i, int j) {
  return "fails at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// (E*_i V | E*'_j V') = 0 whenever i - endpoint != j, measured on spanning
// vectors of the idempotent images in standard coordinates.
bool star_support_ok(const Matrix& m_std, const LeonardSystem& s, const LeonardSystem& t,
                     int endpoint, std::string& detail) {
  for (int i = 0; i <= s.d; ++i) {
    auto x = first_nonzero_column(s.E_star[static_cast<std::size_t>(i)]);
    for (int j = 0; j <= t.d; ++j) {
      if (i - endpoint == j) continue;
      auto y = first_nonzero_column(t.E_star[static_cast<std::size_t>(j)]);
      if (!pair_value(x, m_std, y).is_zero()) {
        detail = at_entry(i, j);
        return false;
      }
    }
  }
  return true;
}

// (E_i V | E'_j V') = 0 whenever i < j or i > j + d - d'.
bool window_ok(const Matrix& m_std, const LeonardSystem& s, const LeonardSystem& t,
               std::string& detail) {
  for (int i = 0; i <= s.d; ++i) {
    auto x = first_nonzero_column(s.E[static_cast<std::size_t>(i)]);
    for (int j = 0; j <= t.d; ++j) {
      if (i >= j && i <= j + s.d - t.d) continue;
      auto y = first_nonzero_column(t.E[static_cast<std::size_t>(j)]);
      if (!pair_value(x, m_std, y).is_zero()) {
        detail = at_entry(i, j);
        return false;
      }
    }
  }
  return true;
}

std::vector<FieldElement> ones(std::size_t n, const FieldSpecPtr& f) {
  return std::vector<FieldElement>(n, FieldElement::one(f));
}

Matrix conjugated(const Matrix& c, const Matrix& m, const Matrix& c_inv) {
  return c * m * c_inv;
}

}  // namespace

BalancedForm::BalancedForm(LeonardSystem src, LeonardSystem tgt, int rho_, Matrix b)
    : source(std::move(src)), target(std::move(tgt)), rho(rho_), B(std::move(b)) {
  if (!same_field(source.field(), target.field()) || !same_field(source.field(), B.field()))
    fail(ErrorKind::MismatchedField, "the two systems and the pairing must share one field");
  if (B.rows() != source.n() || B.cols() != target.n())
    fail(ErrorKind::ShapeMismatch, "the pairing must be (d + 1) x (d' + 1)");
  if (rho < 0 || rho > source.d - target.d)
    fail(ErrorKind::EndpointOutOfRange, "the endpoint must lie between 0 and d - d'");
}

BalancedForm build_balanced_form(const LeonardSystem& source, const LeonardSystem& target,
                                 int rho) {
  if (!same_field(source.field(), target.field()))
    fail(ErrorKind::MismatchedField, "the two systems must live over one field");
  if (target.d > source.d || rho < 0 || rho > source.d - target.d)
    fail(ErrorKind::EndpointOutOfRange, "the endpoint must lie between 0 and d - d'");
  const auto pa = extract_parameter_array(source);
  const auto pa_prime = extract_parameter_array(target);
  if (!is_descendent(pa, pa_prime, rho))
    fail(ErrorKind::NotADescendent,
         "the target is not a descendent of the source at endpoint " + std::to_string(rho));
  const auto k_prime = nu_and_k(target).second;
  Matrix b(source.n(), target.n(), source.field());
  for (int j = 0; j <= target.d; ++j)
    b.at(static_cast<std::size_t>(rho + j), static_cast<std::size_t>(j)) =
        k_prime[static_cast<std::size_t>(j)];
  return BalancedForm(source, target, rho, std::move(b));
}

Matrix standard_coordinates_gram(const BalancedForm& form) {
  const Matrix p = standard_form(form.source).basis;
  const Matrix p_prime = standard_form(form.target).basis;
  return inverse_of(p, "the source split basis").transpose() * form.B *
         inverse_of(p_prime, "the target split basis");
}

const ConditionReport& BalanceReport::condition(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::out_of_range("no condition named " + name);
}

BalanceReport check_balanced(const BalancedForm& form) {
  const int d = form.source.d;
  const int d_prime = form.target.d;
  BalanceReport rep;

  {
    ConditionReport c{"nonzero", !form.B.is_zero(), ""};
    if (!c.pass) c.detail = "the pairing is identically zero";
    rep.conditions.push_back(c);
  }

  {
    ConditionReport c{"B1", true, ""};
    for (int i = 0; i <= d && c.pass; ++i)
      for (int j = 0; j <= d_prime && c.pass; ++j) {
        if (i - form.rho == j) continue;
        if (!form.B.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) {
          c.pass = false;
          c.detail = at_entry(i, j);
        }
      }
    rep.conditions.push_back(c);
  }

  const Matrix m_std = standard_coordinates_gram(form);

  {
    ConditionReport c{"B2", true, ""};
    c.pass = window_ok(m_std, form.source, form.target, c.detail);
    rep.conditions.push_back(c);
  }

  {
    ConditionReport c{"rank", true, ""};
    const std::size_t r = rank_kernel_inverse(form.B).rank;
    if (r != form.target.n()) {
      c.pass = false;
      c.detail = "rank " + std::to_string(r) + ", expected " + std::to_string(form.target.n());
    }
    rep.conditions.push_back(c);
  }

  // The same pairing must stay balanced for the relabelled systems, with the
  // endpoint trading rho for d - d' - rho when the dual orderings reverse.
  const struct {
    const char* word;
    int endpoint;
  } pairs[] = {{"v", d - d_prime - form.rho}, {"V", form.rho}, {"vV", d - d_prime - form.rho}};
  for (const auto& pr : pairs) {
    ConditionReport c{std::string("pair ") + pr.word, true, ""};
    const LeonardSystem s = d4_apply(form.source, pr.word);
    const LeonardSystem t = d4_apply(form.target, pr.word);
    std::string where;
    if (!star_support_ok(m_std, s, t, pr.endpoint, where)) {
      c.pass = false;
      c.detail = "B1 " + where;
    } else if (!window_ok(m_std, s, t, where)) {
      c.pass = false;
      c.detail = "B2 " + where;
    }
    rep.conditions.push_back(c);
  }

  rep.pass = true;
  for (const auto& c : rep.conditions) rep.pass = rep.pass && c.pass;
  return rep;
}

bool sigma_intertwine_check(const BalancedForm& form) {
  const Matrix m_std = standard_coordinates_gram(form);
  const Matrix zero(form.source.n(), form.target.n(), form.source.field());
  for (int i = 0; i <= form.source.d; ++i) {
    const Matrix lhs = form.source.E_star[static_cast<std::size_t>(i)].transpose() * m_std;
    const int j = i - form.rho;
    const Matrix rhs = (j >= 0 && j <= form.target.d)
                           ? m_std * form.target.E_star[static_cast<std::size_t>(j)]
                           : zero;
    if (lhs != rhs) return false;
  }
  return true;
}

ProjectionPair projection_maps(const BalancedForm& form) {
  const StandardForm sf = standard_form(form.source);
  const StandardForm sf_prime = standard_form(form.target);
  Matrix proj = inverse_of(sf_prime.G, "the target Gram matrix") * form.B.transpose();
  Matrix proj_prime = inverse_of(sf.G, "the source Gram matrix") * form.B;

  // u has all-ones coordinates in the basis {E*_i u}, and likewise u'; the
  // image of u must land on u' up to the scalar epsilon.
  const auto image = proj * Matrix::column(ones(form.source.n(), form.source.field()));
  FieldElement epsilon = image.at(0, 0);
  bool onto = !epsilon.is_zero();
  for (std::size_t i = 1; i < image.rows() && onto; ++i) onto = image.at(i, 0) == epsilon;
  if (!onto)
    fail(ErrorKind::HypothesisViolated,
         "the base eigenspace of the source does not project onto that of the target");

  if (rank_kernel_inverse(proj_prime).rank != form.target.n())
    fail(ErrorKind::HypothesisViolated, "the target-to-source projection is not injective");

  return ProjectionPair{std::move(proj), std::move(proj_prime), std::move(epsilon)};
}

bool dual_objects_check(const BalancedForm& form) {
  const auto pa = extract_parameter_array(form.source);
  const auto pa_prime = extract_parameter_array(form.target);
  const auto witness = is_descendent(pa, pa_prime, form.rho);
  if (!witness) return false;
  const auto& f = form.source.field();
  const std::size_t n_prime = form.target.n();

  Matrix a_star_sigma(n_prime, n_prime, f);
  for (int j = 0; j <= form.target.d; ++j)
    a_star_sigma =
        a_star_sigma + form.target.E_star[static_cast<std::size_t>(j)].scaled(
                           pa.theta_star[static_cast<std::size_t>(form.rho + j)]);
  const Matrix a_star_expected =
      a_star_sigma.scaled(witness->xi_star) +
      Matrix::identity(n_prime, f).scaled(witness->zeta_star);
  if (form.target.A_star != a_star_expected) return false;

  // c_l = (phi_1 ... phi_l)/(varphi_1 ... varphi_l), the split-basis
  // coefficients of the dual switching element of the source.
  std::vector<FieldElement> c{FieldElement::one(f)};
  for (int l = 1; l <= form.source.d; ++l)
    c.push_back(c.back() * pa.phi[static_cast<std::size_t>(l - 1)] /
                pa.varphi[static_cast<std::size_t>(l - 1)]);
  FieldElement factor = FieldElement::one(f);
  for (int m = 1; m <= form.rho; ++m)
    factor = factor * pa.varphi[static_cast<std::size_t>(m - 1)] /
             pa.phi[static_cast<std::size_t>(m - 1)];

  Matrix s_star_sigma(n_prime, n_prime, f);
  for (int j = 0; j <= form.target.d; ++j)
    s_star_sigma = s_star_sigma + form.target.E_star[static_cast<std::size_t>(j)].scaled(
                                      c[static_cast<std::size_t>(form.rho + j)]);
  return dual_switching_element(form.target) == s_star_sigma.scaled(factor);
}

BalancedForm compose(const BalancedForm& first, const BalancedForm& second) {
  if (first.target != second.source)
    fail(ErrorKind::MiddleSystemMismatch,
         "the target of the first pairing must equal the source of the second");
  const Matrix g_mid_inv = inverse_of(standard_form(first.target).G, "the middle Gram matrix");
  BalancedForm out(first.source, second.target, first.rho + second.rho,
                   first.B * g_mid_inv * second.B);
  if (!check_balanced(out).pass)
    fail(ErrorKind::HypothesisViolated, "the composite pairing fails the balance checks");
  return out;
}

int balanced_space_dimension(const LeonardSystem& source, const LeonardSystem& target, int rho) {
  if (!same_field(source.field(), target.field()))
    fail(ErrorKind::MismatchedField, "the two systems must live over one field");
  if (target.d > source.d || rho < 0 || rho > source.d - target.d)
    fail(ErrorKind::EndpointOutOfRange, "the endpoint must lie between 0 and d - d'");
  const auto& f = source.field();
  const std::size_t n = source.n(), n_prime = target.n();
  const std::size_t vars = n * n_prime;
  const auto slot = [n_prime](std::size_t i, std::size_t j) { return i * n_prime + j; };

  std::vector<std::vector<FieldElement>> rows;
  const std::vector<FieldElement> zero_row(vars, FieldElement::zero(f));

  // Support pattern: every entry off the shifted diagonal vanishes.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n_prime; ++j) {
      if (static_cast<int>(i) - rho == static_cast<int>(j)) continue;
      auto row = zero_row;
      row[slot(i, j)] = FieldElement::one(f);
      rows.push_back(std::move(row));
    }

  // Window pattern, written out against the split bases: the pairing of
  // spanning vectors of E_i V and E'_j V' is linear in the entries.
  const Matrix p_inv = inverse_of(standard_form(source).basis, "the source split basis");
  const Matrix p_prime_inv = inverse_of(standard_form(target).basis, "the target split basis");
  for (int i = 0; i <= source.d; ++i) {
    const auto a =
        p_inv * Matrix::column(first_nonzero_column(source.E[static_cast<std::size_t>(i)]));
    for (int j = 0; j <= target.d; ++j) {
      if (i >= j && i <= j + source.d - target.d) continue;
      const auto c = p_prime_inv *
                     Matrix::column(first_nonzero_column(target.E[static_cast<std::size_t>(j)]));
      auto row = zero_row;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n_prime; ++l) row[slot(k, l)] = a.at(k, 0) * c.at(l, 0);
      rows.push_back(std::move(row));
    }
  }

  if (rows.empty()) return static_cast<int>(vars);
  const auto ech = reduced_echelon(Matrix::from_rows(rows));
  return static_cast<int>(vars - ech.rank);
}

LeonardSystem induce_descendent(const CaseParams& source_params, const LeonardSystem& source,
                                const std::vector<Subspace>& u_decomp,
                                const std::vector<Subspace>& u_star_decomp, const Matrix& b_raw,
                                int rho) {
  const auto& f = source.field();
  const int d = source.d;
  if (u_decomp.empty() || u_decomp.size() != u_star_decomp.size())
    fail(ErrorKind::ShapeMismatch, "the two decompositions must have equal positive length");
  const int d_prime = static_cast<int>(u_decomp.size()) - 1;
  const std::size_t n_prime = u_decomp.size();
  if (b_raw.rows() != source.n() || b_raw.cols() != n_prime)
    fail(ErrorKind::ShapeMismatch, "the pairing must be (d + 1) x (d' + 1)");
  if (!same_field(b_raw.field(), f))
    fail(ErrorKind::MismatchedField, "the pairing must live over the field of the source");
  if (d_prime > d || rho < 0 || rho > d - d_prime)
    fail(ErrorKind::EndpointOutOfRange, "the endpoint must lie between 0 and d - d'");

  for (const auto* decomp : {&u_decomp, &u_star_decomp}) {
    Matrix stack(n_prime, n_prime, f);
    for (std::size_t j = 0; j < n_prime; ++j) {
      const Subspace& sub = (*decomp)[j];
      if (!same_field(sub.field(), f) || sub.ambient() != n_prime || sub.dim() != 1)
        fail(ErrorKind::DegenerateBasis, "each summand must be a line in K^{d'+1}");
      for (std::size_t l = 0; l < n_prime; ++l) stack.at(j, l) = sub.basis().at(0, l);
    }
    if (rank_kernel_inverse(stack).rank != n_prime)
      fail(ErrorKind::DegenerateBasis, "the subspaces do not form a direct sum decomposition");
  }

  if (instantiate(source_params) != extract_parameter_array(source))
    fail(ErrorKind::ConfigParse, "the case parameters do not describe the source system");
  const auto verdict = admissible(source_params.tag, d, d_prime, rho);
  if (!verdict.ok) fail(ErrorKind::NotAdmissible, verdict.reason);

  for (int i = 0; i <= d; ++i) {
    const auto x = first_nonzero_column(source.E_star[static_cast<std::size_t>(i)]);
    for (int j = 0; j <= d_prime; ++j) {
      if (i - rho == j) continue;
      if (!pair_value(x, b_raw, u_star_decomp[static_cast<std::size_t>(j)].basis().row_vector(0))
               .is_zero())
        fail(ErrorKind::HypothesisViolated, "hypothesis (i) " + at_entry(i, j));
    }
  }
  for (int i = 0; i <= d; ++i) {
    const auto x = first_nonzero_column(source.E[static_cast<std::size_t>(i)]);
    for (int j = 0; j <= d_prime; ++j) {
      if (i >= j && i <= j + d - d_prime) continue;
      if (!pair_value(x, b_raw, u_decomp[static_cast<std::size_t>(j)].basis().row_vector(0))
               .is_zero())
        fail(ErrorKind::HypothesisViolated, "hypothesis (ii) " + at_entry(i, j));
    }
  }
  {
    const std::size_t r = rank_kernel_inverse(b_raw).rank;
    if (r != n_prime)
      fail(ErrorKind::HypothesisViolated,
           "hypothesis (iii) fails: the pairing has rank " + std::to_string(r));
  }

  // Reconstruction: take any descendent with the right diameter and endpoint,
  // rebuild its canonical pairing, and line it up with the given one by a
  // change of basis on the small module.
  const auto probe = existence_probe(source_params, d_prime, rho);
  if (!probe)
    fail(ErrorKind::NotADescendent,
         "no descendent with diameter " + std::to_string(d_prime) + " at endpoint " +
             std::to_string(rho) + " was found");
  const LeonardSystem probe_sys = from_parameter_array(instantiate(*probe));
  const BalancedForm probe_form = build_balanced_form(source, probe_sys, rho);

  const Matrix g_inv = inverse_of(standard_form(source).gram_standard(), "the source Gram matrix");
  const Matrix adj_probe = g_inv * standard_coordinates_gram(probe_form);
  const Matrix adj_raw = g_inv * b_raw;
  const auto c_opt = solve_linear(adj_raw, adj_probe);
  if (!c_opt)
    fail(ErrorKind::NotADescendent, "internal error: the projection ranges do not match");
  const Matrix c = *c_opt;
  const auto c_rki = rank_kernel_inverse(c);
  if (!c_rki.inverse)
    fail(ErrorKind::NotADescendent, "internal error: the change of basis is singular");
  const Matrix& c_inv = *c_rki.inverse;

  LeonardSystem out;
  out.d = d_prime;
  out.A = conjugated(c, probe_sys.A, c_inv);
  out.A_star = conjugated(c, probe_sys.A_star, c_inv);
  for (std::size_t i = 0; i < n_prime; ++i) {
    out.E.push_back(conjugated(c, probe_sys.E[i], c_inv));
    out.E_star.push_back(conjugated(c, probe_sys.E_star[i], c_inv));
  }
  out.eigen = probe_sys.eigen;
  out.eigen_star = probe_sys.eigen_star;

  for (std::size_t i = 0; i < n_prime; ++i) {
    if (Subspace::span_of_columns(out.E[i]) != u_decomp[i] ||
        Subspace::span_of_columns(out.E_star[i]) != u_star_decomp[i])
      fail(ErrorKind::NotADescendent,
           "internal error: the induced system does not match the decompositions");
  }

  const Matrix b_split =
      standard_form(source).basis.transpose() * b_raw * standard_form(out).basis;
  if (!check_balanced(BalancedForm(source, out, rho, b_split)).pass)
    fail(ErrorKind::NotADescendent, "internal error: the given pairing is not balanced");

  Subspace star_window = Subspace::span_of_columns(source.E_star[static_cast<std::size_t>(rho)]);
  for (int l = rho + 1; l <= rho + d_prime; ++l)
    star_window = star_window + Subspace::span_of_columns(source.E_star[static_cast<std::size_t>(l)]);
  for (int i = 0; i <= d_prime; ++i) {
    Subspace window = Subspace::span_of_columns(source.E[static_cast<std::size_t>(i)]);
    for (int l = i + 1; l <= i + d - d_prime; ++l)
      window = window + Subspace::span_of_columns(source.E[static_cast<std::size_t>(l)]);
    if (Subspace::intersect(star_window, window).dim() != 1)
      fail(ErrorKind::NotADescendent, "internal error: the span intersection is not a line");
  }

  return out;
}

}  // namespace lk
