#include "lk/leonard.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace lk {

namespace {

std::string entry(const char* base, int i) {
  return std::string(base) + "_" + std::to_string(i);
}

// Checks that the sequence of claimed idempotents resolves the identity for m
// with the listed eigenvalues. First failure goes into the report detail.
void check_resolution(const Matrix& m, const std::vector<Matrix>& es,
                      const std::vector<FieldElement>& eigenvalues, const char* sym,
                      ConditionReport& c) {
  const std::size_t n = m.rows();
  Matrix sum(n, n, m.field());
  for (std::size_t i = 0; i < es.size() && c.pass; ++i) {
    if (es[i] * es[i] != es[i]) {
      c.pass = false;
      c.detail = entry(sym, static_cast<int>(i)) + " is not idempotent";
      return;
    }
    sum = sum + es[i];
  }
  for (std::size_t i = 0; i < es.size() && c.pass; ++i)
    for (std::size_t j = 0; j < es.size() && c.pass; ++j)
      if (i != j && !(es[i] * es[j]).is_zero()) {
        c.pass = false;
        c.detail = entry(sym, static_cast<int>(i)) + " " + entry(sym, static_cast<int>(j)) +
                   " != 0";
        return;
      }
  if (sum != Matrix::identity(n, m.field())) {
    c.pass = false;
    c.detail = std::string("the ") + sym + " do not sum to the identity";
    return;
  }
  for (std::size_t i = 0; i < es.size(); ++i)
    if (m * es[i] != es[i].scaled(eigenvalues[i])) {
      c.pass = false;
      c.detail = entry(sym, static_cast<int>(i)) + " is not the eigenprojection for " +
                 eigenvalues[i].str();
      return;
    }
}

// The tridiagonal sandwich condition: p_i m p_j = 0 iff |i-j| > 1, != 0 iff
// |i-j| = 1. Collects every violation.
void check_sandwich(const Matrix& m, const std::vector<Matrix>& ps, const char* sym,
                    const char* msym, ConditionReport& c) {
  std::string violations;
  const int n = static_cast<int>(ps.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int gap = i > j ? i - j : j - i;
      if (gap == 0) continue;
      const bool zero = (ps[i] * m * ps[j]).is_zero();
      if (gap > 1 && !zero)
        violations += (violations.empty() ? "" : "; ") + entry(sym, i) + " " + msym + " " +
                      entry(sym, j) + " != 0";
      if (gap == 1 && zero)
        violations += (violations.empty() ? "" : "; ") + entry(sym, i) + " " + msym + " " +
                      entry(sym, j) + " = 0";
    }
  if (!violations.empty()) {
    c.pass = false;
    c.detail = violations;
  }
}

// v_0 spans E*_0 V; v_{i+1} = (A - theta_i I) v_i. Returns the superdiagonal
// of A* in this basis after verifying both matrices take their bidiagonal
// shapes there.
std::vector<FieldElement> split_superdiagonal(const LeonardSystem& ls) {
  const std::size_t n = ls.n();
  const FieldSpecPtr& F = ls.field();
  std::vector<FieldElement> v = first_nonzero_column(ls.E_star[0]);
  Matrix P(n, n, F);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) P.at(row, col) = v[row];
    if (col + 1 < n) {
      const Matrix vc = Matrix::column(v);
      v = (ls.A * vc - vc.scaled(ls.eigen[col])).column_vector(0);
    }
  }
  const RankKernelInverse rki = rank_kernel_inverse(P);
  if (!rki.inverse)
    fail(ErrorKind::DegenerateBasis, "the split-form vectors do not span the space");
  const Matrix At = *rki.inverse * ls.A * P;
  const Matrix Ast = *rki.inverse * ls.A_star * P;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      if (i == j)
        ok = (At.at(i, j) == ls.eigen[i]);
      else if (i == j + 1)
        ok = At.at(i, j).is_one();
      else
        ok = At.at(i, j).is_zero();
      if (!ok)
        fail(ErrorKind::DegenerateBasis, "the split basis does not bring A to bidiagonal form");
    }
  std::vector<FieldElement> superdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (Ast.at(i, j) != ls.eigen_star[i])
          fail(ErrorKind::DegenerateBasis,
               "the split basis does not bring A* to bidiagonal form");
      } else if (j == i + 1) {
        superdiag.push_back(Ast.at(i, j));
      } else if (!Ast.at(i, j).is_zero()) {
        fail(ErrorKind::DegenerateBasis, "the split basis does not bring A* to bidiagonal form");
      }
    }
  return superdiag;
}

}  // namespace

bool LeonardSystem::operator==(const LeonardSystem& o) const {
  return d == o.d && A == o.A && A_star == o.A_star && E == o.E && E_star == o.E_star &&
         eigen == o.eigen && eigen_star == o.eigen_star;
}

const ConditionReport& AxiomReport::condition(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::out_of_range("no condition named " + name);
}

LeonardSystem from_parameter_array(const ParameterArray& pa) {
  const ValidationReport rep = validate(pa);
  if (!rep.pass) {
    for (const auto& c : rep.conditions)
      if (!c.pass)
        fail(ErrorKind::InvalidParameterArray, c.name + " fails (" + c.detail + ")");
  }
  const FieldSpecPtr& F = pa.field();
  const std::size_t n = pa.theta.size();
  Matrix A(n, n, F), As(n, n, F);
  const FieldElement one = FieldElement::one(F);
  for (std::size_t i = 0; i < n; ++i) {
    A.at(i, i) = pa.theta[i];
    As.at(i, i) = pa.theta_star[i];
    if (i + 1 < n) {
      A.at(i + 1, i) = one;
      As.at(i, i + 1) = pa.varphi[i];
    }
  }
  LeonardSystem ls;
  ls.d = pa.d;
  ls.A = A;
  ls.A_star = As;
  ls.eigen = pa.theta;
  ls.eigen_star = pa.theta_star;
  ls.E = lagrange_idempotents(A, pa.theta);
  ls.E_star = lagrange_idempotents(As, pa.theta_star);
  return ls;
}

AxiomReport check_axioms(const LeonardSystem& ls) {
  AxiomReport rep;
  const std::size_t n = ls.n();
  bool shapes_ok = ls.d >= 1 && ls.A.rows() == n && ls.A.cols() == n &&
                   ls.A_star.rows() == n && ls.A_star.cols() == n && ls.E.size() == n &&
                   ls.E_star.size() == n && ls.eigen.size() == n && ls.eigen_star.size() == n;
  if (shapes_ok)
    for (const auto& seq : {ls.E, ls.E_star})
      for (const Matrix& m : seq) shapes_ok = shapes_ok && m.rows() == n && m.cols() == n;
  if (!shapes_ok) {
    for (const char* name : {"LS1", "LS2", "LS3", "LS4", "LS5"})
      rep.conditions.push_back({name, false, "system shapes are inconsistent"});
    rep.pass = false;
    return rep;
  }

  {
    ConditionReport c{"LS1", true, ""};
    for (std::size_t i = 0; i < n && c.pass; ++i)
      for (std::size_t j = i + 1; j < n && c.pass; ++j) {
        if (ls.eigen[i] == ls.eigen[j]) {
          c.pass = false;
          c.detail = entry("theta", static_cast<int>(i)) + " = " +
                     entry("theta", static_cast<int>(j));
        } else if (ls.eigen_star[i] == ls.eigen_star[j]) {
          c.pass = false;
          c.detail = entry("theta*", static_cast<int>(i)) + " = " +
                     entry("theta*", static_cast<int>(j));
        }
      }
    if (c.pass) {
      Matrix prod = Matrix::identity(n, ls.field());
      for (std::size_t i = 0; i < n; ++i)
        prod = prod * (ls.A - Matrix::identity(n, ls.field()).scaled(ls.eigen[i]));
      Matrix prod_star = Matrix::identity(n, ls.field());
      for (std::size_t i = 0; i < n; ++i)
        prod_star =
            prod_star * (ls.A_star - Matrix::identity(n, ls.field()).scaled(ls.eigen_star[i]));
      if (!prod.is_zero()) {
        c.pass = false;
        c.detail = "A is not annihilated by its listed eigenvalue factors";
      } else if (!prod_star.is_zero()) {
        c.pass = false;
        c.detail = "A* is not annihilated by its listed eigenvalue factors";
      }
    }
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      if (ls.E[i].is_zero()) {
        c.pass = false;
        c.detail = entry("E", static_cast<int>(i)) + " = 0";
      } else if (ls.E_star[i].is_zero()) {
        c.pass = false;
        c.detail = entry("E*", static_cast<int>(i)) + " = 0";
      }
    }
    rep.conditions.push_back(c);
  }

  {
    ConditionReport c{"LS2", true, ""};
    check_resolution(ls.A, ls.E, ls.eigen, "E", c);
    rep.conditions.push_back(c);
  }
  {
    ConditionReport c{"LS3", true, ""};
    check_resolution(ls.A_star, ls.E_star, ls.eigen_star, "E*", c);
    rep.conditions.push_back(c);
  }
  {
    ConditionReport c{"LS4", true, ""};
    check_sandwich(ls.A, ls.E_star, "E*", "A", c);
    rep.conditions.push_back(c);
  }
  {
    ConditionReport c{"LS5", true, ""};
    check_sandwich(ls.A_star, ls.E, "E", "A*", c);
    rep.conditions.push_back(c);
  }

  rep.pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                         [](const ConditionReport& c) { return c.pass; });
  return rep;
}

std::vector<D4Gen> parse_d4_word(const std::string& text) {
  std::vector<D4Gen> out;
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (ch == '*') {
      out.push_back(D4Gen::Star);
      ++i;
    } else if (ch == 'v') {
      out.push_back(D4Gen::Down);
      ++i;
    } else if (ch == 'V') {
      out.push_back(D4Gen::DoubleDown);
      ++i;
    } else if (text.compare(i, 3, "\xE2\x86\x93") == 0) {  // down arrow
      out.push_back(D4Gen::Down);
      i += 3;
    } else if (text.compare(i, 3, "\xE2\x87\x93") == 0) {  // double down arrow
      out.push_back(D4Gen::DoubleDown);
      i += 3;
    } else {
      fail(ErrorKind::ConfigParse, "unrecognized symmetry symbol in '" + text + "'");
    }
  }
  return out;
}

LeonardSystem d4_apply(const LeonardSystem& ls, const std::vector<D4Gen>& word) {
  LeonardSystem cur = ls;
  for (const D4Gen g : word) {
    switch (g) {
      case D4Gen::Star:
        std::swap(cur.A, cur.A_star);
        std::swap(cur.E, cur.E_star);
        std::swap(cur.eigen, cur.eigen_star);
        break;
      case D4Gen::Down:
        std::reverse(cur.E_star.begin(), cur.E_star.end());
        std::reverse(cur.eigen_star.begin(), cur.eigen_star.end());
        break;
      case D4Gen::DoubleDown:
        std::reverse(cur.E.begin(), cur.E.end());
        std::reverse(cur.eigen.begin(), cur.eigen.end());
        break;
    }
  }
  return cur;
}

LeonardSystem d4_apply(const LeonardSystem& ls, const std::string& word) {
  return d4_apply(ls, parse_d4_word(word));
}

LeonardSystem affine_transform(const LeonardSystem& ls, const FieldElement& xi,
                               const FieldElement& zeta, const FieldElement& xi_star,
                               const FieldElement& zeta_star) {
  if (xi.is_zero() || xi_star.is_zero())
    fail(ErrorKind::ZeroScale, "affine scale factors must be nonzero");
  const Matrix I = Matrix::identity(ls.n(), ls.field());
  LeonardSystem out = ls;
  out.A = ls.A.scaled(xi) + I.scaled(zeta);
  out.A_star = ls.A_star.scaled(xi_star) + I.scaled(zeta_star);
  for (std::size_t i = 0; i < ls.n(); ++i) {
    out.eigen[i] = xi * ls.eigen[i] + zeta;
    out.eigen_star[i] = xi_star * ls.eigen_star[i] + zeta_star;
  }
  return out;
}

ParameterArray extract_parameter_array(const LeonardSystem& ls) {
  std::vector<FieldElement> varphi = split_superdiagonal(ls);
  std::vector<FieldElement> phi =
      split_superdiagonal(d4_apply(ls, std::vector<D4Gen>{D4Gen::DoubleDown}));
  return make_parameter_array(ls.eigen, ls.eigen_star, std::move(varphi), std::move(phi));
}

std::pair<FieldElement, std::vector<FieldElement>> nu_and_k(const LeonardSystem& ls) {
  const FieldElement t0 = (ls.E_star[0] * ls.E[0]).trace();
  if (t0.is_zero()) fail(ErrorKind::ZeroTrace, "trace(E*_0 E_0) = 0");
  const FieldElement nu = t0.inverse();
  std::vector<FieldElement> k;
  k.reserve(ls.n());
  for (std::size_t i = 0; i < ls.n(); ++i) {
    const FieldElement t = (ls.E_star[i] * ls.E[0]).trace();
    if (t.is_zero())
      fail(ErrorKind::ZeroTrace, "trace(" + entry("E*", static_cast<int>(i)) + " E_0) = 0");
    k.push_back(t * nu);
  }
  return {nu, k};
}

Matrix dual_switching_element(const LeonardSystem& ls) {
  const ParameterArray pa = extract_parameter_array(ls);
  Matrix S = ls.E_star[0];
  FieldElement c = FieldElement::one(ls.field());
  for (int l = 1; l <= ls.d; ++l) {
    c = c * pa.phi[l - 1] / pa.varphi[l - 1];
    S = S + ls.E_star[l].scaled(c);
  }
  return S;
}

Matrix StandardForm::gram_standard() const {
  const Matrix inv = *rank_kernel_inverse(basis).inverse;
  return inv.transpose() * G * inv;
}

StandardForm standard_form(const LeonardSystem& ls) {
  const std::size_t n = ls.n();
  const std::vector<FieldElement> u = first_nonzero_column(ls.E[0]);
  const Matrix ucol = Matrix::column(u);
  Matrix P(n, n, ls.field());
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix col = ls.E_star[j] * ucol;
    for (std::size_t i = 0; i < n; ++i) P.at(i, j) = col.at(i, 0);
  }
  const RankKernelInverse rki = rank_kernel_inverse(P);
  if (!rki.inverse)
    fail(ErrorKind::DegenerateBasis, "the vectors E*_i u do not form a basis");
  auto [nu, k] = nu_and_k(ls);
  Matrix G = Matrix::diagonal(k);
  const Matrix At = *rki.inverse * ls.A * P;
  const Matrix Ast = *rki.inverse * ls.A_star * P;
  if (G * At != At.transpose() * G || G * Ast != Ast.transpose() * G)
    fail(ErrorKind::DegenerateBasis, "the form fails its defining symmetry in the E*_i u basis");
  return StandardForm(std::move(G), std::move(P), u, nu, k);
}

bool span_filtration_check(const LeonardSystem& ls) {
  Subspace lhs = Subspace::span_of_columns(ls.E_star[0]);
  Subspace rhs = lhs;
  Matrix power = ls.E_star[0];
  for (int i = 0; i <= ls.d; ++i) {
    if (i > 0) {
      lhs = lhs + Subspace::span_of_columns(ls.E_star[i]);
      power = ls.A * power;
      rhs = rhs + Subspace::span_of_columns(power);
    }
    if (lhs != rhs) return false;
  }
  return lhs.dim() == ls.n();
}

}  // namespace lk
