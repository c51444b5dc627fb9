#include "lk/askey.hpp"

#include <utility>

#include "lk/descent.hpp"
#include "lk/error.hpp"

namespace lk {

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t out = 1;
  for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

std::vector<Polynomial> dual_u_polynomials(const ParameterArray& pa) {
  return u_polynomials(extract_parameter_array(d4_apply(from_parameter_array(pa), "*")));
}

}  // namespace

Polynomial::Polynomial(std::vector<FieldElement> c) : coeffs(std::move(c)) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
}

int Polynomial::degree() const {
  if (coeffs.size() == 1 && coeffs.front().is_zero()) return -1;
  return static_cast<int>(coeffs.size()) - 1;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = coeffs.back();
  for (std::size_t t = coeffs.size() - 1; t-- > 0;) acc = acc * x + coeffs[t];
  return acc;
}

std::vector<Polynomial> u_polynomials(const ParameterArray& pa) {
  const auto& f = pa.field();
  std::vector<Polynomial> out;
  for (int i = 0; i <= pa.d; ++i) {
    std::vector<FieldElement> acc(static_cast<std::size_t>(i) + 1, FieldElement::zero(f));
    std::vector<FieldElement> prod{FieldElement::one(f)};
    FieldElement scalar = FieldElement::one(f);
    for (int l = 0; l <= i; ++l) {
      for (std::size_t t = 0; t < prod.size(); ++t) acc[t] = acc[t] + scalar * prod[t];
      if (l == i) break;
      scalar = scalar *
               (pa.theta_star[static_cast<std::size_t>(i)] -
                pa.theta_star[static_cast<std::size_t>(l)]) /
               pa.varphi[static_cast<std::size_t>(l)];
      // prod <- prod * (x - theta_l)
      std::vector<FieldElement> next(prod.size() + 1, FieldElement::zero(f));
      for (std::size_t t = 0; t < prod.size(); ++t) {
        next[t + 1] = next[t + 1] + prod[t];
        next[t] = next[t] - pa.theta[static_cast<std::size_t>(l)] * prod[t];
      }
      prod = std::move(next);
    }
    out.emplace_back(std::move(acc));
  }
  return out;
}

bool expansion_identity_check(const LeonardSystem& ls) {
  const LeonardSystem dual = d4_apply(ls, "*");
  const auto u_star = u_polynomials(extract_parameter_array(dual));
  const auto k_star = nu_and_k(dual).second;

  const Matrix u = Matrix::column(first_nonzero_column(ls.E[0]));
  const Matrix v = Matrix::column(first_nonzero_column(ls.E_star[0]));
  const Matrix g = standard_form(ls).gram_standard();
  const FieldElement uv = (u.transpose() * g * v).at(0, 0);
  const FieldElement uu = (u.transpose() * g * u).at(0, 0);

  for (int i = 0; i <= ls.d; ++i) {
    Matrix rhs(ls.n(), 1, ls.field());
    for (int j = 0; j <= ls.d; ++j)
      rhs = rhs + (ls.E_star[static_cast<std::size_t>(j)] * u)
                      .scaled(u_star[static_cast<std::size_t>(i)].eval(
                          ls.eigen_star[static_cast<std::size_t>(j)]));
    rhs = rhs.scaled(k_star[static_cast<std::size_t>(i)] * uv / uu);
    if (ls.E[static_cast<std::size_t>(i)] * v != rhs) return false;
  }
  return true;
}

FieldElement orthogonality_sum(const ParameterArray& pa, const ParameterArray& pa_prime, int rho,
                               int i, int j) {
  if (!is_descendent(pa, pa_prime, rho))
    fail(ErrorKind::NotADescendent,
         "the pair fails the descendence criterion at endpoint " + std::to_string(rho));
  if (i < 0 || i > pa.d || j < 0 || j > pa_prime.d)
    fail(ErrorKind::EndpointOutOfRange, "the table indices must lie in 0..d and 0..d'");

  const auto u_star = dual_u_polynomials(pa);
  const auto u_star_prime = dual_u_polynomials(pa_prime);
  const auto k_prime = nu_and_k(from_parameter_array(pa_prime)).second;

  FieldElement acc = FieldElement::zero(pa.field());
  for (int l = 0; l <= pa_prime.d; ++l)
    acc = acc +
          u_star[static_cast<std::size_t>(i)].eval(
              pa.theta_star[static_cast<std::size_t>(rho + l)]) *
              u_star_prime[static_cast<std::size_t>(j)].eval(
                  pa_prime.theta_star[static_cast<std::size_t>(l)]) *
              k_prime[static_cast<std::size_t>(l)];
  return acc;
}

FieldElement hypergeometric_2F1(std::int64_t a, std::int64_t b, std::int64_t c,
                                const FieldElement& z) {
  if (a > 0 || b > 0)
    fail(ErrorKind::ConfigParse, "the leading series parameters must be nonpositive integers");
  const auto& f = z.field();
  const std::int64_t last = std::min(-a, -b);
  FieldElement acc = FieldElement::one(f);
  FieldElement term = FieldElement::one(f);
  for (std::int64_t l = 1; l <= last; ++l) {
    const FieldElement den =
        FieldElement::from_integer(c + l - 1, f) * FieldElement::from_integer(l, f);
    if (den.is_zero())
      fail(ErrorKind::DenominatorVanishes,
           "a denominator image vanishes at series index " + std::to_string(l));
    term = term * FieldElement::from_integer(a + l - 1, f) *
           FieldElement::from_integer(b + l - 1, f) / den * z;
    acc = acc + term;
  }
  return acc;
}

bool krawtchouk_identity_check(int d, int d_prime, int rho, const FieldElement& p) {
  if (d_prime < 1) fail(ErrorKind::DiameterTooSmall, "the descendent diameter must be positive");
  if (d_prime > d || rho < 0 || rho > d - d_prime)
    fail(ErrorKind::EndpointOutOfRange, "the endpoint must lie between 0 and d - d'");
  const auto& f = p.field();
  const FieldElement one = FieldElement::one(f);
  if (p.is_zero() || p == one)
    fail(ErrorKind::DenominatorVanishes, "the weight p/(1 - p) needs p outside {0, 1}");
  const FieldElement z = one / p;
  const FieldElement ratio = p / (one - p);

  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d_prime; ++j) {
      if (i >= j && i <= j + d - d_prime) continue;
      FieldElement acc = FieldElement::zero(f);
      for (int l = 0; l <= d_prime; ++l)
        acc = acc + FieldElement::from_integer(binomial(d_prime, l), f) * ratio.pow(l) *
                        hypergeometric_2F1(-i, -(rho + l), -d, z) *
                        hypergeometric_2F1(-j, -l, -d_prime, z);
      if (!acc.is_zero()) return false;
    }
  return true;
}

}  // namespace lk
