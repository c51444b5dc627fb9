#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "lk/askey.hpp"
#include "lk/balanced_form.hpp"
#include "test_support.hpp"

using namespace lk;
using namespace lk::testing;

namespace {

ParameterArray reference_pair_target(int d_prime, const CaseParams& cp3) {
  std::map<std::string, FieldElement> free;
  const auto& F = cp3.field();
  free.emplace("s", fe("1", F));
  free.emplace("s_star", fe("1", F));
  free.emplace("theta0", fe("0", F));
  free.emplace("theta0_star", fe("0", F));
  return instantiate(construct_descendent(cp3, d_prime, 0, free));
}

}  // namespace

TEST_CASE("u polynomials normalize at the base point") {
  const auto pa = instantiate(small_linear_case(3));
  const auto us = u_polynomials(pa);
  REQUIRE(us.size() == 4);
  CHECK(us[0].coeffs == felist({"1"}, pa.field()));
  CHECK(us[1].coeffs == felist({"1", "-1/6"}, pa.field()));

  for (const auto& cp : sample_cases()) {
    const auto arr = instantiate(cp);
    const auto family = u_polynomials(arr);
    for (std::size_t i = 0; i < family.size(); ++i) {
      CHECK(family[i].degree() == static_cast<int>(i));
      CHECK(family[i].eval(arr.theta[0]) == FieldElement::one(arr.field()));
    }
  }
}

TEST_CASE("the expansion identity holds on every sample system") {
  for (const auto& cp : sample_cases())
    CHECK(expansion_identity_check(from_parameter_array(instantiate(cp))));

  // By hand at i = 0: u*_0 = 1 and the dual idempotents resolve the
  // identity, so E_0 v collapses to (<u, v>/||u||^2) u.
  const LeonardSystem ls = from_parameter_array(instantiate(small_linear_case(3)));
  const Matrix u = Matrix::column(first_nonzero_column(ls.E[0]));
  const Matrix v = Matrix::column(first_nonzero_column(ls.E_star[0]));
  const Matrix g = standard_form(ls).gram_standard();
  const FieldElement scale = (u.transpose() * g * v).at(0, 0) / (u.transpose() * g * u).at(0, 0);
  CHECK(ls.E[0] * v == u.scaled(scale));
}

TEST_CASE("pairing sums vanish exactly outside the window") {
  const CaseParams cp3 = small_linear_case(3);
  const auto pa3 = instantiate(cp3);
  const auto pa2 = reference_pair_target(2, cp3);
  const auto& F = pa3.field();

  for (int rho = 0; rho <= 1; ++rho)
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 2; ++j) {
        const bool outside = i < j || i > j + 1;
        CHECK(orthogonality_sum(pa3, pa2, rho, i, j).is_zero() == outside);
      }

  // (0, 1) spelled out: the degree one target polynomial takes the values
  // (1, 3/4, 1/2) at 0, 1, 2, and against the weights (1, -4, 4) the sum is
  // 1 - 3 + 2 = 0.
  CHECK(orthogonality_sum(pa3, pa2, 0, 0, 1).is_zero());
  CHECK(orthogonality_sum(pa3, pa2, 0, 3, 1).is_zero());
  // Inside the window at (1, 1): 1 - 4 (5/6)(3/4) + 4 (2/3)(1/2) = -1/6.
  CHECK(orthogonality_sum(pa3, pa2, 0, 1, 1) == fe("-1/6", F));

  const auto bad = instantiate(make_case(
      CaseTag::IIC, 2, F,
      {{"r", "3"}, {"s", "1"}, {"s_star", "1"}, {"theta0", "0"}, {"theta0_star", "0"}}));
  expect_kind(ErrorKind::NotADescendent, [&] { orthogonality_sum(pa3, bad, 0, 0, 0); });
  expect_kind(ErrorKind::EndpointOutOfRange, [&] { orthogonality_sum(pa3, pa2, 0, 4, 0); });
  expect_kind(ErrorKind::EndpointOutOfRange, [&] { orthogonality_sum(pa3, pa2, 2, 0, 0); });
}

TEST_CASE("terminating series evaluate exactly") {
  auto Q = FieldSpec::rationals();
  CHECK(hypergeometric_2F1(0, -5, -3, fe("7/3", Q)) == FieldElement::one(Q));
  CHECK(hypergeometric_2F1(-1, -1, -3, fe("1/2", Q)) == fe("5/6", Q));
  CHECK(hypergeometric_2F1(-2, -2, -3, fe("1/2", Q)) == fe("5/12", Q));

  // Symmetric in the two leading parameters.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(hypergeometric_2F1(-a, -b, -5, fe("2/7", Q)) ==
            hypergeometric_2F1(-b, -a, -5, fe("2/7", Q)));

  auto F5 = FieldSpec::prime(5);
  CHECK(hypergeometric_2F1(0, -1, -5, fe("2", F5)) == FieldElement::one(F5));
  expect_kind(ErrorKind::DenominatorVanishes,
              [&] { hypergeometric_2F1(-1, -1, -5, fe("2", F5)); });
  expect_kind(ErrorKind::ConfigParse, [&] { hypergeometric_2F1(1, -1, -3, fe("1/2", Q)); });
}

TEST_CASE("the Krawtchouk identity verifies and matches the pairing sums") {
  auto Q = FieldSpec::rationals();
  CHECK(krawtchouk_identity_check(3, 2, 0, fe("2", Q)));
  CHECK(krawtchouk_identity_check(3, 2, 1, fe("2", Q)));
  CHECK(krawtchouk_identity_check(2, 2, 0, fe("2", Q)));
  CHECK(krawtchouk_identity_check(4, 2, 1, fe("3", Q)));

  expect_kind(ErrorKind::DenominatorVanishes,
              [&] { krawtchouk_identity_check(3, 2, 0, fe("1", Q)); });
  expect_kind(ErrorKind::DenominatorVanishes,
              [&] { krawtchouk_identity_check(3, 2, 0, fe("0", Q)); });
  expect_kind(ErrorKind::EndpointOutOfRange,
              [&] { krawtchouk_identity_check(3, 2, 2, fe("2", Q)); });
  expect_kind(ErrorKind::DiameterTooSmall,
              [&] { krawtchouk_identity_check(3, 0, 0, fe("2", Q)); });

  // The reference pair has p = r/(s s*) = 2, so the trace multiplicities,
  // the binomial weights, and the series values all line up exactly.
  const CaseParams cp3 = small_linear_case(3);
  const auto pa3 = instantiate(cp3);
  const auto pa2 = reference_pair_target(2, cp3);

  const auto k_prime = nu_and_k(from_parameter_array(pa2)).second;
  const FieldElement minus_two = fe("-2", Q);
  const std::int64_t binom2[] = {1, 2, 1};
  for (int l = 0; l <= 2; ++l)
    CHECK(k_prime[static_cast<std::size_t>(l)] ==
          FieldElement::from_integer(binom2[l], Q) * minus_two.pow(l));

  const auto u_star =
      u_polynomials(extract_parameter_array(d4_apply(from_parameter_array(pa3), "*")));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      CHECK(u_star[static_cast<std::size_t>(i)].eval(fe(std::to_string(j), Q)) ==
            hypergeometric_2F1(-i, -j, -3, fe("1/2", Q)));

  for (int rho = 0; rho <= 1; ++rho)
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 2; ++j) {
        FieldElement series_sum = FieldElement::zero(Q);
        for (int l = 0; l <= 2; ++l)
          series_sum = series_sum +
                       FieldElement::from_integer(binom2[l], Q) * minus_two.pow(l) *
                           hypergeometric_2F1(-i, -(rho + l), -3, fe("1/2", Q)) *
                           hypergeometric_2F1(-j, -l, -2, fe("1/2", Q));
        CHECK(series_sum == orthogonality_sum(pa3, pa2, rho, i, j));
      }
}
