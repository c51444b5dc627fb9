#include <doctest.h>

#include <random>

#include "lk/linalg.hpp"

using namespace lk;

namespace {

Matrix parse_matrix(const std::vector<std::vector<const char*>>& rows, const FieldSpecPtr& f) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& r : rows) {
    std::vector<FieldElement> row;
    for (const char* s : r) row.push_back(FieldElement::parse(s, f));
    out.push_back(row);
  }
  return Matrix::from_rows(out);
}

Matrix random_matrix(std::size_t n, std::size_t m, const FieldSpecPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  Matrix a(n, m, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a.at(i, j) = FieldElement::from_integer(d(rng), f);
  }
  return a;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("matrix arithmetic basics") {
  auto Q = FieldSpec::rationals();
  auto I2 = Matrix::identity(2, Q);
  CHECK(I2 * I2 == I2);
  CHECK(I2 + I2 == I2.scaled(FieldElement::from_integer(2, Q)));

  auto F5 = FieldSpec::prime(5);
  auto a = parse_matrix({{"1", "2"}, {"3", "4"}}, F5);
  auto b = parse_matrix({{"0", "1"}, {"1", "0"}}, F5);
  CHECK(a * b == parse_matrix({{"2", "1"}, {"4", "3"}}, F5));

  CHECK_THROWS_AS(a + Matrix::identity(3, F5), Error);
  CHECK_THROWS_AS(a + Matrix::identity(2, Q), Error);
  CHECK_THROWS_AS(a * Matrix::identity(3, F5), Error);
}

TEST_CASE("random inverse round trip over Q") {
  auto Q = FieldSpec::rationals();
  std::mt19937_64 rng(41);
  int found = 0;
  while (found < 10) {
    Matrix a = random_matrix(4, 4, Q, rng);
    auto rki = rank_kernel_inverse(a);
    if (!rki.inverse) continue;
    ++found;
    CHECK(a * *rki.inverse == Matrix::identity(4, Q));
    CHECK(*rki.inverse * a == Matrix::identity(4, Q));
    CHECK(rki.rank == 4);
    CHECK(rki.kernel.dim() == 0);
  }
}

TEST_CASE("rank kernel inverse examples") {
  auto Q = FieldSpec::rationals();

  auto z = rank_kernel_inverse(Matrix(3, 3, Q));
  CHECK(z.rank == 0);
  CHECK(z.kernel == Subspace::full(3, Q));
  CHECK(!z.inverse);

  auto id = rank_kernel_inverse(Matrix::identity(4, Q));
  CHECK(id.rank == 4);
  CHECK(id.kernel.dim() == 0);
  CHECK(*id.inverse == Matrix::identity(4, Q));

  auto sing = rank_kernel_inverse(parse_matrix({{"1", "2"}, {"2", "4"}}, Q));
  CHECK(sing.rank == 1);
  CHECK(!sing.inverse);
  CHECK(sing.kernel == Subspace::span_of_rows(parse_matrix({{"-2", "1"}}, Q)));
  // rank + dim kernel = cols
  CHECK(sing.rank + sing.kernel.dim() == 2);
}

TEST_CASE("rank of transpose matches on random samples") {
  auto F7 = FieldSpec::prime(7);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix a = random_matrix(3, 5, F7, rng);
    CHECK(rank_kernel_inverse(a).rank == rank_kernel_inverse(a.transpose()).rank);
  }
}

TEST_CASE("subspace operations") {
  auto Q = FieldSpec::rationals();
  auto e01 = Subspace::span_of_rows(parse_matrix({{"1", "0", "0"}, {"0", "1", "0"}}, Q));
  auto e12 = Subspace::span_of_rows(parse_matrix({{"0", "1", "0"}, {"0", "0", "1"}}, Q));
  auto e1 = Subspace::span_of_rows(parse_matrix({{"0", "1", "0"}}, Q));

  CHECK(Subspace::intersect(e01, e12) == e1);
  CHECK(e01 + e12 == Subspace::full(3, Q));
  CHECK(e01.dim() + e12.dim() == (e01 + e12).dim() + Subspace::intersect(e01, e12).dim());

  CHECK(Subspace::intersect(e01, e01) == e01);
  auto e0 = Subspace::span_of_rows(parse_matrix({{"1", "0"}}, Q));
  auto e1b = Subspace::span_of_rows(parse_matrix({{"0", "1"}}, Q));
  CHECK(Subspace::intersect(e0, e1b) == Subspace::zero(2, Q));

  CHECK(e1.contains({FieldElement::zero(Q), FieldElement::from_integer(5, Q),
                     FieldElement::zero(Q)}));
  CHECK(!e1.contains({FieldElement::one(Q), FieldElement::zero(Q), FieldElement::zero(Q)}));

  // scaled and permuted spanning sets give the identical canonical basis
  auto same = Subspace::span_of_rows(parse_matrix({{"0", "2", "0"}, {"3", "3", "0"}}, Q));
  CHECK(same == e01);
}

TEST_CASE("subspace equality is an equivalence relation on random spans") {
  auto F5 = FieldSpec::prime(5);
  std::mt19937_64 rng(7);
  std::vector<Subspace> spaces;
  for (int trial = 0; trial < 12; ++trial) {
    spaces.push_back(Subspace::span_of_rows(random_matrix(2, 4, F5, rng)));
  }
  for (const auto& u : spaces) {
    CHECK(u == u);
    for (const auto& w : spaces) {
      CHECK((u == w) == (w == u));
      if (u == w) {
        for (const auto& x : spaces) {
          if (w == x) CHECK(u == x);
        }
      }
    }
  }
}

TEST_CASE("dimension formula on random subspace pairs") {
  auto Q = FieldSpec::rationals();
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = Subspace::span_of_rows(random_matrix(2, 5, Q, rng));
    auto w = Subspace::span_of_rows(random_matrix(3, 5, Q, rng));
    auto s = u + w;
    auto x = Subspace::intersect(u, w);
    CHECK(u.dim() + w.dim() == s.dim() + x.dim());
    for (std::size_t r = 0; r < x.dim(); ++r) {
      CHECK(u.contains(x.basis().row_vector(r)));
      CHECK(w.contains(x.basis().row_vector(r)));
    }
  }
}

TEST_CASE("solve_linear") {
  auto Q = FieldSpec::rationals();
  auto a = parse_matrix({{"1", "2"}, {"3", "4"}}, Q);
  auto b = parse_matrix({{"5"}, {"6"}}, Q);
  auto x = solve_linear(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // inconsistent system
  auto sing = parse_matrix({{"1", "2"}, {"2", "4"}}, Q);
  CHECK(!solve_linear(sing, b).has_value());
  // consistent underdetermined system has an exact particular solution
  auto b2 = parse_matrix({{"1"}, {"2"}}, Q);
  auto x2 = solve_linear(sing, b2);
  REQUIRE(x2.has_value());
  CHECK(sing * *x2 == b2);
}

TEST_CASE("lagrange idempotents examples") {
  auto Q = FieldSpec::rationals();
  auto diag = Matrix::diagonal({FieldElement::zero(Q), FieldElement::one(Q)});
  auto es = lagrange_idempotents(diag, {FieldElement::zero(Q), FieldElement::one(Q)});
  CHECK(es[0] == Matrix::diagonal({FieldElement::one(Q), FieldElement::zero(Q)}));
  CHECK(es[1] == Matrix::diagonal({FieldElement::zero(Q), FieldElement::one(Q)}));

  auto swap = parse_matrix({{"0", "1"}, {"1", "0"}}, Q);
  auto es2 = lagrange_idempotents(
      swap, {FieldElement::one(Q), FieldElement::from_integer(-1, Q)});
  CHECK(es2[0] == parse_matrix({{"1/2", "1/2"}, {"1/2", "1/2"}}, Q));
  CHECK(es2[1] == parse_matrix({{"1/2", "-1/2"}, {"-1/2", "1/2"}}, Q));

  CHECK_THROWS_AS(
      lagrange_idempotents(Matrix::identity(2, Q), {FieldElement::one(Q), FieldElement::one(Q)}),
      Error);
  // identity is annihilated by (x-1) only; claiming eigenvalues (0,1) must fail
  try {
    lagrange_idempotents(Matrix::identity(2, Q), {FieldElement::zero(Q), FieldElement::one(Q)});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultiplicityFree);
  }
}

TEST_CASE("idempotent identities hold exactly") {
  auto Q = FieldSpec::rationals();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  for (int trial = 0; trial < 8; ++trial) {
    // Build a multiplicity-free matrix as P D P^{-1} with distinct diagonal D.
    Matrix p(4, 4, Q);
    std::optional<Matrix> pinv;
    do {
      p = random_matrix(4, 4, Q, rng);
      pinv = rank_kernel_inverse(p).inverse;
    } while (!pinv);
    std::vector<FieldElement> thetas;
    for (int i = 0; i < 4; ++i) thetas.push_back(FieldElement::from_integer(20 * i + d(rng), Q));
    Matrix a = p * Matrix::diagonal(thetas) * *pinv;
    auto es = lagrange_idempotents(a, thetas);
    Matrix sum(4, 4, Q);
    for (std::size_t i = 0; i < es.size(); ++i) {
      CHECK(es[i] * es[i] == es[i]);
      CHECK(a * es[i] == es[i].scaled(thetas[i]));
      CHECK(es[i].trace() == FieldElement::one(Q));
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (i != j) CHECK((es[i] * es[j]).is_zero());
      }
      sum = sum + es[i];
    }
    CHECK(sum == Matrix::identity(4, Q));
  }
}

TEST_CASE("first_nonzero_column") {
  auto Q = FieldSpec::rationals();
  auto m = parse_matrix({{"0", "0", "3"}, {"0", "2", "0"}}, Q);
  auto c = first_nonzero_column(m);
  CHECK(c[0] == FieldElement::zero(Q));
  CHECK(c[1] == FieldElement::from_integer(2, Q));
  CHECK_THROWS_AS(first_nonzero_column(Matrix(2, 2, Q)), Error);
}

}  // TEST_SUITE
