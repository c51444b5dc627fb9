#include <doctest.h>

#include <random>

#include "lk/field.hpp"

using namespace lk;

namespace {

FieldElement random_element(const FieldSpecPtr& f, std::mt19937_64& rng) {
  if (f->kind() == FieldSpec::Kind::Rational) {
    std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 20);
    return FieldElement::from_ratio(mpz_class(static_cast<long>(num(rng))),
                                    mpz_class(static_cast<long>(den(rng))), f);
  }
  if (f->kind() == FieldSpec::Kind::Prime) {
    std::uniform_int_distribution<std::int64_t> r(0, f->p() - 1);
    return FieldElement::from_integer(r(rng), f);
  }
  std::uniform_int_distribution<std::int64_t> r(0, f->p() - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(f->degree()));
  for (auto& x : c) x = r(rng);
  return FieldElement::from_coefficients(c, f);
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("rational arithmetic") {
  auto Q = FieldSpec::rationals();
  auto half = FieldElement::parse("1/2", Q);
  auto third = FieldElement::parse("1/3", Q);
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK(FieldElement::parse("2/4", Q) == half);
  CHECK(FieldElement::parse("-8", Q).str() == "-8");
  CHECK(FieldElement::from_ratio(mpz_class(3), mpz_class(-6), Q).str() == "-1/2");
}

TEST_CASE("prime field arithmetic") {
  auto F5 = FieldSpec::prime(5);
  auto a = FieldElement::from_integer(3, F5);
  auto b = FieldElement::from_integer(4, F5);
  CHECK((a * b) == FieldElement::from_integer(2, F5));
  CHECK(b.inverse() == b);  // 4*4 = 16 = 1 mod 5
  CHECK(FieldElement::from_integer(-7, F5) == FieldElement::from_integer(3, F5));
  CHECK(FieldElement::from_integer(7, F5) == FieldElement::from_integer(2, F5));
}

TEST_CASE("GF(4) arithmetic under x^2+x+1") {
  auto F4 = FieldSpec::extension(2, {1, 1, 1});
  auto w = FieldElement::from_coefficients({0, 1}, F4);
  auto w1 = FieldElement::from_coefficients({1, 1}, F4);
  CHECK(w * w == w1);            // w^2 = w+1
  CHECK(w * w1 == FieldElement::one(F4));
  CHECK(w.inverse() == w1);
  CHECK(w + w == FieldElement::zero(F4));
  CHECK(FieldElement::from_integer(2, F4).is_zero());
  CHECK(w.str() == "[0,1]");
  CHECK(FieldElement::parse("[0,1]", F4) == w);
}

TEST_CASE("characteristic") {
  CHECK(FieldSpec::rationals()->characteristic() == 0);
  CHECK(FieldSpec::prime(5)->characteristic() == 5);
  CHECK(FieldSpec::extension(3, {1, 0, 1})->characteristic() == 3);  // GF(9), x^2+1
}

TEST_CASE("division by zero") {
  auto Q = FieldSpec::rationals();
  auto one = FieldElement::one(Q);
  auto zero = FieldElement::zero(Q);
  CHECK_THROWS_AS(one / zero, Error);
  try {
    zero.inverse();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("mismatched fields rejected") {
  auto a = FieldElement::one(FieldSpec::rationals());
  auto b = FieldElement::one(FieldSpec::prime(5));
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("bad field specs rejected") {
  CHECK_THROWS_AS(FieldSpec::prime(6), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  // x^2+1 = (x+1)^2 over GF(2)
  CHECK_THROWS_AS(FieldSpec::extension(2, {1, 0, 1}), Error);
  // degree 1 modulus
  CHECK_THROWS_AS(FieldSpec::extension(5, {1, 1}), Error);
  // non-monic after reduction: 3x^2+1 over GF(3) has degree 0
  CHECK_THROWS_AS(FieldSpec::extension(3, {1, 0, 3}), Error);
  // degree 5 unsupported
  CHECK_THROWS_AS(FieldSpec::extension(2, {1, 1, 0, 0, 0, 1}), Error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20260816);
  std::vector<FieldSpecPtr> fields = {FieldSpec::rationals(), FieldSpec::prime(5),
                                      FieldSpec::extension(2, {1, 1, 1})};
  for (const auto& f : fields) {
    auto one = FieldElement::one(f);
    auto zero = FieldElement::zero(f);
    for (int trial = 0; trial < 60; ++trial) {
      auto a = random_element(f, rng);
      auto b = random_element(f, rng);
      auto c = random_element(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == one);
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("integer embedding is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  for (const auto& f :
       {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::extension(3, {1, 0, 1})}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::int64_t m = d(rng), n = d(rng);
      CHECK(FieldElement::from_integer(m + n, f) ==
            FieldElement::from_integer(m, f) + FieldElement::from_integer(n, f));
      CHECK(FieldElement::from_integer(m * n, f) ==
            FieldElement::from_integer(m, f) * FieldElement::from_integer(n, f));
    }
  }
}

TEST_CASE("extension fields enumerate to p^k elements") {
  for (auto [p, mod, expect] :
       std::vector<std::tuple<std::int64_t, std::vector<std::int64_t>, std::size_t>>{
           {2, {1, 1, 1}, 4}, {2, {1, 1, 0, 1}, 8}, {3, {1, 0, 1}, 9}}) {
    auto f = FieldSpec::extension(p, mod);
    auto all = enumerate_field(f, 64);
    CHECK(all.size() == expect);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
    }
    // every nonzero element has an inverse in the field
    for (const auto& x : all) {
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
  CHECK_THROWS_AS(enumerate_field(FieldSpec::rationals(), 64), Error);
}

TEST_CASE("parse and str round trip") {
  auto Q = FieldSpec::rationals();
  for (const char* s : {"0", "1", "-8", "4/3", "-5/7", "123456789012345678901234567890"}) {
    CHECK(FieldElement::parse(FieldElement::parse(s, Q).str(), Q) == FieldElement::parse(s, Q));
  }
  auto F4 = FieldSpec::extension(2, {1, 1, 1});
  for (const char* s : {"[0,0]", "[1,0]", "[0,1]", "[1,1]"}) {
    CHECK(FieldElement::parse(s, F4).str() == s);
  }
  CHECK_THROWS_AS(FieldElement::parse("abc", Q), Error);
  CHECK_THROWS_AS(FieldElement::parse("", Q), Error);
}

TEST_CASE("pow") {
  auto Q = FieldSpec::rationals();
  auto two = FieldElement::from_integer(2, Q);
  CHECK(two.pow(10) == FieldElement::from_integer(1024, Q));
  CHECK(two.pow(0).is_one());
  CHECK(two.pow(-2) == FieldElement::parse("1/4", Q));
}

TEST_CASE("square detection") {
  auto Q = FieldSpec::rationals();
  CHECK(has_square_root(FieldElement::parse("4/9", Q)));
  CHECK(!has_square_root(FieldElement::parse("2", Q)));
  CHECK(!has_square_root(FieldElement::parse("-1", Q)));
  auto F5 = FieldSpec::prime(5);
  CHECK(has_square_root(FieldElement::from_integer(4, F5)));
  CHECK(!has_square_root(FieldElement::from_integer(2, F5)));  // squares mod 5: 0,1,4
  auto F4 = FieldSpec::extension(2, {1, 1, 1});
  for (const auto& x : enumerate_field(F4, 4)) CHECK(has_square_root(x));
}

}  // TEST_SUITE
