#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lk/error.hpp"

namespace lk {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Coefficient field for every exact computation in the library: the rationals,
// a prime field GF(p) with p < 2^31, or GF(p^k) presented as GF(p)[x] modulo a
// monic irreducible of degree k (2 <= k <= 4, coefficients listed low to high).
class FieldSpec {
public:
  enum class Kind { Rational, Prime, Extension };

  static FieldSpecPtr rationals();
  static FieldSpecPtr prime(std::int64_t p);
  static FieldSpecPtr extension(std::int64_t p, std::vector<std::int64_t> modulus);

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return kind_ == Kind::Rational ? 0 : p_; }
  std::int64_t p() const { return p_; }
  // Extension degree k; 1 for GF(p), 0 for the rationals.
  int degree() const { return degree_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  // Number of elements, absent for the rationals.
  std::optional<std::uint64_t> size() const;
  std::string describe() const;

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

private:
  FieldSpec(Kind kind, std::int64_t p, std::vector<std::int64_t> modulus, int degree)
      : kind_(kind), p_(p), modulus_(std::move(modulus)), degree_(degree) {}

  Kind kind_;
  std::int64_t p_;
  std::vector<std::int64_t> modulus_;
  int degree_;
};

bool same_field(const FieldSpecPtr& a, const FieldSpecPtr& b);

// One exact scalar. Rationals are kept canonical by GMP, prime-field values as
// residues in [0, p), extension values as coefficient vectors of length k with
// entries in [0, p). Equality is therefore plain representation equality.
class FieldElement {
public:
  static FieldElement zero(const FieldSpecPtr& field);
  static FieldElement one(const FieldSpecPtr& field);
  static FieldElement from_integer(std::int64_t n, const FieldSpecPtr& field);
  static FieldElement from_integer(const mpz_class& n, const FieldSpecPtr& field);
  // Rationals only; den must be nonzero.
  static FieldElement from_ratio(const mpz_class& num, const mpz_class& den,
                                 const FieldSpecPtr& field);
  // Extension fields only; coefficients listed low to high, length <= degree.
  static FieldElement from_coefficients(const std::vector<std::int64_t>& coeffs,
                                        const FieldSpecPtr& field);
  // Accepts "-8", "4/3" (a/b in any field, via division), and "[c0,c1,...]"
  // for extension-field coefficient vectors.
  static FieldElement parse(const std::string& text, const FieldSpecPtr& field);

  const FieldSpecPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const;

  // Rational access, for callers that need the underlying value.
  const mpq_class& rational_value() const;

private:
  using Value = std::variant<mpq_class, std::int64_t, std::vector<std::int64_t>>;

  FieldElement(FieldSpecPtr field, Value v) : field_(std::move(field)), v_(std::move(v)) {}

  FieldSpecPtr field_;
  Value v_;
};

// Whether x is a square in its field. In characteristic 2 every element is a
// square (Frobenius); over the rationals this is a perfect-square test on
// numerator and denominator; over odd finite fields, Euler's criterion.
bool has_square_root(const FieldElement& x);

// All elements of a finite field, in a fixed order (residue / coefficient
// counting order). Errors with UnsupportedField for the rationals or when the
// field has more than max_count elements.
std::vector<FieldElement> enumerate_field(const FieldSpecPtr& field, std::uint64_t max_count);

}  // namespace lk
