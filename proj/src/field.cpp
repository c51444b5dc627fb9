#include "lk/field.hpp"

#include <algorithm>
#include <sstream>

namespace lk {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MismatchedField: return "MismatchedField";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotMultiplicityFree: return "NotMultiplicityFree";
    case ErrorKind::InvalidParameterArray: return "InvalidParameterArray";
    case ErrorKind::CaseConstraintViolated: return "CaseConstraintViolated";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::FreeParameterConstraintViolated: return "FreeParameterConstraintViolated";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::ZeroTrace: return "ZeroTrace";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::NotADescendent: return "NotADescendent";
    case ErrorKind::MiddleSystemMismatch: return "MiddleSystemMismatch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::ConfigParse: return "ConfigParse";
  }
  return "Error";
}

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;
// Root-search and quadratic-factor sweeps are exhaustive; keep them desk-scale.
constexpr std::int64_t kMaxExtensionPrime = std::int64_t{1} << 20;
constexpr std::int64_t kMaxDegree4Prime = 4096;

bool is_prime_by_trial_division(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t f = 3; f * f <= p; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  return a;
}

// p < 2^31, so products of residues fit in int64.
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  // r is gcd(a, p) = 1 for nonzero a mod prime p.
  return mod_norm(t, p);
}

using Poly = std::vector<std::int64_t>;  // low-to-high, not necessarily trimmed

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = mod_norm(out[i + j] + mod_mul(a[i], b[j], p), p);
    }
  }
  return out;
}

// Remainder of a modulo monic m.
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
  int dm = poly_degree(m);
  for (int i = poly_degree(a); i >= dm; --i) {
    std::int64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      auto idx = static_cast<std::size_t>(i - dm + j);
      a[idx] = mod_norm(a[idx] - mod_mul(c, m[static_cast<std::size_t>(j)], p), p);
    }
  }
  a.resize(static_cast<std::size_t>(std::max(dm, 1)));
  return a;
}

// Inverse of a modulo m (monic, irreducible) via extended Euclid in GF(p)[x].
Poly poly_inv(const Poly& a, const Poly& m, std::int64_t p) {
  Poly r0 = m, r1 = a, t0 = {0}, t1 = {1};
  while (poly_degree(r1) >= 0) {
    int d0 = poly_degree(r0), d1 = poly_degree(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(t0, t1);
      continue;
    }
    std::int64_t lead1 = r1[static_cast<std::size_t>(d1)];
    std::int64_t c = mod_mul(r0[static_cast<std::size_t>(d0)], mod_inv(lead1, p), p);
    int shift = d0 - d1;
    // r0 -= c x^shift r1; t0 -= c x^shift t1
    for (int j = 0; j <= d1; ++j) {
      auto idx = static_cast<std::size_t>(j + shift);
      r0[idx] = mod_norm(r0[idx] - mod_mul(c, r1[static_cast<std::size_t>(j)], p), p);
    }
    if (t0.size() < t1.size() + static_cast<std::size_t>(shift)) {
      t0.resize(t1.size() + static_cast<std::size_t>(shift), 0);
    }
    for (std::size_t j = 0; j < t1.size(); ++j) {
      auto idx = j + static_cast<std::size_t>(shift);
      t0[idx] = mod_norm(t0[idx] - mod_mul(c, t1[j], p), p);
    }
    if (poly_degree(r0) < poly_degree(r1)) {
      std::swap(r0, r1);
      std::swap(t0, t1);
    }
  }
  // r0 is a nonzero constant gcd.
  std::int64_t scale = mod_inv(r0[0], p);
  for (auto& c : t0) c = mod_mul(c, scale, p);
  return poly_rem(std::move(t0), m, p);
}

std::int64_t poly_eval(const Poly& a, std::int64_t x, std::int64_t p) {
  std::int64_t v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = mod_norm(mod_mul(v, x, p) + *it, p);
  return v;
}

bool is_irreducible(const Poly& m, std::int64_t p) {
  int deg = poly_degree(m);
  // Degrees 2 and 3 are reducible exactly when they have a root; degree 4 may
  // also split into two quadratics.
  for (std::int64_t x = 0; x < p; ++x) {
    if (poly_eval(m, x, p) == 0) return false;
  }
  if (deg == 4) {
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) {
        Poly q = {b, a, 1};
        if (poly_degree(poly_rem(m, q, p)) < 0) return false;
      }
    }
  }
  return true;
}

std::int64_t mpz_mod_to_int(const mpz_class& n, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mpz_class(p).get_mpz_t());
  return r.get_si();
}

}  // namespace

FieldSpecPtr FieldSpec::rationals() {
  static FieldSpecPtr instance(new FieldSpec(Kind::Rational, 0, {}, 0));
  return instance;
}

FieldSpecPtr FieldSpec::prime(std::int64_t p) {
  if (p > kMaxPrime) fail(ErrorKind::UnsupportedField, "prime modulus must be below 2^31");
  if (!is_prime_by_trial_division(p)) {
    fail(ErrorKind::UnsupportedField, "modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpecPtr(new FieldSpec(Kind::Prime, p, {}, 1));
}

FieldSpecPtr FieldSpec::extension(std::int64_t p, std::vector<std::int64_t> modulus) {
  if (p > kMaxExtensionPrime) {
    fail(ErrorKind::UnsupportedField, "extension characteristic must be at most 2^20");
  }
  if (!is_prime_by_trial_division(p)) {
    fail(ErrorKind::UnsupportedField, "characteristic " + std::to_string(p) + " is not prime");
  }
  for (auto& c : modulus) c = mod_norm(c, p);
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  int deg = static_cast<int>(modulus.size()) - 1;
  if (deg < 2 || deg > 4) {
    fail(ErrorKind::UnsupportedField, "extension modulus degree must be between 2 and 4");
  }
  if (modulus.back() != 1) fail(ErrorKind::UnsupportedField, "extension modulus must be monic");
  if (deg == 4 && p > kMaxDegree4Prime) {
    fail(ErrorKind::UnsupportedField, "degree-4 modulus requires characteristic at most 4096");
  }
  if (!is_irreducible(modulus, p)) {
    fail(ErrorKind::UnsupportedField, "extension modulus is reducible over GF(p)");
  }
  return FieldSpecPtr(new FieldSpec(Kind::Extension, p, std::move(modulus), deg));
}

std::optional<std::uint64_t> FieldSpec::size() const {
  if (kind_ == Kind::Rational) return std::nullopt;
  std::uint64_t s = 1;
  for (int i = 0; i < degree_; ++i) {
    if (s > std::uint64_t{1} << 40) return std::nullopt;  // too large to matter
    s *= static_cast<std::uint64_t>(p_);
  }
  return s;
}

std::string FieldSpec::describe() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Prime: return "GF(" + std::to_string(p_) + ")";
    case Kind::Extension: {
      std::ostringstream os;
      os << "GF(" << p_ << "^" << degree_ << "), modulus [";
      for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
      }
      os << "]";
      return os.str();
    }
  }
  return "?";
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && modulus_ == other.modulus_;
}

bool same_field(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_field(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  if (!same_field(a, b)) {
    fail(ErrorKind::MismatchedField,
         (a ? a->describe() : "<none>") + " vs " + (b ? b->describe() : "<none>"));
  }
}

}  // namespace

FieldElement FieldElement::zero(const FieldSpecPtr& field) { return from_integer(0, field); }

FieldElement FieldElement::one(const FieldSpecPtr& field) { return from_integer(1, field); }

FieldElement FieldElement::from_integer(std::int64_t n, const FieldSpecPtr& field) {
  return from_integer(mpz_class(static_cast<long>(n)), field);
}

FieldElement FieldElement::from_integer(const mpz_class& n, const FieldSpecPtr& field) {
  switch (field->kind()) {
    case FieldSpec::Kind::Rational: return FieldElement(field, mpq_class(n));
    case FieldSpec::Kind::Prime: return FieldElement(field, mpz_mod_to_int(n, field->p()));
    case FieldSpec::Kind::Extension: {
      std::vector<std::int64_t> c(static_cast<std::size_t>(field->degree()), 0);
      c[0] = mpz_mod_to_int(n, field->p());
      return FieldElement(field, std::move(c));
    }
  }
  fail(ErrorKind::UnsupportedField, "unknown field kind");
}

FieldElement FieldElement::from_ratio(const mpz_class& num, const mpz_class& den,
                                      const FieldSpecPtr& field) {
  if (field->kind() != FieldSpec::Kind::Rational) {
    fail(ErrorKind::UnsupportedField, "from_ratio requires the rational field");
  }
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElement(field, std::move(q));
}

FieldElement FieldElement::from_coefficients(const std::vector<std::int64_t>& coeffs,
                                             const FieldSpecPtr& field) {
  if (field->kind() != FieldSpec::Kind::Extension) {
    fail(ErrorKind::UnsupportedField, "coefficient vectors require an extension field");
  }
  auto k = static_cast<std::size_t>(field->degree());
  if (coeffs.size() > k) {
    fail(ErrorKind::ShapeMismatch, "coefficient vector longer than extension degree");
  }
  std::vector<std::int64_t> c(k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = mod_norm(coeffs[i], field->p());
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::parse(const std::string& text, const FieldSpecPtr& field) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) fail(ErrorKind::ConfigParse, "empty scalar literal");
  try {
    if (s.front() == '[') {
      if (s.back() != ']') fail(ErrorKind::ConfigParse, "unterminated coefficient list");
      std::vector<std::int64_t> coeffs;
      std::string body = s.substr(1, s.size() - 2);
      if (!body.empty()) {
        std::istringstream is(body);
        std::string item;
        while (std::getline(is, item, ',')) coeffs.push_back(mpz_class(item).get_si());
      }
      return from_coefficients(coeffs, field);
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in " + text);
      return from_integer(num, field) / from_integer(den, field);
    }
    return from_integer(mpz_class(s), field);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ConfigParse, "bad scalar literal: " + text);
  }
}

bool FieldElement::is_zero() const {
  switch (field_->kind()) {
    case FieldSpec::Kind::Rational: return std::get<mpq_class>(v_) == 0;
    case FieldSpec::Kind::Prime: return std::get<std::int64_t>(v_) == 0;
    case FieldSpec::Kind::Extension: {
      const auto& c = std::get<std::vector<std::int64_t>>(v_);
      return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
    }
  }
  return false;
}

bool FieldElement::is_one() const { return *this == one(field_); }

FieldElement FieldElement::operator-() const {
  switch (field_->kind()) {
    case FieldSpec::Kind::Rational: return FieldElement(field_, mpq_class(-std::get<mpq_class>(v_)));
    case FieldSpec::Kind::Prime:
      return FieldElement(field_, mod_norm(-std::get<std::int64_t>(v_), field_->p()));
    case FieldSpec::Kind::Extension: {
      auto c = std::get<std::vector<std::int64_t>>(v_);
      for (auto& x : c) x = mod_norm(-x, field_->p());
      return FieldElement(field_, std::move(c));
    }
  }
  fail(ErrorKind::UnsupportedField, "unknown field kind");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  switch (field_->kind()) {
    case FieldSpec::Kind::Rational:
      return FieldElement(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    case FieldSpec::Kind::Prime:
      return FieldElement(
          field_, mod_norm(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_), field_->p()));
    case FieldSpec::Kind::Extension: {
      auto c = std::get<std::vector<std::int64_t>>(v_);
      const auto& d = std::get<std::vector<std::int64_t>>(o.v_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_norm(c[i] + d[i], field_->p());
      return FieldElement(field_, std::move(c));
    }
  }
  fail(ErrorKind::UnsupportedField, "unknown field kind");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  switch (field_->kind()) {
    case FieldSpec::Kind::Rational:
      return FieldElement(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    case FieldSpec::Kind::Prime:
      return FieldElement(field_,
                          mod_mul(std::get<std::int64_t>(v_), std::get<std::int64_t>(o.v_), field_->p()));
    case FieldSpec::Kind::Extension: {
      auto prod = poly_mul(std::get<std::vector<std::int64_t>>(v_),
                           std::get<std::vector<std::int64_t>>(o.v_), field_->p());
      auto rem = poly_rem(std::move(prod), field_->modulus(), field_->p());
      rem.resize(static_cast<std::size_t>(field_->degree()), 0);
      return FieldElement(field_, std::move(rem));
    }
  }
  fail(ErrorKind::UnsupportedField, "unknown field kind");
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + field_->describe());
  switch (field_->kind()) {
    case FieldSpec::Kind::Rational:
      return FieldElement(field_, mpq_class(1 / std::get<mpq_class>(v_)));
    case FieldSpec::Kind::Prime:
      return FieldElement(field_, mod_inv(std::get<std::int64_t>(v_), field_->p()));
    case FieldSpec::Kind::Extension: {
      auto inv = poly_inv(std::get<std::vector<std::int64_t>>(v_), field_->modulus(), field_->p());
      inv.resize(static_cast<std::size_t>(field_->degree()), 0);
      return FieldElement(field_, std::move(inv));
    }
  }
  fail(ErrorKind::UnsupportedField, "unknown field kind");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this, acc = one(field_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return v_ == o.v_;
}

std::string FieldElement::str() const {
  switch (field_->kind()) {
    case FieldSpec::Kind::Rational: return std::get<mpq_class>(v_).get_str();
    case FieldSpec::Kind::Prime: return std::to_string(std::get<std::int64_t>(v_));
    case FieldSpec::Kind::Extension: {
      const auto& c = std::get<std::vector<std::int64_t>>(v_);
      std::ostringstream os;
      os << "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
      }
      os << "]";
      return os.str();
    }
  }
  return "?";
}

const mpq_class& FieldElement::rational_value() const {
  if (field_->kind() != FieldSpec::Kind::Rational) {
    fail(ErrorKind::UnsupportedField, "rational_value on " + field_->describe());
  }
  return std::get<mpq_class>(v_);
}

bool has_square_root(const FieldElement& x) {
  const auto& f = x.field();
  if (x.is_zero()) return true;
  switch (f->kind()) {
    case FieldSpec::Kind::Rational: {
      const mpq_class& q = x.rational_value();
      if (q < 0) return false;
      return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
             mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
    }
    case FieldSpec::Kind::Prime:
    case FieldSpec::Kind::Extension: {
      if (f->characteristic() == 2) return true;  // Frobenius is onto
      auto size = f->size();
      if (!size) fail(ErrorKind::UnsupportedField, "field too large for square test");
      // Euler's criterion in GF(q), q odd.
      return x.pow(static_cast<std::int64_t>((*size - 1) / 2)).is_one();
    }
  }
  return false;
}

std::vector<FieldElement> enumerate_field(const FieldSpecPtr& field, std::uint64_t max_count) {
  auto size = field->size();
  if (!size || *size > max_count) {
    fail(ErrorKind::UnsupportedField, "field not enumerable within " + std::to_string(max_count));
  }
  std::vector<FieldElement> out;
  out.reserve(*size);
  if (field->kind() == FieldSpec::Kind::Prime) {
    for (std::int64_t r = 0; r < field->p(); ++r) out.push_back(FieldElement::from_integer(r, field));
    return out;
  }
  auto k = static_cast<std::size_t>(field->degree());
  std::vector<std::int64_t> digits(k, 0);
  while (true) {
    out.push_back(FieldElement::from_coefficients(digits, field));
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++digits[i] < field->p()) break;
      digits[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

}  // namespace lk
