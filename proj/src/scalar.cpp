#include "idemgeo/scalar.hpp"

#include "idemgeo/errors.hpp"

namespace idemgeo {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same(const Scalar& a, const Scalar& b) {
  if (a.domain() != b.domain()) {
    throw DomainError("scalar domain mismatch: " + a.domain().name() + " vs " + b.domain().name());
  }
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

ScalarDomain ScalarDomain::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 3) throw DomainError("prime field F" + std::to_string(p) + " lacks 1/2 or 1/3");
  if (p > (1U << 31)) throw DomainError("modulus too large");
  return ScalarDomain(p);
}

std::string ScalarDomain::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar ScalarDomain::zero() const { return from_int(0); }
Scalar ScalarDomain::one() const { return from_int(1); }

Scalar ScalarDomain::from_int(std::int64_t value) const {
  if (p_ == 0) return Scalar(Rational(value));
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar ScalarDomain::from_rational(const Rational& value) const {
  if (p_ == 0) return Scalar(value);
  std::uint32_t den = reduce_mpz(value.denominator(), p_);
  if (den == 0) throw DivisionByZero("denominator vanishes in " + name());
  return Scalar::residue(reduce_mpz(value.numerator(), p_), p_) * Scalar::residue(den, p_).inverse();
}

Scalar ScalarDomain::parse(std::string_view text) const { return from_rational(Rational::parse(text)); }

Scalar ScalarDomain::element(std::uint64_t index) const {
  if (p_ == 0) throw DomainError("element(index) needs a finite field");
  if (index >= p_) throw DomainError("residue index out of range");
  return Scalar::residue(index, p_);
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = static_cast<std::uint32_t>(value % p);
  return s;
}

ScalarDomain Scalar::domain() const {
  return ScalarDomain(p_);
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.to_string() : std::to_string(r_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + domain().name());
  if (p_ == 0) return Scalar(q_.inverse());
  return residue(pow_mod(r_, p_ - 2, p_), p_);
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(-q_);
  return residue(r_ == 0 ? 0 : p_ - r_, p_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) require_same(a, b);
  if (a.p_ == 0) return Scalar(a.q_ + b.q_);
  return Scalar::residue(static_cast<std::uint64_t>(a.r_) + b.r_, a.p_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) require_same(a, b);
  if (a.p_ == 0) return Scalar(a.q_ - b.q_);
  return Scalar::residue(static_cast<std::uint64_t>(a.r_) + a.p_ - b.r_, a.p_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) require_same(a, b);
  if (a.p_ == 0) return Scalar(a.q_ * b.q_);
  return Scalar::residue(static_cast<std::uint64_t>(a.r_) * b.r_, a.p_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) require_same(a, b);
  return a * b.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) require_same(a, b);
  if (a.p_ == 0) return a.q_ <=> b.q_;
  return a.r_ <=> b.r_;
}

Scalar halve(const Scalar& x) { return x * x.domain().from_int(2).inverse(); }

Scalar third(const Scalar& x) { return x * x.domain().from_int(3).inverse(); }

}  // namespace idemgeo
