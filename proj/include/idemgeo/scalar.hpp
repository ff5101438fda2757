#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "idemgeo/rational.hpp"

namespace idemgeo {

class Scalar;

enum class DomainKind { rational, prime_field };

/// The field a matrix lives over: Q, or F_p with p prime and p >= 5 so that
/// 2 and 3 are invertible.
class ScalarDomain {
 public:
  ScalarDomain() = default;  // Q

  static ScalarDomain rationals() { return {}; }
  /// Throws DomainError unless p is prime and p not in {2, 3}.
  static ScalarDomain prime_field(std::uint32_t p);

  [[nodiscard]] DomainKind kind() const { return p_ == 0 ? DomainKind::rational : DomainKind::prime_field; }
  [[nodiscard]] bool is_finite() const { return p_ != 0; }
  /// Zero for Q.
  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  /// "Q" or "F<p>".
  [[nodiscard]] std::string name() const;

  [[nodiscard]] Scalar zero() const;
  [[nodiscard]] Scalar one() const;
  [[nodiscard]] Scalar from_int(std::int64_t value) const;
  [[nodiscard]] Scalar from_rational(const Rational& value) const;
  /// Accepts "a", "a/b" (rationals) or a decimal integer (reduced mod p).
  [[nodiscard]] Scalar parse(std::string_view text) const;

  /// Finite fields only: the element with residue `index`, 0 <= index < p.
  [[nodiscard]] Scalar element(std::uint64_t index) const;

  friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;

 private:
  friend class Scalar;
  explicit ScalarDomain(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are canonical; residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(Rational value) : q_(std::move(value)) {}
  static Scalar residue(std::uint64_t value, std::uint32_t p);

  [[nodiscard]] ScalarDomain domain() const;
  [[nodiscard]] bool is_rational() const { return p_ == 0; }
  [[nodiscard]] bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  [[nodiscard]] bool is_one() const { return p_ == 0 ? q_.is_one() : r_ == 1; }
  [[nodiscard]] const Rational& rational() const { return q_; }
  [[nodiscard]] std::uint32_t residue_value() const { return r_; }

  /// "num/den" for rationals, the decimal residue for prime fields.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && (a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_);
  }
  /// Total order used for deterministic tie-breaking: by value for Q, by
  /// residue for F_p.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Rational q_;
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
};

/// The unique y with y + y = x.
Scalar halve(const Scalar& x);
/// The unique y with 3y = x.
Scalar third(const Scalar& x);

}  // namespace idemgeo
