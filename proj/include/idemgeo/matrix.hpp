#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "idemgeo/scalar.hpp"

namespace idemgeo {

using Vector = std::vector<Scalar>;

/// An element of the matrix algebra M_n over an exact scalar domain.
/// Entries are stored row-major; every binary operation checks that both
/// operands share domain and dimension.
class Matrix {
 public:
  Matrix(ScalarDomain domain, std::size_t n);

  static Matrix zero(ScalarDomain domain, std::size_t n) { return {domain, n}; }
  static Matrix identity(ScalarDomain domain, std::size_t n);
  static Matrix scalar(ScalarDomain domain, std::size_t n, const Scalar& c);
  /// The matrix unit E_ij (zero-based indices).
  static Matrix unit(ScalarDomain domain, std::size_t n, std::size_t i, std::size_t j);
  static Matrix diagonal(ScalarDomain domain, const std::vector<Scalar>& diag);
  static Matrix from_ints(ScalarDomain domain, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(ScalarDomain domain, const std::vector<Vector>& rows);
  /// Builds the square matrix whose j-th column is columns[j].
  static Matrix from_columns(ScalarDomain domain, const std::vector<Vector>& columns);
  /// Inverse of to_vector: row-major n*n entries.
  static Matrix from_vector(ScalarDomain domain, std::size_t n, const Vector& entries);

  [[nodiscard]] const ScalarDomain& domain() const { return domain_; }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  [[nodiscard]] const Vector& entries() const { return a_; }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector column(std::size_t j) const;
  [[nodiscard]] Vector to_vector() const { return a_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Scalar trace() const;

  [[nodiscard]] Vector apply(const Vector& x) const;
  [[nodiscard]] Matrix pow(unsigned k) const;

  /// Finite fields only: entries read as base-p digits, entry (0,0) most
  /// significant. Matches the lexicographic enumeration order.
  [[nodiscard]] std::uint64_t key() const;

  /// "[[a,b],[c,d]]" with scalar strings.
  [[nodiscard]] std::string to_string() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }
  Matrix& operator-=(const Matrix& b) { return *this = *this - b; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.domain_ == b.domain_ && a.a_ == b.a_;
  }
  /// Lexicographic over row-major entries.
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  void require_compatible(const Matrix& other, const char* op) const;

  ScalarDomain domain_;
  std::size_t n_;
  Vector a_;
};

/// c * 1 for an integer c.
Matrix scalar_matrix(ScalarDomain domain, std::size_t n, std::int64_t c);

bool commute(const Matrix& a, const Matrix& b);
bool is_idempotent(const Matrix& e);
bool is_involution(const Matrix& u);

}  // namespace idemgeo
