#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "idemgeo/matrix.hpp"
#include "idemgeo/random.hpp"

namespace idemgeo {

/// Exhaustive mode refuses to scan more than this many matrices.
inline constexpr std::uint64_t kEnumerationGuard = 100'000'000;

/// p^(n*n), or throws GuardExceeded when it passes kEnumerationGuard (or the
/// domain is not finite).
std::uint64_t enumeration_size(const ScalarDomain& domain, std::size_t n);

/// Visits every matrix of M_n(F_p) in lexicographic row-major order
/// (entry (0,0) most significant). The visitor returns false to stop early.
void for_each_matrix(const ScalarDomain& domain, std::size_t n, const std::function<bool(const Matrix&)>& visit);

/// All matrices satisfying `predicate`, each once, in lexicographic order.
std::vector<Matrix> enumerate_all(const ScalarDomain& domain, std::size_t n,
                                  const std::function<bool(const Matrix&)>& predicate);

std::vector<Matrix> enumerate_idempotents(const ScalarDomain& domain, std::size_t n);
std::vector<Matrix> enumerate_involutions(const ScalarDomain& domain, std::size_t n);
std::vector<Matrix> enumerate_invertibles(const ScalarDomain& domain, std::size_t n);

/// Integer entries are drawn from [-box, box] before shaping.
inline constexpr std::int64_t kSampleBox = 3;

enum class SampleKind { invertible, idempotent, involution, square_zero_nilpotent };

/// Shaped random elements; the returned matrix satisfies the requested
/// identity exactly and is a pure function of the generator state.
class Sampler {
 public:
  Sampler(ScalarDomain domain, std::size_t n, std::uint64_t seed) : domain_(domain), n_(n), rng_(seed) {}
  Sampler(ScalarDomain domain, std::size_t n, SplitMix64 rng) : domain_(domain), n_(n), rng_(rng) {}

  Matrix box_matrix();
  Matrix invertible();
  /// Random similarity of diag(1,..,1,0,..,0) with `rank` ones.
  Matrix idempotent(std::size_t rank);
  Matrix idempotent();  ///< rank uniform in [0, n]
  Matrix involution();  ///< 2e - 1 for a random idempotent e
  /// n = A B with col(A) inside ker(B), so n^2 = 0 structurally; n != 0.
  Matrix square_zero_nilpotent();
  Matrix sample(SampleKind kind);

  SplitMix64& rng() { return rng_; }
  [[nodiscard]] const ScalarDomain& domain() const { return domain_; }
  [[nodiscard]] std::size_t dim() const { return n_; }

 private:
  ScalarDomain domain_;
  std::size_t n_;
  SplitMix64 rng_;
};

}  // namespace idemgeo
