#include "idemgeo/polynomial.hpp"

#include <gmpxx.h>

#include "idemgeo/errors.hpp"

namespace idemgeo {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Scalar poly_eval(const Poly& p, const Scalar& x) {
  if (p.empty()) return x.domain().zero();
  Scalar acc = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_derivative(const Poly& p, const ScalarDomain& domain) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(domain.from_int(static_cast<std::int64_t>(i)) * p[i]);
  return poly_trim(std::move(out));
}

Poly poly_monic(const Poly& p) {
  if (p.empty()) return p;
  const Scalar lead_inv = p.back().inverse();
  Poly out;
  for (const auto& c : p) out.push_back(c * lead_inv);
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZero("poly_divmod: zero divisor");
  Poly rem = poly_trim(a);
  if (rem.size() < b.size()) return {Poly{}, rem};
  const Scalar lead_inv = b.back().inverse();
  Poly quot(rem.size() - b.size() + 1, b.back().domain().zero());
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Scalar c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem.pop_back();  // leading term cancelled exactly
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quot)), rem};
}

Poly poly_gcd(Poly a, Poly b, const ScalarDomain&) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

bool poly_squarefree(const Poly& p, const ScalarDomain& domain) {
  return poly_degree(poly_gcd(p, poly_derivative(p, domain), domain)) == 0;
}

namespace {

Scalar q_of(const mpq_class& v) { return Scalar(Rational(v)); }

int sign_of(const Scalar& x) { return x.rational().sign(); }

std::size_t sign_changes(const std::vector<Poly>& seq, const Scalar& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_of(poly_eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots of the squarefree polynomial behind `seq` in the open interval
// (lo - 1/2, hi + 1/2); endpoints are never roots of a monic integer polynomial.
std::size_t roots_between(const std::vector<Poly>& seq, const mpz_class& lo, const mpz_class& hi) {
  const mpq_class a = mpq_class(lo) - mpq_class(1, 2);
  const mpq_class b = mpq_class(hi) + mpq_class(1, 2);
  return sign_changes(seq, q_of(a)) - sign_changes(seq, q_of(b));
}

bool integer_root_in(const Poly& g, const std::vector<Poly>& seq, const mpz_class& lo, const mpz_class& hi) {
  if (roots_between(seq, lo, hi) == 0) return false;
  if (lo == hi) return poly_eval(g, q_of(mpq_class(lo))).is_zero();
  mpz_class mid;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(lo + hi).get_mpz_t(), 1);
  return integer_root_in(g, seq, lo, mid) || integer_root_in(g, seq, mid + 1, hi);
}

bool rational_has_root(const Poly& p, const ScalarDomain& domain) {
  const int d = poly_degree(p);
  // clear denominators: c_i = a_i * L, integers
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().denominator().get_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& a : p) c.push_back(mpz_class(a.rational().numerator() * (lcm / a.rational().denominator())));
  // g(y) = sum c_i c_d^(d-1-i) y^i is monic with roots y = c_d x
  Poly g(static_cast<std::size_t>(d) + 1);
  mpz_class bound = 0;
  for (int i = 0; i < d; ++i) {
    mpz_class lead_pow;
    mpz_pow_ui(lead_pow.get_mpz_t(), c[static_cast<std::size_t>(d)].get_mpz_t(), static_cast<unsigned long>(d - 1 - i));
    mpz_class gi = c[static_cast<std::size_t>(i)] * lead_pow;
    if (abs(gi) > bound) bound = abs(gi);
    g[static_cast<std::size_t>(i)] = q_of(mpq_class(gi));
  }
  g[static_cast<std::size_t>(d)] = domain.one();
  bound += 1;  // Cauchy bound on |root|

  Poly sq = poly_divmod(g, poly_gcd(g, poly_derivative(g, domain), domain)).first;
  std::vector<Poly> seq{sq, poly_derivative(sq, domain)};
  while (!seq.back().empty()) {
    Poly r = poly_divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return integer_root_in(g, seq, -bound, bound);
}

}  // namespace

bool poly_has_root(const Poly& raw, const ScalarDomain& domain) {
  const Poly p = poly_trim(raw);
  if (p.empty()) return true;
  const int d = poly_degree(p);
  if (d == 0) return false;
  if (d == 1) return true;
  if (domain.is_finite()) {
    for (std::uint64_t r = 0; r < domain.modulus(); ++r) {
      if (poly_eval(p, domain.element(r)).is_zero()) return true;
    }
    return false;
  }
  return rational_has_root(p, domain);
}

Poly quartic_resolvent(const Poly& q, const ScalarDomain& domain) {
  if (poly_degree(q) != 4 || !q[4].is_one()) throw PreconditionError("quartic_resolvent: expects a monic quartic");
  const Scalar& d = q[0];
  const Scalar& c = q[1];
  const Scalar& b = q[2];
  const Scalar& a = q[3];
  const Scalar four = domain.from_int(4);
  return poly_trim({-(a * a * d - four * b * d + c * c), a * c - four * d, -b, domain.one()});
}

}  // namespace idemgeo
