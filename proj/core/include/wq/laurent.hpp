#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace wq {

/// Exact Laurent polynomial in one variable t with rational coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are always nonzero, so zero coefficients never appear at
/// either end and the zero polynomial has no storage at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(mpq_class(constant)) {}  // NOLINT

  static LaurentPoly monomial(const mpq_class& coeff, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly from_terms(const std::map<int, mpq_class>& terms);
  /// Dense coefficients starting at exponent `low`.
  static LaurentPoly from_dense(int low, std::vector<mpq_class> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Number of stored exponent slots (high - low + 1); 0 for zero.
  std::size_t span() const { return coeffs_.size(); }
  mpq_class coeff(int exponent) const;
  const mpq_class& leading_coeff() const { return coeffs_.back(); }
  std::span<const mpq_class> dense() const { return coeffs_; }

  /// Nonzero terms, exponent -> coefficient, ascending.
  std::map<int, mpq_class> terms() const;
  std::size_t term_count() const;

  /// t^k * p(t).
  LaurentPoly shifted(int k) const;
  /// p(1/t).
  LaurentPoly inverted_t() const;
  /// Exact value at t0; t0 == 0 is rejected when negative exponents are present.
  mpq_class eval(const mpq_class& t0) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const mpq_class& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& s) { return a *= s; }
  friend LaurentPoly operator*(const mpq_class& s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  int low_ = 0;
  std::vector<mpq_class> coeffs_;
};

/// t^a - t^{-a}, a >= 1.
LaurentPoly sym_minus(int a);
/// t^a + t^{-a}, a >= 1.
LaurentPoly sym_plus(int a);

namespace poly {

// Ordinary polynomials over Q as dense ascending coefficient vectors with a
// nonzero last entry (empty = zero). Used for gcd work on Laurent images.
using Coeffs = std::vector<mpq_class>;

void trim(Coeffs& p);
int degree(const Coeffs& p);  // -1 for zero
Coeffs multiply(const Coeffs& a, const Coeffs& b);
/// Returns {quotient, remainder}; b must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(Coeffs a, Coeffs b);
/// Exact quotient; throws std::logic_error when b does not divide a.
Coeffs divide_exact(const Coeffs& a, const Coeffs& b);

}  // namespace poly

}  // namespace wq
