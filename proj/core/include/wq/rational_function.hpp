#pragma once

#include <optional>

#include "wq/laurent.hpp"

namespace wq {

/// Element of Q(t), kept in a unique canonical form:
///   numerator:   Laurent polynomial carrying every unit t^k and scalar;
///   denominator: ordinary polynomial with nonzero constant term, positive
///              leading coefficient and integer coefficients of content 1,
///              coprime to the numerator.
/// Equal field elements therefore have identical representations.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const mpq_class& c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
  /// Throws DivisionByZero when den is zero.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// f(1/t).
  RationalFunction inverted_t() const;
  /// t^k f(t).
  RationalFunction shifted(int k) const;
  /// The Laurent polynomial when the reduced denominator is a unit, else nullopt.
  std::optional<LaurentPoly> as_laurent() const;
  /// Exact value at t0; throws DivisionByZero at a pole.
  mpq_class eval(const mpq_class& t0) const;
  /// Total degree used for pivot selection: span of numerator + degree of denominator.
  std::size_t complexity() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DivisionByZero when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RationalFunction(Canonical, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace wq
