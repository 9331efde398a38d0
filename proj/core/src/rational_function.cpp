#include "wq/rational_function.hpp"

#include "wq/errors.hpp"

namespace wq {
namespace {

poly::Coeffs to_coeffs(const LaurentPoly& p) { return {p.dense().begin(), p.dense().end()}; }

// Scalar c with p = c * q, q integral, primitive, positive leading coefficient.
mpq_class primitive_factor(const poly::Coeffs& p) {
  mpz_class den_lcm = 1;
  for (const auto& c : p)
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (p.back() < 0) factor = -factor;
  return factor;
}

}  // namespace

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // num = t^a N(t), den = t^b Q(t) with N(0), Q(0) != 0.
  const int unit_shift = num.low_exponent() - den.low_exponent();
  poly::Coeffs n = to_coeffs(num);
  poly::Coeffs d = to_coeffs(den);
  if (d.size() > 1) {
    const poly::Coeffs g = poly::gcd(n, d);
    if (g.size() > 1) {
      n = poly::divide_exact(n, g);
      d = poly::divide_exact(d, g);
    }
  }
  const mpq_class c = primitive_factor(d);
  const mpq_class c_inv = 1 / c;
  for (auto& x : d) x *= c_inv;
  for (auto& x : n) x *= c_inv;
  num_ = LaurentPoly::from_dense(unit_shift, std::move(n));
  den_ = LaurentPoly::from_dense(0, std::move(d));
}

RationalFunction RationalFunction::inverted_t() const {
  // N(1/t)/Q(1/t) = t^{deg Q} N(1/t) / (t^{deg Q} Q(1/t)); the reversed
  // denominator keeps a nonzero constant term but may need sign/content fixes.
  const int deg = den_.high_exponent();
  return {num_.inverted_t().shifted(deg), den_.inverted_t().shifted(deg)};
}

RationalFunction RationalFunction::shifted(int k) const {
  return {Canonical{}, num_.shifted(k), den_};
}

std::optional<LaurentPoly> RationalFunction::as_laurent() const {
  if (den_.span() == 1) return num_ * (1 / den_.leading_coeff());
  return std::nullopt;
}

mpq_class RationalFunction::eval(const mpq_class& t0) const {
  const mpq_class d = den_.eval(t0);
  if (d == 0) throw DivisionByZero("evaluation at a pole");
  return num_.eval(t0) / d;
}

std::size_t RationalFunction::complexity() const {
  return num_.span() + den_.span();
}

RationalFunction RationalFunction::operator-() const { return {Canonical{}, -num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  // Denominators are coprime-to-t polynomials; combine over their lcm.
  const poly::Coeffs da = to_coeffs(a.den_);
  const poly::Coeffs db = to_coeffs(b.den_);
  const poly::Coeffs g = poly::gcd(da, db);
  const LaurentPoly a_cof = LaurentPoly::from_dense(0, poly::divide_exact(db, g));
  const LaurentPoly b_cof = LaurentPoly::from_dense(0, poly::divide_exact(da, g));
  return {a.num_ * a_cof + b.num_ * b_cof, a.den_ * a_cof};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.span() == 1 && b.den_.span() == 1)
    return {RationalFunction::Canonical{}, a.num_ * b.num_, LaurentPoly(1)};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace wq
