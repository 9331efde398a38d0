#include "wq/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "wq/errors.hpp"

namespace wq {
namespace {

// gmpxx leaves mpq_class(num, den) unreduced; arithmetic and == assume reduced input.
mpq_class reduced(mpq_class c) {
  c.canonicalize();
  return c;
}

}  // namespace

LaurentPoly::LaurentPoly(const mpq_class& constant) {
  if (constant != 0) coeffs_.push_back(reduced(constant));
}

LaurentPoly LaurentPoly::monomial(const mpq_class& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(reduced(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpq_class>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<mpq_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  for (auto& c : p.coeffs_) c.canonicalize();
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

mpq_class LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, mpq_class> LaurentPoly::terms() const {
  std::map<int, mpq_class> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace(low_ + static_cast<int>(k), coeffs_[k]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::inverted_t() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -high_exponent();
  return p;
}

mpq_class LaurentPoly::eval(const mpq_class& point) const {
  if (is_zero()) return 0;
  const mpq_class t0 = reduced(point);
  if (t0 == 0) {
    if (low_ < 0) throw DivisionByZero("Laurent polynomial with negative exponents evaluated at t = 0");
    return coeff(0);
  }
  // Horner on the polynomial part, then scale by t0^low.
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
  mpq_class scale = 1;
  const mpq_class base = low_ >= 0 ? t0 : mpq_class(1 / t0);
  for (int k = 0; k < std::abs(low_); ++k) scale *= base;
  return acc * scale;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_exponent(), rhs.high_exponent());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpq_class(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_ = poly::multiply(a.coeffs_, b.coeffs_);
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& scalar) {
  const mpq_class s = reduced(scalar);
  if (s == 0) return *this = LaurentPoly{};
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LaurentPoly sym_minus(int a) {
  if (a <= 0) throw std::invalid_argument("sym_minus: exponent must be positive");
  return LaurentPoly::monomial(1, a) - LaurentPoly::monomial(1, -a);
}

LaurentPoly sym_plus(int a) {
  if (a <= 0) throw std::invalid_argument("sym_plus: exponent must be positive");
  return LaurentPoly::monomial(1, a) + LaurentPoly::monomial(1, -a);
}

namespace poly {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Coeffs& p) { return static_cast<int>(p.size()) - 1; }

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  Coeffs rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Coeffs{}, rem};
  Coeffs quot(rem.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead_inv = 1 / b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class c = rem[k + b.size() - 1] * lead_inv;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(quot);
  return {std::move(quot), std::move(rem)};
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) {
      const mpq_class inv = 1 / b.back();
      for (auto& c : b) c *= inv;
    }
  }
  if (!a.empty()) {
    const mpq_class inv = 1 / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Coeffs divide_exact(const Coeffs& a, const Coeffs& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("divide_exact: nonzero remainder");
  return q;
}

}  // namespace poly

}  // namespace wq
