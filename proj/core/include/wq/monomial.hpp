#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace wq {

/// One factor Y_node(z q^shift)^exponent.
struct YFactor {
  int node;
  int shift;
  int exponent;

  friend auto operator<=>(const YFactor&, const YFactor&) = default;
};

/// Product of shifted Y-series: an element of the free abelian group on the
/// symbols Y_i(zq^a). Factors are kept sorted by (node, shift) with nonzero
/// exponents, so equal monomials compare equal. The empty product is 1.
///
/// The constant prefactor q^{-2(rho, omega_i)} of each Y_i is not carried: it
/// is determined by the Y-content, so monomials with equal content carry
/// equal prefactors, and brackets of logarithms ignore constants.
class YMonomial {
 public:
  YMonomial() = default;
  YMonomial(std::initializer_list<YFactor> factors);

  /// Y_node(zq^shift)^exponent. Node 0 is the convention Y_0 = 1.
  static YMonomial y(int node, int shift, int exponent = 1);

  const std::vector<YFactor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  int exponent(int node, int shift) const;
  int max_node() const;

  YMonomial inverse() const;

  friend YMonomial operator*(const YMonomial& a, const YMonomial& b);
  YMonomial& operator*=(const YMonomial& b) { return *this = *this * b; }
  friend auto operator<=>(const YMonomial&, const YMonomial&) = default;

 private:
  void insert(YFactor f);

  std::vector<YFactor> factors_;
};

/// (node, shift) -> (node, shift + s): the substitution z -> z q^s.
YMonomial shift_arg(const YMonomial& m, int s);
/// (node, shift, e) -> (node, -shift, -e).
YMonomial dual_transform(const YMonomial& m);

/// Finite Q-linear combination of Y-monomials with no zero coefficients.
class SeriesExpr {
 public:
  using TermMap = std::map<YMonomial, mpq_class>;

  SeriesExpr() = default;
  SeriesExpr(const YMonomial& m) { add(m, 1); }  // NOLINT(google-explicit-constructor)

  static SeriesExpr one() { return SeriesExpr(YMonomial{}); }

  /// Adds c * m, dropping the term if it cancels.
  void add(const YMonomial& m, const mpq_class& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(const YMonomial& m) const;

  SeriesExpr operator-() const;
  SeriesExpr& operator+=(const SeriesExpr& b);
  SeriesExpr& operator-=(const SeriesExpr& b);
  friend SeriesExpr operator+(SeriesExpr a, const SeriesExpr& b) { return a += b; }
  friend SeriesExpr operator-(SeriesExpr a, const SeriesExpr& b) { return a -= b; }
  friend SeriesExpr operator*(const mpq_class& c, const SeriesExpr& s);
  friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);
  friend bool operator==(const SeriesExpr&, const SeriesExpr&) = default;

 private:
  TermMap terms_;
};

SeriesExpr shift_arg(const SeriesExpr& s, int shift);
SeriesExpr dual_transform(const SeriesExpr& s);

struct SeriesDifference {
  YMonomial monomial;
  mpq_class lhs;
  mpq_class rhs;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<SeriesDifference> first_difference;
  explicit operator bool() const { return equal; }
};

/// Equality of canonical term maps, reporting the first monomial (in
/// canonical order) whose coefficients differ.
SeriesComparison series_equal(const SeriesExpr& a, const SeriesExpr& b);

/// Terms whose coefficient is not 1.
std::vector<std::pair<YMonomial, mpq_class>> non_unit_terms(const SeriesExpr& s);

}  // namespace wq
