#include "wq/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace wq {

YMonomial::YMonomial(std::initializer_list<YFactor> factors) {
  for (const auto& f : factors) insert(f);
}

YMonomial YMonomial::y(int node, int shift, int exponent) {
  if (node < 0) throw std::invalid_argument("Y-node index must be nonnegative");
  YMonomial m;
  if (node > 0) m.insert({node, shift, exponent});
  return m;
}

void YMonomial::insert(YFactor f) {
  if (f.node < 0) throw std::invalid_argument("Y-node index must be nonnegative");
  if (f.node == 0 || f.exponent == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), f, [](const YFactor& a, const YFactor& b) {
    return std::tie(a.node, a.shift) < std::tie(b.node, b.shift);
  });
  if (it != factors_.end() && it->node == f.node && it->shift == f.shift) {
    it->exponent += f.exponent;
    if (it->exponent == 0) factors_.erase(it);
  } else {
    factors_.insert(it, f);
  }
}

int YMonomial::exponent(int node, int shift) const {
  for (const auto& f : factors_)
    if (f.node == node && f.shift == shift) return f.exponent;
  return 0;
}

int YMonomial::max_node() const {
  int n = 0;
  for (const auto& f : factors_) n = std::max(n, f.node);
  return n;
}

YMonomial YMonomial::inverse() const {
  YMonomial m = *this;
  for (auto& f : m.factors_) f.exponent = -f.exponent;
  return m;
}

YMonomial operator*(const YMonomial& a, const YMonomial& b) {
  // Sorted merge of two canonical factor lists.
  YMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && std::tie(i->node, i->shift) < std::tie(j->node, j->shift))) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || std::tie(j->node, j->shift) < std::tie(i->node, i->shift)) {
      out.factors_.push_back(*j++);
    } else {
      const int e = i->exponent + j->exponent;
      if (e != 0) out.factors_.push_back({i->node, i->shift, e});
      ++i;
      ++j;
    }
  }
  return out;
}

YMonomial shift_arg(const YMonomial& m, int s) {
  YMonomial out;
  for (const auto& f : m.factors()) out *= YMonomial::y(f.node, f.shift + s, f.exponent);
  return out;
}

YMonomial dual_transform(const YMonomial& m) {
  YMonomial out;
  for (const auto& f : m.factors()) out *= YMonomial::y(f.node, -f.shift, -f.exponent);
  return out;
}

void SeriesExpr::add(const YMonomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class SeriesExpr::coeff(const YMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

SeriesExpr SeriesExpr::operator-() const {
  SeriesExpr s = *this;
  for (auto& [m, c] : s.terms_) c = -c;
  return s;
}

SeriesExpr& SeriesExpr::operator+=(const SeriesExpr& b) {
  for (const auto& [m, c] : b.terms_) add(m, c);
  return *this;
}

SeriesExpr& SeriesExpr::operator-=(const SeriesExpr& b) {
  for (const auto& [m, c] : b.terms_) add(m, -c);
  return *this;
}

SeriesExpr operator*(const mpq_class& c, const SeriesExpr& s) {
  SeriesExpr out;
  for (const auto& [m, x] : s.terms_) out.add(m, c * x);
  return out;
}

SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) {
  SeriesExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  return out;
}

SeriesExpr shift_arg(const SeriesExpr& s, int shift) {
  SeriesExpr out;
  for (const auto& [m, c] : s.terms()) out.add(shift_arg(m, shift), c);
  return out;
}

SeriesExpr dual_transform(const SeriesExpr& s) {
  SeriesExpr out;
  for (const auto& [m, c] : s.terms()) out.add(dual_transform(m), c);
  return out;
}

SeriesComparison series_equal(const SeriesExpr& a, const SeriesExpr& b) {
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first))
      return {false, SeriesDifference{i->first, i->second, 0}};
    if (i == a.terms().end() || j->first < i->first) return {false, SeriesDifference{j->first, 0, j->second}};
    if (i->second != j->second) return {false, SeriesDifference{i->first, i->second, j->second}};
    ++i;
    ++j;
  }
  return {};
}

std::vector<std::pair<YMonomial, mpq_class>> non_unit_terms(const SeriesExpr& s) {
  std::vector<std::pair<YMonomial, mpq_class>> out;
  for (const auto& [m, c] : s.terms())
    if (c != 1) out.emplace_back(m, c);
  return out;
}

}  // namespace wq
