#include "wq/poisson.hpp"

#include <set>
#include <stdexcept>

#include "wq/errors.hpp"
#include "wq/render.hpp"
#include "wq/tseries.hpp"

namespace wq {
namespace {

poly::Coeffs dense_from_zero(const LaurentPoly& p, int base) {
  // Coefficients of t^{-base} p(t), which must be an ordinary polynomial.
  poly::Coeffs out;
  if (p.is_zero()) return out;
  out.assign(static_cast<std::size_t>(p.high_exponent() - base + 1), mpq_class(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - base)] = c;
  return out;
}

LaurentPoly to_laurent(const poly::Coeffs& c) { return LaurentPoly::from_dense(0, c); }

}  // namespace

SymbolEngine::SymbolEngine(const AlgebraPreset& preset) : rank_(preset.rank) {
  const auto n = static_cast<std::size_t>(rank_);
  poly::Coeffs lcm{1};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& den = preset.m(i, j).denominator();
      const poly::Coeffs d(den.dense().begin(), den.dense().end());
      lcm = poly::multiply(lcm, poly::divide_exact(d, poly::gcd(lcm, d)));
    }
  common_den_ = to_laurent(lcm);
  numerators_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& entry = preset.m(i, j);
      const poly::Coeffs d(entry.denominator().dense().begin(), entry.denominator().dense().end());
      numerators_.push_back(entry.numerator() * to_laurent(poly::divide_exact(lcm, d)));
    }
}

BracketSymbol SymbolEngine::symbol(const YMonomial& a, const YMonomial& b) const {
  LaurentPoly acc;
  for (const auto& fa : a.factors()) {
    if (fa.node > rank_) throw std::out_of_range("Y-node " + std::to_string(fa.node) + " exceeds rank");
    for (const auto& fb : b.factors()) {
      if (fb.node > rank_) throw std::out_of_range("Y-node " + std::to_string(fb.node) + " exceeds rank");
      const auto idx = static_cast<std::size_t>((fa.node - 1) * rank_ + (fb.node - 1));
      acc += numerators_[idx].shifted(fb.shift - fa.shift) * mpq_class(fa.exponent * fb.exponent);
    }
  }
  return {RationalFunction(acc, common_den_)};
}

BracketSymbol symbol(const YMonomial& a, const YMonomial& b, const AlgebraPreset& preset) {
  return SymbolEngine(preset).symbol(a, b);
}

RationalFunction DeltaDecomposition::reconstruct(const RationalFunction& m11) const {
  LaurentPoly deltas_poly;
  for (const auto& [a, c] : deltas) deltas_poly += LaurentPoly::monomial(c, a);
  return RationalFunction(base_coeff) * m11 + RationalFunction(deltas_poly);
}

DeltaDecomposition decompose(const BracketSymbol& s, const RationalFunction& m11) {
  auto attempt = [&](const mpq_class& alpha) -> std::optional<DeltaDecomposition> {
    const RationalFunction rest = s.value - RationalFunction(alpha) * m11;
    auto laurent = rest.as_laurent();
    if (!laurent) return std::nullopt;
    return DeltaDecomposition{alpha, laurent->terms()};
  };
  for (int alpha : {0, 1, -1})
    if (auto d = attempt(alpha)) return *d;

  // s - alpha*M11 is Laurent only if both share M11's reduced denominator q;
  // then s.num == alpha * m11.num (mod q) after clearing powers of t.
  const auto& q = m11.denominator();
  if (!(s.value.denominator() == q))
    throw NotDecomposable("symbol " + to_text(s.value) + " has a denominator foreign to M11");
  const int base = std::min(s.value.numerator().low_exponent(), m11.numerator().low_exponent());
  const poly::Coeffs q_coeffs(q.dense().begin(), q.dense().end());
  const auto rs = poly::divmod(dense_from_zero(s.value.numerator(), base), q_coeffs).second;
  const auto rm = poly::divmod(dense_from_zero(m11.numerator(), base), q_coeffs).second;
  if (!rs.empty() && rs.size() == rm.size()) {
    if (auto d = attempt(rs.back() / rm.back())) return *d;
  }
  throw NotDecomposable("symbol " + to_text(s.value) + " is not alpha*M11 plus a Laurent polynomial");
}

DeltaDecomposition decompose(const BracketSymbol& s, const AlgebraPreset& preset) {
  return decompose(s, preset.m11());
}

std::vector<int> BracketReport::support() const {
  std::vector<int> out;
  for (const auto& [a, c] : delta_terms) out.push_back(a);
  return out;
}

BracketReport bracket_sum(const SeriesExpr& a, const SeriesExpr& b, const AlgebraPreset& preset) {
  const SymbolEngine engine(preset);
  BracketReport report{.algebra = preset.id, .base_coeff = 0, .delta_terms = {}, .labels = {}};
  std::optional<mpq_class> base;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      DeltaDecomposition dec;
      try {
        dec = decompose(engine.symbol(ma, mb), preset);
      } catch (const NotDecomposable& e) {
        throw NotDecomposable("pair (" + to_text(ma) + ", " + to_text(mb) + "): " + e.what());
      }
      if (!base) {
        base = dec.base_coeff;
      } else if (*base != dec.base_coeff) {
        throw NonUniformBase("pair (" + to_text(ma) + ", " + to_text(mb) + ") has base coefficient " +
                             dec.base_coeff.get_str() + ", earlier pairs " + base->get_str());
      }
      for (const auto& [shift, c] : dec.deltas)
        report.delta_terms[shift].add(ma * shift_arg(mb, -shift), ca * cb * c);
    }
  }
  std::erase_if(report.delta_terms, [](const auto& kv) { return kv.second.is_zero(); });
  report.base_coeff = base.value_or(0);
  return report;
}

VerificationOutcome check_antisymmetry(const BracketReport& report) {
  VerificationOutcome out("antisymmetry " + report.algebra.name());
  for (const auto& [a, c] : report.delta_terms) {
    auto it = report.delta_terms.find(-a);
    const SeriesExpr partner = it == report.delta_terms.end() ? SeriesExpr{} : it->second;
    const auto cmp = series_equal(partner, -shift_arg(c, a));
    if (!cmp) {
      out.fail("C_{" + std::to_string(-a) + "} != -C_{" + std::to_string(a) + "}(zq^{" + std::to_string(a) +
               "}) at " + to_text(cmp.first_difference->monomial));
    }
  }
  return out;
}

namespace {

// Looks for C_s = x(z) and C_{-s} = -x(zq^s) with s = +k or -k.
std::optional<int> match_pair(const BracketReport& r, int k, const SeriesExpr& x) {
  for (int s : {-k, k}) {
    auto lo = r.delta_terms.find(s);
    auto hi = r.delta_terms.find(-s);
    if (lo == r.delta_terms.end() || hi == r.delta_terms.end()) continue;
    if (series_equal(lo->second, x) && series_equal(hi->second, -shift_arg(x, s))) return s;
  }
  return std::nullopt;
}

// "T_1(zq^{4})" -> "-T_1(wq^{4})".
void label_pair(BracketReport& r, int s, const std::string& name, int inner_shift) {
  if (name == "1") {
    r.labels[s] = "1";
    r.labels[-s] = "-1";
    return;
  }
  r.labels[s] = name + "(" + shifted_arg("z", inner_shift) + ")";
  r.labels[-s] = "-" + name + "(" + shifted_arg("w", inner_shift) + ")";
}

// "δ(w/zq^{2}) T_2(z) - δ(wq^{2}/z) T_2(w)", from the labels of a matched pair.
std::string orientation(const BracketReport& r, int s) {
  auto term = [&](int a) {
    const std::string& label = r.labels.at(a);
    const bool negative = label.front() == '-';
    const std::string body = negative ? label.substr(1) : label;
    return std::string(negative ? "- " : "+ ") + delta_text(a) + (body == "1" ? "" : " " + body);
  };
  return term(s) + " " + term(-s);
}

void expect_pair(ClosureResult& res, int k, const SeriesExpr& x, const std::string& name, int inner_shift) {
  if (auto s = match_pair(res.report, k, x)) {
    label_pair(res.report, *s, name, inner_shift);
    res.outcome.note("shift ±" + std::to_string(k) + ": " + orientation(res.report, *s));
  } else {
    res.outcome.fail("delta coefficients at ±" + std::to_string(k) + " do not match " + name +
                     (inner_shift ? "(" + shifted_arg("z", inner_shift) + ")" : std::string()));
  }
}

}  // namespace

ClosureResult verify_closure(const AlgebraPreset& preset) {
  ClosureResult res;
  res.outcome.check = "closure " + preset.id.name();
  const SeriesExpr t1 = build_t1(preset);
  res.report = bracket_sum(t1, t1, preset);
  auto& out = res.outcome;

  if (res.report.base_coeff != 1)
    out.fail("base coefficient of M11(w/z) T1(z)T1(w) is " + res.report.base_coeff.get_str() + ", expected 1");

  std::set<int> expected;
  int extremal = 0;
  switch (preset.id.kind) {
    case AlgebraKind::Dn:
      extremal = 2 * preset.id.n - 2;
      expected = {-2, 2, -extremal, extremal};
      break;
    case AlgebraKind::E6:
      expected = {-2, 2, -8, 8};
      break;
    case AlgebraKind::G2:
      extremal = 12;
      expected = {-2, 2, -8, 8, -12, 12};
      break;
  }
  const auto support = res.report.support();
  if (std::set<int>(support.begin(), support.end()) != expected) {
    std::string got;
    for (int a : support) got += (got.empty() ? "" : ", ") + std::to_string(a);
    out.fail("delta support {" + got + "} differs from expected");
  }

  out.absorb(check_antisymmetry(res.report));

  if (preset.id.kind == AlgebraKind::E6) {
    // T2 is whichever magnitude-2 coefficient carries positive coefficients.
    for (int s : {-2, 2}) {
      auto it = res.report.delta_terms.find(s);
      if (it == res.report.delta_terms.end()) continue;
      bool positive = true;
      for (const auto& [m, c] : it->second.terms()) positive = positive && c > 0;
      if (positive) {
        res.t2 = it->second;
        res.t2_shift = s;
        break;
      }
    }
    if (!res.t2_shift) {
      out.fail("no magnitude-2 delta coefficient with positive coefficients");
    } else {
      label_pair(res.report, *res.t2_shift, "T_2", 0);
      out.note("shift ±2: " + orientation(res.report, *res.t2_shift));
      mpq_class weight = 0;
      for (const auto& [m, c] : res.t2.terms()) weight += c;
      out.note("derived T2: " + std::to_string(res.t2.size()) + " distinct terms, total weight " + weight.get_str());
      if (const auto odd = non_unit_terms(res.t2); !odd.empty())
        out.note("warning: derived T2 has " + std::to_string(odd.size()) + " terms with coefficient != 1, e.g. " +
                 odd.front().second.get_str() + " " + to_text(odd.front().first));
    }
    res.t5 = build_t5_e6(preset);
    expect_pair(res, 8, shift_arg(*res.t5, 4), "T_5", 4);
    if (auto s = match_pair(res.report, 8, shift_arg(*res.t5, 4))) res.t5_shift = s;
  } else {
    res.t2 = build_t2(preset);
    res.t2_shift = match_pair(res.report, 2, res.t2);
    expect_pair(res, 2, res.t2, "T_2", 0);
    if (preset.id.kind == AlgebraKind::G2) expect_pair(res, 8, shift_arg(t1, 4), "T_1", 4);
    expect_pair(res, extremal, SeriesExpr::one(), "1", 0);
  }
  return res;
}

SeriesExpr extract_t2_e6(const AlgebraPreset& e6) {
  if (e6.id.kind != AlgebraKind::E6) throw std::invalid_argument("extract_t2_e6 requires the E6 preset");
  auto res = verify_closure(e6);
  if (!res.t2_shift) throw NotDecomposable("E6 closure produced no T2 coefficient");
  return res.t2;
}

}  // namespace wq
