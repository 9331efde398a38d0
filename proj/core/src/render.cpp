#include "wq/render.hpp"

#include <sstream>

namespace wq {
namespace {

std::string power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^{" + std::to_string(e) + "}";
}

// Descending exponents, t^{k} notation shared by text and LaTeX output.
std::string laurent_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + " ";
    out += power("t", e);
  }
  return out;
}

bool needs_parens(const LaurentPoly& p) { return p.term_count() > 1 || p.coeff(p.low_exponent()) < 0; }

template <class MonomialFn>
std::string series_string(const SeriesExpr& s, MonomialFn mono) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag != 1) {
      out += mag.get_str();
      if (!m.is_identity()) out += " ";
    }
    if (!m.is_identity() || mag == 1) out += mono(m);
  }
  return out;
}

}  // namespace

std::string to_text(const mpq_class& c) { return c.get_str(); }

std::string to_text(const LaurentPoly& p) { return laurent_string(p); }

std::string to_text(const RationalFunction& f) {
  if (f.denominator() == LaurentPoly(1)) return to_text(f.numerator());
  const auto& n = f.numerator();
  std::string num = needs_parens(n) ? "(" + to_text(n) + ")" : to_text(n);
  return num + "/(" + to_text(f.denominator()) + ")";
}

std::string to_text(const FieldMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << to_text(m(i, j));
    os << "]\n";
  }
  return os.str();
}

std::string to_text(const std::vector<std::vector<mpq_class>>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].get_str();
    out += "]";
  }
  return out + "]";
}

std::string shifted_arg(const std::string& var, int s) {
  if (s == 0) return var;
  return var + power("q", s);
}

std::string to_text(const YMonomial& m) {
  if (m.is_identity()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += " ";
    out += "Y_" + std::to_string(f.node);
    if (f.exponent != 1) out += "^{" + std::to_string(f.exponent) + "}";
    out += "(" + shifted_arg("z", f.shift) + ")";
  }
  return out;
}

std::string to_text(const SeriesExpr& s) {
  return series_string(s, [](const YMonomial& m) { return to_text(m); });
}

std::string delta_text(int a) {
  if (a == 0) return "δ(w/z)";
  if (a < 0) return "δ(w/" + shifted_arg("z", -a) + ")";
  return "δ(" + shifted_arg("w", a) + "/z)";
}

std::string to_latex(const LaurentPoly& p) { return laurent_string(p); }

std::string to_latex(const RationalFunction& f) {
  if (f.denominator() == LaurentPoly(1)) return to_latex(f.numerator());
  return "\\frac{" + to_latex(f.numerator()) + "}{" + to_latex(f.denominator()) + "}";
}

std::string to_latex(const FieldMatrix& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? " & " : "") + to_latex(m(i, j));
    out += i + 1 < m.dim() ? " \\\\\n" : "\n";
  }
  return out + "\\end{pmatrix}";
}

std::string to_latex(const YMonomial& m) {
  if (m.is_identity()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += " ";
    out += "Y_{" + std::to_string(f.node) + "}";
    if (f.exponent != 1) out += "^{" + std::to_string(f.exponent) + "}";
    out += "(" + shifted_arg("z", f.shift) + ")";
  }
  return out;
}

std::string to_latex(const SeriesExpr& s) {
  return series_string(s, [](const YMonomial& m) { return to_latex(m); });
}

std::string delta_latex(int a) {
  if (a == 0) return "\\delta\\left(\\frac{w}{z}\\right)";
  if (a < 0) return "\\delta\\left(\\frac{w}{" + shifted_arg("z", -a) + "}\\right)";
  return "\\delta\\left(\\frac{" + shifted_arg("w", a) + "}{z}\\right)";
}

nlohmann::json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::json to_json(const mpq_class& c) { return nlohmann::json::array({to_json(c.get_num()), to_json(c.get_den())}); }

nlohmann::json to_json(const LaurentPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, to_json(c.get_num()), to_json(c.get_den())});
  return out;
}

nlohmann::json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

nlohmann::json to_json(const FieldMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const YMonomial& m) {
  auto out = nlohmann::json::array();
  for (const auto& f : m.factors()) out.push_back({{"node", f.node}, {"shift", f.shift}, {"exp", f.exponent}});
  return out;
}

nlohmann::json to_json(const SeriesExpr& s) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) out.push_back({{"coeff", to_json(c)}, {"monomial", to_json(m)}});
  return out;
}

}  // namespace wq
