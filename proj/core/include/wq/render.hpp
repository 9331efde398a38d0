#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "wq/field_matrix.hpp"
#include "wq/laurent.hpp"
#include "wq/monomial.hpp"
#include "wq/rational_function.hpp"

namespace wq {

// Plain text, in the notation Y_1^{-1}(zq^{-8}) Y_2(zq^{-7}), t^{2} - t^{-2}.
std::string to_text(const mpq_class& c);
std::string to_text(const LaurentPoly& p);
std::string to_text(const RationalFunction& f);
std::string to_text(const FieldMatrix& m);
std::string to_text(const std::vector<std::vector<mpq_class>>& m);
std::string to_text(const YMonomial& m);
std::string to_text(const SeriesExpr& s);
/// The argument z q^s as text: "z", "zq", "zq^{-3}".
std::string shifted_arg(const std::string& var, int s);
/// Delta(a) = delta(q^a w/z) in the customary orientation:
/// a < 0 -> "δ(w/zq^{k})", a > 0 -> "δ(wq^{a}/z)", a = 0 -> "δ(w/z)".
std::string delta_text(int a);

std::string to_latex(const LaurentPoly& p);
std::string to_latex(const RationalFunction& f);
std::string to_latex(const FieldMatrix& m);
std::string to_latex(const YMonomial& m);
std::string to_latex(const SeriesExpr& s);
std::string delta_latex(int a);

// JSON: integers are emitted as numbers when they fit in 64 bits, else as strings.
nlohmann::json to_json(const mpz_class& z);
/// [numerator, denominator]
nlohmann::json to_json(const mpq_class& c);
/// Sorted list of [exponent, numerator, denominator] triples.
nlohmann::json to_json(const LaurentPoly& p);
/// {"num": ..., "den": ...}
nlohmann::json to_json(const RationalFunction& f);
/// {"dim": n, "rows": [[...]]}
nlohmann::json to_json(const FieldMatrix& m);
/// [{"node", "shift", "exp"}...]
nlohmann::json to_json(const YMonomial& m);
/// [{"coeff": [num, den], "monomial": [...]}...]
nlohmann::json to_json(const SeriesExpr& s);

}  // namespace wq
