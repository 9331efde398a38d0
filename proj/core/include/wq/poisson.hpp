#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wq/algebras.hpp"
#include "wq/monomial.hpp"
#include "wq/outcome.hpp"
#include "wq/rational_function.hpp"

namespace wq {

/// f(t) with {log A(z), log B(w)} = sum_n f(q^n) (w/z)^n.
struct BracketSymbol {
  RationalFunction value;
  friend bool operator==(const BracketSymbol&, const BracketSymbol&) = default;
};

/// Bracket symbols of Y-monomials over one algebra. For
///   A = prod Y_{i_k}^{e_k}(zq^{a_k}),  B = prod Y_{j_l}^{f_l}(wq^{b_l})
/// the symbol is sum_{k,l} e_k f_l M_{i_k j_l}(t) t^{b_l - a_k}. The matrix is
/// held over a common denominator so each symbol costs one gcd.
class SymbolEngine {
 public:
  explicit SymbolEngine(const AlgebraPreset& preset);

  /// Throws std::out_of_range when a node exceeds the rank.
  BracketSymbol symbol(const YMonomial& a, const YMonomial& b) const;

 private:
  int rank_;
  LaurentPoly common_den_;
  std::vector<LaurentPoly> numerators_;
};

BracketSymbol symbol(const YMonomial& a, const YMonomial& b, const AlgebraPreset& preset);

/// symbol = base_coeff * M11(t) + sum_a deltas[a] * t^a.
/// Shift a stands for Delta(a) = delta(q^a w/z), supported on w = z q^{-a}:
/// delta(w/zq^k) is Delta(-k), delta(wq^k/z) is Delta(+k).
struct DeltaDecomposition {
  mpq_class base_coeff;
  std::map<int, mpq_class> deltas;

  RationalFunction reconstruct(const RationalFunction& m11) const;
  friend bool operator==(const DeltaDecomposition&, const DeltaDecomposition&) = default;
};

/// Solves for the unique rational base coefficient; throws NotDecomposable.
DeltaDecomposition decompose(const BracketSymbol& s, const RationalFunction& m11);
DeltaDecomposition decompose(const BracketSymbol& s, const AlgebraPreset& preset);

/// {A(z), B(w)} = base_coeff * M11(w/z) A(z)B(w) + sum_a Delta(a) C_a(z),
/// where C_a(z) collects the delta coefficients with w = z q^{-a} substituted.
struct BracketReport {
  AlgebraId algebra;
  mpq_class base_coeff;
  std::map<int, SeriesExpr> delta_terms;
  /// Names for identified coefficient series, e.g. "T_2(z)", "-T_1(wq^{4})".
  std::map<int, std::string> labels;

  std::vector<int> support() const;
};

/// Bilinear bracket of two series. Throws NotDecomposable or NonUniformBase,
/// naming the offending term pair.
BracketReport bracket_sum(const SeriesExpr& a, const SeriesExpr& b, const AlgebraPreset& preset);

/// For a self-bracket {T(z), T(w)}: C_{-a} = -C_a(zq^a) for every shift a.
VerificationOutcome check_antisymmetry(const BracketReport& report);

struct ClosureResult {
  VerificationOutcome outcome;
  BracketReport report;
  /// Given T2 (D_n, G2) or the extracted coefficient series (E6).
  SeriesExpr t2;
  /// Shift s with C_s = +T2(z); -2 is the delta(w/zq^2) T2(z) orientation.
  std::optional<int> t2_shift;
  std::optional<SeriesExpr> t5;
  std::optional<int> t5_shift;
};

/// Computes {T1, T1} and matches it against the closure formula of the algebra.
ClosureResult verify_closure(const AlgebraPreset& preset);

/// The E6 T2, read off the magnitude-2 delta coefficient of {T1, T1}.
SeriesExpr extract_t2_e6(const AlgebraPreset& e6);

}  // namespace wq
