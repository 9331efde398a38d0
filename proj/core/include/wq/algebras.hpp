#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wq/field_matrix.hpp"
#include "wq/monomial.hpp"
#include "wq/outcome.hpp"

namespace wq {

enum class AlgebraKind { Dn, E6, G2 };

struct AlgebraId {
  AlgebraKind kind;
  int n = 0;  ///< Only meaningful for D_n.

  /// "D5", "E6", "G2".
  std::string name() const;
  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

/// Everything the bracket engine needs for one algebra: the matrices M(t),
/// D(t), the expected deformed Cartan matrix, and the Lambda monomials (with
/// their printed q-shifts, unrenormalized).
struct AlgebraPreset {
  AlgebraId id;
  int rank = 0;
  FieldMatrix m;
  FieldMatrix d;
  FieldMatrix expected_mtilde;
  /// D = diag(t^k - t^-k) with these k.
  std::vector<int> d_degrees;
  /// Lambda_1 .. Lambda_N (stored zero-based).
  std::vector<YMonomial> lambdas;
  int fundamental_dim = 0;
  /// Pairs (i, j), one-based, with T2(z) = sum Lambda_i(z) Lambda_j(zq^2); empty for E6.
  std::vector<std::pair<int, int>> t2_pairs;
  std::optional<SeriesExpr> t2_definition;
  /// Symmetrized Cartan matrix: classical limit of Mtilde / (t - t^-1).
  std::vector<std::vector<int>> symmetrized_cartan;
  /// Node of the dual fundamental weight to node 1.
  int dual_node = 1;

  const YMonomial& lambda(int i) const { return lambdas.at(static_cast<std::size_t>(i - 1)); }
  const RationalFunction& m11() const { return m(0, 0); }
};

/// Throws std::invalid_argument for D_n with n < 4 (or missing n).
AlgebraPreset build_preset(AlgebraKind kind, std::optional<int> n = std::nullopt);
/// Accepts "dn", "e6", "g2" (case-insensitive); throws std::invalid_argument otherwise.
AlgebraPreset build_preset(std::string_view kind, std::optional<int> n = std::nullopt);
AlgebraKind parse_kind(std::string_view kind);

/// Exact value of Mtilde_ij(t) / (t - t^-1) at t = 1, entrywise.
std::vector<std::vector<mpq_class>> classical_limit(const FieldMatrix& mtilde);

/// D M^-1 D == expected Mtilde symbolically, and its normalized classical
/// limit equals the symmetrized Cartan matrix.
VerificationOutcome verify_cartan(const AlgebraPreset& preset);

}  // namespace wq
