#include "wq/algebras.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "wq/render.hpp"

namespace wq {
namespace {

using Y = YMonomial;

RationalFunction ratio(const LaurentPoly& num, const LaurentPoly& den) { return {num, den}; }

LaurentPoly minus(int a) { return sym_minus(a); }
LaurentPoly plus(int a) { return sym_plus(a); }

FieldMatrix symmetric_from(std::size_t rank, const std::map<std::pair<int, int>, RationalFunction>& upper) {
  FieldMatrix m(rank);
  for (const auto& [ij, v] : upper) {
    const auto i = static_cast<std::size_t>(ij.first - 1);
    const auto j = static_cast<std::size_t>(ij.second - 1);
    m(i, j) = v;
    m(j, i) = v;
  }
  return m;
}

// Simply-laced deformed Cartan matrix: t^2 - t^-2 on the diagonal, -(t - t^-1) on edges.
FieldMatrix simply_laced_mtilde(std::size_t rank, const std::vector<std::pair<int, int>>& edges) {
  FieldMatrix m(rank);
  for (std::size_t i = 0; i < rank; ++i) m(i, i) = minus(2);
  for (const auto& [a, b] : edges) {
    m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = -minus(1);
    m(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) = -minus(1);
  }
  return m;
}

std::vector<std::vector<int>> cartan_from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (const auto& [x, y] : edges) {
    a[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = -1;
    a[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] = -1;
  }
  return a;
}

FieldMatrix d_matrix(const std::vector<int>& degrees) {
  std::vector<RationalFunction> diag;
  for (int k : degrees) diag.emplace_back(minus(k));
  return FieldMatrix::diagonal(diag);
}

SeriesExpr t2_from_pairs(const std::vector<YMonomial>& lambdas, const std::vector<std::pair<int, int>>& pairs) {
  SeriesExpr t2;
  for (const auto& [i, j] : pairs)
    t2.add(lambdas[static_cast<std::size_t>(i - 1)] * shift_arg(lambdas[static_cast<std::size_t>(j - 1)], 2), 1);
  return t2;
}

AlgebraPreset build_dn(int n) {
  AlgebraPreset p;
  p.id = {AlgebraKind::Dn, n};
  p.rank = n;
  const auto rank = static_cast<std::size_t>(n);

  const LaurentPoly outer = plus(n - 1);
  std::map<std::pair<int, int>, RationalFunction> upper;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j)
      upper[{i, j}] = ratio(minus(i) * plus(n - 1 - j), outer);
  for (int i = 1; i <= n - 2; ++i) {
    upper[{i, n - 1}] = ratio(minus(i), outer);
    upper[{i, n}] = ratio(minus(i), outer);
  }
  upper[{n - 1, n}] = ratio(minus(n - 2), plus(1) * outer);
  upper[{n - 1, n - 1}] = ratio(minus(n), plus(1) * outer);
  upper[{n, n}] = ratio(minus(n), plus(1) * outer);
  p.m = symmetric_from(rank, upper);

  p.d_degrees.assign(rank, 1);
  p.d = d_matrix(p.d_degrees);

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n - 2; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 2, n);
  p.expected_mtilde = simply_laced_mtilde(rank, edges);
  p.symmetrized_cartan = cartan_from_edges(n, edges);

  // Y_0 = 1 is absorbed by YMonomial::y(0, ...).
  auto& l = p.lambdas;
  for (int i = 1; i <= n - 2; ++i) l.push_back(Y::y(i, -i + 1) * Y::y(i - 1, -i, -1));
  l.push_back(Y::y(n, -n + 2) * Y::y(n - 1, -n + 2) * Y::y(n - 2, -n + 1, -1));
  l.push_back(Y::y(n - 1, -n + 2) * Y::y(n, -n, -1));
  l.push_back(Y::y(n, -n + 2) * Y::y(n - 1, -n, -1));
  l.push_back(Y::y(n - 2, -n + 1) * Y::y(n - 1, -n, -1) * Y::y(n, -n, -1));
  for (int i = n - 2; i >= 1; --i) l.push_back(Y::y(i - 1, -2 * n + i + 2) * Y::y(i, -2 * n + i + 1, -1));
  p.fundamental_dim = 2 * n;

  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) p.t2_pairs.emplace_back(i, j);
  p.t2_pairs.emplace_back(n + 1, n);
  p.t2_definition = t2_from_pairs(p.lambdas, p.t2_pairs);
  p.dual_node = 1;
  return p;
}

AlgebraPreset build_e6() {
  AlgebraPreset p;
  p.id = {AlgebraKind::E6, 0};
  p.rank = 6;

  const LaurentPoly d6 = plus(6);
  const LaurentPoly d6m3 = plus(6) * minus(3);
  std::map<std::pair<int, int>, RationalFunction> u;
  u[{1, 1}] = u[{5, 5}] = ratio(minus(1) * minus(8), d6m3);
  u[{1, 2}] = u[{4, 5}] = ratio(minus(1) * minus(5) * plus(2), d6m3);
  u[{2, 2}] = u[{4, 4}] = ratio(minus(4) * minus(5), d6m3);
  u[{1, 3}] = u[{2, 6}] = u[{4, 6}] = u[{3, 5}] = ratio(minus(4), d6);
  u[{2, 3}] = u[{3, 4}] = ratio(minus(4) * plus(1), d6);
  u[{3, 3}] = ratio(minus(3) * plus(1) * plus(2), d6);
  u[{1, 6}] = u[{5, 6}] = ratio(minus(1) * plus(2), d6);
  u[{3, 6}] = ratio(minus(3) * plus(2), d6);
  u[{6, 6}] = ratio(minus(4) * plus(3), plus(1) * d6);
  u[{1, 4}] = u[{2, 5}] = ratio(minus(2) * minus(4), d6m3);
  u[{2, 4}] = ratio(minus(2) * minus(4) * plus(1), d6m3);
  u[{1, 5}] = ratio(minus(1) * minus(4), d6m3);
  p.m = symmetric_from(6, u);

  p.d_degrees.assign(6, 1);
  p.d = d_matrix(p.d_degrees);

  const std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
  p.expected_mtilde = simply_laced_mtilde(6, edges);
  p.symmetrized_cartan = cartan_from_edges(6, edges);

  auto y = [](int node, int shift) { return Y::y(node, shift); };
  auto yi = [](int node, int shift) { return Y::y(node, shift, -1); };
  p.lambdas = {
      yi(1, -8) * y(2, -7) * yi(3, -8) * y(6, -7),
      yi(1, -8) * y(2, -7) * yi(6, -9),
      yi(1, -8) * y(3, -6) * yi(4, -7),
      yi(1, -8) * y(4, -5) * yi(5, -6),
      yi(2, -9) * y(3, -8) * yi(6, -9),
      yi(2, -9) * y(6, -7),
      yi(3, -10) * y(4, -9),
      yi(4, -11) * y(5, -10),
      y(1, -6) * yi(2, -7) * y(3, -6) * yi(4, -7),
      y(1, -6) * yi(2, -7) * y(4, -5) * yi(5, -6),
      y(1, -6) * yi(3, -8) * y(6, -7),
      y(1, -6) * yi(6, -9),
      y(2, -5) * yi(3, -6) * y(4, -5) * yi(5, -6),
      y(2, -5) * yi(4, -7),
      y(3, -4) * yi(5, -6) * yi(6, -5),
      yi(5, -6) * y(6, -3),
      yi(1, -8) * y(5, -4),
      y(1, -6) * yi(2, -7) * y(5, -4),
      y(2, -5) * yi(3, -6) * y(5, -4),
      y(3, -4) * yi(4, -5) * y(5, -4) * yi(6, -5),
      yi(4, -5) * y(5, -4) * y(6, -3),
      y(4, -3) * yi(6, -5),
      yi(3, -4) * y(4, -3) * y(6, -3),
      yi(2, -3) * y(3, -2),
      yi(1, -2) * y(2, -1),
      y(1, 0),
      yi(5, -12),
  };
  p.fundamental_dim = 27;
  p.dual_node = 5;
  return p;
}

AlgebraPreset build_g2() {
  AlgebraPreset p;
  p.id = {AlgebraKind::G2, 0};
  p.rank = 2;

  const LaurentPoly d6 = plus(6);
  std::map<std::pair<int, int>, RationalFunction> u;
  u[{1, 1}] = ratio(plus(3) * minus(1) * plus(2), d6);
  u[{1, 2}] = ratio(minus(3) * plus(2), d6);
  u[{2, 2}] = ratio(minus(3) * plus(1) * plus(2), d6);
  p.m = symmetric_from(2, u);

  p.d_degrees = {1, 3};
  p.d = d_matrix(p.d_degrees);

  p.expected_mtilde = FieldMatrix(2, {minus(2), -minus(3), -minus(3), minus(6)});
  p.symmetrized_cartan = {{2, -3}, {-3, 6}};

  auto y = [](int node, int shift) { return Y::y(node, shift); };
  auto yi = [](int node, int shift) { return Y::y(node, shift, -1); };
  p.lambdas = {
      y(1, 0),
      yi(1, -2) * y(2, -1),
      y(1, -4) * y(1, -6) * yi(2, -7),
      y(1, -4) * yi(1, -8),
      yi(1, -6) * yi(1, -8) * y(2, -5),
      y(1, -10) * yi(2, -11),
      yi(1, -12),
  };
  p.fundamental_dim = 7;

  for (int i = 2; i <= 7; ++i) p.t2_pairs.emplace_back(1, i);
  for (int i = 2; i <= 6; ++i) p.t2_pairs.emplace_back(i, 7);
  p.t2_pairs.insert(p.t2_pairs.end(), {{2, 5}, {2, 6}, {3, 5}, {3, 6}});
  p.t2_definition = t2_from_pairs(p.lambdas, p.t2_pairs);
  p.dual_node = 1;
  return p;
}

}  // namespace

std::string AlgebraId::name() const {
  switch (kind) {
    case AlgebraKind::Dn:
      return "D" + std::to_string(n);
    case AlgebraKind::E6:
      return "E6";
    case AlgebraKind::G2:
      return "G2";
  }
  return "?";
}

AlgebraKind parse_kind(std::string_view kind) {
  std::string k(kind);
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  if (k == "dn") return AlgebraKind::Dn;
  if (k == "e6") return AlgebraKind::E6;
  if (k == "g2") return AlgebraKind::G2;
  throw std::invalid_argument("unknown algebra '" + std::string(kind) + "' (expected dn, e6 or g2)");
}

AlgebraPreset build_preset(std::string_view kind, std::optional<int> n) { return build_preset(parse_kind(kind), n); }

AlgebraPreset build_preset(AlgebraKind kind, std::optional<int> n) {
  AlgebraPreset p;
  switch (kind) {
    case AlgebraKind::Dn:
      if (!n) throw std::invalid_argument("D_n requires n");
      if (*n < 4) throw std::invalid_argument("D_n requires n >= 4, got " + std::to_string(*n));
      p = build_dn(*n);
      break;
    case AlgebraKind::E6:
      p = build_e6();
      break;
    case AlgebraKind::G2:
      p = build_g2();
      break;
    default:
      throw std::invalid_argument("unknown algebra kind");
  }
  // decompose() relies on alpha * M11 being uniquely separable from Laurent terms.
  if (p.m11().as_laurent()) throw std::logic_error(p.id.name() + ": M11 is a Laurent polynomial");
  if (p.lambdas.size() != static_cast<std::size_t>(p.fundamental_dim))
    throw std::logic_error(p.id.name() + ": Lambda list has wrong length");
  return p;
}

std::vector<std::vector<mpq_class>> classical_limit(const FieldMatrix& mtilde) {
  const RationalFunction scale = sym_minus(1);
  std::vector<std::vector<mpq_class>> out(mtilde.dim(), std::vector<mpq_class>(mtilde.dim()));
  for (std::size_t i = 0; i < mtilde.dim(); ++i)
    for (std::size_t j = 0; j < mtilde.dim(); ++j) out[i][j] = (mtilde(i, j) / scale).eval(1);
  return out;
}

VerificationOutcome verify_cartan(const AlgebraPreset& preset) {
  VerificationOutcome out("cartan " + preset.id.name());
  const FieldMatrix computed = preset.d * inverse(preset.m) * preset.d;
  if (auto diff = first_difference(computed, preset.expected_mtilde)) {
    out.fail("D M^-1 D differs from expected Mtilde at (" + std::to_string(diff->row + 1) + ", " +
             std::to_string(diff->col + 1) + "): computed " + to_text(computed(diff->row, diff->col)) +
             ", expected " + to_text(preset.expected_mtilde(diff->row, diff->col)));
  }
  const auto limit = classical_limit(computed);
  for (std::size_t i = 0; i < limit.size(); ++i)
    for (std::size_t j = 0; j < limit.size(); ++j)
      if (limit[i][j] != preset.symmetrized_cartan[i][j])
        out.fail("classical limit at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") is " +
                 limit[i][j].get_str() + ", expected " + std::to_string(preset.symmetrized_cartan[i][j]));
  out.note("classical limit " + to_text(limit));
  return out;
}

}  // namespace wq
