#include "wq/verify.hpp"

#include <set>

#include "wq/poisson.hpp"
#include "wq/render.hpp"
#include "wq/tseries.hpp"

namespace wq {
namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

void check_odd(VerificationOutcome& out, const FieldMatrix& m, const std::string& name) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!(m(i, j).inverted_t() == -m(i, j))) out.fail(name + at(i, j) + " is not odd under t -> 1/t");
}

void check_symmetric(VerificationOutcome& out, const FieldMatrix& m, const std::string& name) {
  if (auto d = first_difference(m, m.transpose())) out.fail(name + " is not symmetric at " + at(d->row, d->col));
}

}  // namespace

VerificationOutcome verify_matrix_properties(const AlgebraPreset& p) {
  VerificationOutcome out("matrix properties " + p.id.name());
  const auto rank = static_cast<std::size_t>(p.rank);
  if (p.m.dim() != rank || p.d.dim() != rank || p.expected_mtilde.dim() != rank)
    out.fail("matrix dimension differs from rank " + std::to_string(p.rank));
  check_symmetric(out, p.m, "M");
  check_symmetric(out, p.expected_mtilde, "Mtilde");
  check_odd(out, p.m, "M");
  check_odd(out, p.d, "D");
  check_odd(out, p.expected_mtilde, "Mtilde");
  if (!p.d.is_diagonal()) out.fail("D is not diagonal");
  for (std::size_t i = 0; i < p.d_degrees.size() && i < p.d.dim(); ++i)
    if (!(p.d(i, i) == RationalFunction(sym_minus(p.d_degrees[i]))))
      out.fail("D" + at(i, i) + " is not t^k - t^-k with k = " + std::to_string(p.d_degrees[i]));
  const RationalFunction det = determinant(p.m);
  if (det.is_zero()) out.fail("det M = 0");
  else out.note("det M = " + to_text(det));
  return out;
}

VerificationOutcome verify_dual_identity(const AlgebraPreset& p) {
  VerificationOutcome out("dual identity " + p.id.name());
  const FieldMatrix back = p.d * inverse(p.expected_mtilde) * p.d;
  if (auto d = first_difference(back, p.m))
    out.fail("D Mtilde^-1 D differs from M at " + at(d->row, d->col) + ": " + to_text(back(d->row, d->col)) +
             " vs " + to_text(p.m(d->row, d->col)));
  return out;
}

VerificationOutcome verify_lambda_diagonals(const AlgebraPreset& p) {
  VerificationOutcome out("lambda diagonals " + p.id.name());
  const std::set<YMonomial> distinct(p.lambdas.begin(), p.lambdas.end());
  if (distinct.size() != p.lambdas.size()) out.fail("Lambda monomials are not pairwise distinct");

  const SymbolEngine engine(p);
  const DeltaDecomposition pure{1, {}};
  std::vector<int> deviating;
  for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
    const auto dec = decompose(engine.symbol(p.lambdas[i], p.lambdas[i]), p);
    if (!(dec == pure)) deviating.push_back(static_cast<int>(i + 1));
  }
  if (p.id.kind == AlgebraKind::Dn) {
    for (int i : deviating) out.fail("{Lambda_" + std::to_string(i) + ", Lambda_" + std::to_string(i) + "} != M11");
  } else if (deviating.empty()) {
    out.note("{Lambda_i(z), Lambda_i(w)} = M11(w/z) Lambda_i(z)Lambda_i(w) for all " +
             std::to_string(p.lambdas.size()) + " i");
  } else {
    std::string list;
    for (int i : deviating) list += (list.empty() ? "" : ", ") + std::to_string(i);
    out.note("diagonal brackets carry delta terms for i in {" + list + "}");
  }
  return out;
}

VerificationOutcome verify_symbol_antisymmetry(const AlgebraPreset& p) {
  VerificationOutcome out("symbol antisymmetry " + p.id.name());
  const SymbolEngine engine(p);
  for (std::size_t i = 0; i < p.lambdas.size(); ++i)
    for (std::size_t j = 0; j < p.lambdas.size(); ++j) {
      const auto ab = engine.symbol(p.lambdas[i], p.lambdas[j]).value;
      const auto ba = engine.symbol(p.lambdas[j], p.lambdas[i]).value;
      if (!(ba == -ab.inverted_t())) out.fail("pair " + at(i, j) + " violates symbol(B,A)(t) = -symbol(A,B)(1/t)");
    }
  return out;
}

VerificationOutcome verify_duality(const AlgebraPreset& p) {
  VerificationOutcome out("duality " + p.id.name());
  const SeriesExpr t1 = build_t1(p);
  const SeriesExpr dual = dual_transform(t1);
  if (!series_equal(dual_transform(dual), t1)) out.fail("dual_transform is not an involution on T1");
  switch (p.id.kind) {
    case AlgebraKind::G2:
      if (!series_equal(dual, shift_arg(t1, 12))) out.fail("dual_transform(T1) != T1(zq^{12})");
      break;
    case AlgebraKind::E6: {
      const SeriesExpr t5 = build_t5_e6(p);
      if (!series_equal(dual, shift_arg(t5, 12))) out.fail("dual_transform(T1) != T5(zq^{12})");
      if (series_equal(t5, t1)) out.fail("T5 coincides with T1");
      if (t5.size() != 27) out.fail("T5 has " + std::to_string(t5.size()) + " terms, expected 27");
      break;
    }
    case AlgebraKind::Dn: {
      const int h = 2 * p.id.n - 2;
      if (series_equal(dual, shift_arg(t1, h)))
        out.note("dual_transform(T1) = T1(zq^{" + std::to_string(h) + "})");
      else
        out.note("dual_transform(T1) is not T1(zq^{" + std::to_string(h) + "})");
      break;
    }
  }
  return out;
}

std::vector<VerificationOutcome> verify_all(const AlgebraPreset& p) {
  std::vector<VerificationOutcome> out;
  out.push_back(verify_cartan(p));
  out.push_back(verify_matrix_properties(p));
  out.push_back(verify_dual_identity(p));
  out.push_back(verify_lambda_diagonals(p));
  out.push_back(verify_symbol_antisymmetry(p));
  out.push_back(verify_closure(p).outcome);
  out.push_back(verify_duality(p));
  return out;
}

}  // namespace wq
