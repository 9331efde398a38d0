#include <doctest.h>

#include "oracle/eval_oracle.hpp"
#include "wq/algebras.hpp"
#include "wq/errors.hpp"
#include "wq/field_matrix.hpp"

using namespace wq;
using RF = RationalFunction;

namespace {

oracle::Mat eval(const FieldMatrix& m, const mpq_class& t0) {
  oracle::Mat out = oracle::zeros(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j).eval(t0);
  return out;
}

const mpq_class kT0[] = {mpq_class(2), mpq_class(3), mpq_class(5, 7)};

}  // namespace

TEST_CASE("products") {
  const AlgebraPreset g2 = build_preset(AlgebraKind::G2);
  CHECK(FieldMatrix::identity(2) * g2.m == g2.m);
  CHECK(g2.m * FieldMatrix::identity(2) == g2.m);

  const FieldMatrix dd = g2.d * g2.d;
  CHECK(dd.is_diagonal());
  CHECK(dd(0, 0) == RF(sym_minus(1) * sym_minus(1)));
  CHECK(dd(1, 1) == RF(sym_minus(3) * sym_minus(3)));

  CHECK_THROWS_AS(g2.m * FieldMatrix::identity(3), DimensionMismatch);
  CHECK_THROWS_AS(g2.m - FieldMatrix::identity(3), DimensionMismatch);

  const AlgebraPreset e6 = build_preset(AlgebraKind::E6);
  const FieldMatrix prod = e6.m * e6.expected_mtilde;
  for (const auto& t0 : kT0) CHECK(eval(prod, t0) == oracle::mul(eval(e6.m, t0), eval(e6.expected_mtilde, t0)));
}

TEST_CASE("G2 inverse") {
  const AlgebraPreset g2 = build_preset(AlgebraKind::G2);
  const FieldMatrix inv = inverse(g2.m);
  CHECK(g2.m * inv == FieldMatrix::identity(2));
  CHECK(inv * g2.m == FieldMatrix::identity(2));

  // Adjugate over determinant.
  const RF det = g2.m(0, 0) * g2.m(1, 1) - g2.m(0, 1) * g2.m(1, 0);
  CHECK(determinant(g2.m) == det);
  CHECK(inv(0, 0) == g2.m(1, 1) / det);
  CHECK(inv(0, 1) == -g2.m(0, 1) / det);
  CHECK(inv(1, 1) == g2.m(0, 0) / det);

  CHECK(det.numerator() == LaurentPoly::from_terms({{8, 1}, {6, -1}, {2, -1}, {0, 1}}));
  CHECK(det.denominator() == LaurentPoly::from_terms({{8, 1}, {4, -1}, {0, 1}}));
}

TEST_CASE("E6 inverse reproduces the deformed Cartan matrix") {
  const AlgebraPreset e6 = build_preset(AlgebraKind::E6);
  const auto elim = eliminate(e6.m);
  CHECK(e6.m * elim.inverse == FieldMatrix::identity(6));
  const FieldMatrix mt = e6.d * elim.inverse * e6.d;
  CHECK(mt == e6.expected_mtilde);
  CHECK(mt(2, 5) == RF(LaurentPoly::monomial(1, -1) - LaurentPoly::t()));
  CHECK(mt(0, 4).is_zero());
  CHECK(elim.determinant == determinant(e6.m));
}

TEST_CASE("inverse agrees with numeric inversion") {
  for (const auto& p : {build_preset(AlgebraKind::G2), build_preset(AlgebraKind::E6), build_preset(AlgebraKind::Dn, 4),
                        build_preset(AlgebraKind::Dn, 7)}) {
    CAPTURE(p.id.name());
    const FieldMatrix inv = inverse(p.m);
    for (const auto& t0 : kT0) {
      const oracle::Mat m0 = oracle::m_of(p.id, t0);
      CHECK(eval(p.m, t0) == m0);
      CHECK(eval(inv, t0) == oracle::inverse(m0));
      CHECK(determinant(p.m).eval(t0) == oracle::determinant(m0));
    }
  }
}

TEST_CASE("singular input") {
  FieldMatrix m(2);
  m(0, 0) = RF(sym_minus(1));
  m(0, 1) = RF(sym_plus(1));
  m(1, 0) = RF(sym_minus(1) * sym_minus(2));
  m(1, 1) = RF(sym_plus(1) * sym_minus(2));
  CHECK_THROWS_AS(inverse(m), SingularMatrix);
  CHECK(determinant(m).is_zero());
  CHECK_THROWS_AS(inverse(FieldMatrix(3)), SingularMatrix);
}

TEST_CASE("structure helpers") {
  const AlgebraPreset d5 = build_preset(AlgebraKind::Dn, 5);
  CHECK(d5.m.transpose() == d5.m);
  CHECK(d5.d.is_diagonal());
  CHECK_FALSE(d5.m.is_diagonal());
  CHECK_FALSE(first_difference(d5.m, d5.m));

  FieldMatrix other = d5.m;
  other(3, 1) = other(3, 1) + RF(1);
  const auto diff = first_difference(d5.m, other);
  REQUIRE(diff);
  CHECK(diff->row == 3);
  CHECK(diff->col == 1);

  CHECK(d5.m.inverted_t() == FieldMatrix(5) - d5.m);
  CHECK_THROWS_AS(FieldMatrix(2, std::vector<RF>(3)), DimensionMismatch);
}
