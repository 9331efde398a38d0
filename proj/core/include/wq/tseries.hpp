#pragma once

#include "wq/algebras.hpp"
#include "wq/monomial.hpp"

namespace wq {

/// T1(z) = sum of all Lambda_i(z).
SeriesExpr build_t1(const AlgebraPreset& preset);

/// T2(z) = sum over the algebra's pair list of Lambda_i(z) Lambda_j(zq^2).
/// Throws NoExplicitDefinition for E6, whose T2 is only available as closure output.
SeriesExpr build_t2(const AlgebraPreset& preset);

/// T5(z) := dual_transform(T1)(zq^-12) for E6, so dual_transform(T1) = T5(zq^12).
/// Throws std::invalid_argument for other algebras.
SeriesExpr build_t5_e6(const AlgebraPreset& e6);

}  // namespace wq
