#pragma once

#include <vector>

#include "wq/algebras.hpp"
#include "wq/outcome.hpp"

namespace wq {

/// M = M^T, Mtilde = Mtilde^T, every entry of M, D, Mtilde odd under
/// t -> 1/t, det M != 0, D diagonal with t^k - t^-k entries.
VerificationOutcome verify_matrix_properties(const AlgebraPreset& preset);

/// D Mtilde^-1 D = M.
VerificationOutcome verify_dual_identity(const AlgebraPreset& preset);

/// Lambda monomials pairwise distinct; {Lambda_i, Lambda_i} = M11 exactly.
/// The diagonal property is required for D_n and only recorded for E6, G2.
VerificationOutcome verify_lambda_diagonals(const AlgebraPreset& preset);

/// symbol(B, A)(t) = -symbol(A, B)(1/t) over all Lambda pairs.
VerificationOutcome verify_symbol_antisymmetry(const AlgebraPreset& preset);

/// dual_transform(T1) = T1(zq^12) (G2) or T5(zq^12) with T5 != T1 (E6).
/// For D_n the shift relating dual_transform(T1) to T1 is only recorded.
VerificationOutcome verify_duality(const AlgebraPreset& preset);

/// Every check above plus verify_cartan and verify_closure.
std::vector<VerificationOutcome> verify_all(const AlgebraPreset& preset);

}  // namespace wq
