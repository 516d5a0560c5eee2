#pragma once

#include "knotfam/integer_matrix.hpp"

namespace knotfam {

/// Signature (#positive - #negative eigenvalues) of a symmetric integer
/// matrix, computed exactly by congruence diagonalization over the
/// rationals with pivot-sign counting. Zero-pivot rows are handled by
/// symmetric permutation; a remaining all-zero-diagonal block is reduced
/// by the 2x2 hyperbolic-block rule (each such block contributes 0).
/// Rejects non-symmetric input.
int signature_exact(const IntegerMatrix& s);

}  // namespace knotfam
