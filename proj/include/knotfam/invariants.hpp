#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "knotfam/integer_matrix.hpp"
#include "knotfam/laurent.hpp"
#include "knotfam/plumbing.hpp"

namespace knotfam {

/// One Levine-Tristram sample at omega = exp(i pi q), q = theta_over_pi.
struct LTSample {
    mpq_class theta_over_pi;  // in (0, 1]
    int omega_signature = 0;
    bool degenerate = false;
};

/// Homological monodromy M = A^{-T} A and its multiplicative order
/// (nullopt when the order exceeds the cap).
struct MonodromyData {
    IntegerMatrix matrix;
    std::optional<unsigned> order;
};

/// Alexander polynomial det(A - t A^T), computed by fraction-free
/// elimination over the integer-polynomial ring and normalized to the
/// symmetric representative with value 1 at t = 1 when one exists
/// (otherwise returned unnormalized, e.g. for link forms of odd rank).
LaurentPolynomial alexander(const SeifertMatrix& a);

/// signature of the symmetrized form A + A^T.
int knot_signature(const SeifertMatrix& a);

/// Signature of (1 - omega) A + (1 - conj(omega)) A^T at omega on the unit
/// circle, for each angle theta = q pi, q in (0, 1]. q = 1 is computed
/// exactly; other samples use floating Hermitian eigenvalues with a
/// relative degeneracy threshold of 1e-8.
std::vector<LTSample> levine_tristram(const SeifertMatrix& a,
                                      const std::vector<mpq_class>& theta_over_pi);

unsigned default_order_cap(std::size_t size);

/// M = A^{-T} A, exact; verifies det M = 1 and that M preserves the
/// intersection form A - A^T. Order found by brute-force powers up to
/// order_cap.
MonodromyData homological_monodromy(const SeifertMatrix& a, unsigned order_cap);

/// True iff the homological monodromy matrices of A and B coincide (in the
/// fixed chain basis). Rejects size mismatch.
bool alexander_module_agrees(const SeifertMatrix& a, const SeifertMatrix& b,
                             unsigned order_cap);

/// True iff p equals f(t) f(t^-1) up to multiplication by units +-t^k.
bool fox_milnor_witness(const LaurentPolynomial& p, const LaurentPolynomial& f);

/// Literal entrywise equality in the fixed chain basis. Rejects
/// mismatched conventions (the comparison would be ambiguous).
bool seifert_forms_equal(const SeifertMatrix& a, const SeifertMatrix& b);

/// Exact determinant of the polynomial matrix A - t A^T (degree-indexed
/// coefficients). Exposed for cross-checks.
IntegerPolynomial alexander_raw(const IntegerMatrix& a);

}  // namespace knotfam
