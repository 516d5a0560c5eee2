#pragma once

#include <optional>
#include <vector>

#include "knotfam/gershgorin.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/plumbing.hpp"
#include "knotfam/thurston.hpp"

namespace knotfam {

/// Gershgorin data for N N^T: the discs, the row of the largest diagonal
/// entry, and whether that disc is isolated from all others.
struct GershgorinReport {
    std::vector<GershgorinDisc> discs;
    std::size_t largest_row = 0;
    bool isolated = false;
};

/// The full invariant bundle of one family member (g, n).
struct FamilyRecord {
    unsigned g = 0;
    unsigned n = 0;
    int convention = -1;
    IntegerMatrix intersection_matrix;  // N(g, n)
    IntegerMatrix seifert;              // 2g x 2g
    RationalEnclosure mu;
    MappingClassType classification = MappingClassType::NonPAElliptic;
    std::optional<RationalEnclosure> lambda_abs;
    int signature = 0;
    LaurentPolynomial alexander;
    std::optional<unsigned> monodromy_order;
    GershgorinReport gershgorin;
    std::optional<FamilyBoundsReport> bounds;  // absent ("n/a") for n = 0
    bool seifert_equals_chain = false;
};

/// Compose plumbing, Thurston classification and the Seifert-form
/// invariants for one (g, n). Rejects g < 2.
FamilyRecord build_family_record(unsigned g, unsigned n, const mpq_class& tol,
                                 int convention = -1);

/// Bounds report without the g >= 3 guard of verify_family_bounds; the
/// same inequality holds for the g = 2 Gram matrix.
FamilyBoundsReport family_bounds_report(unsigned g, unsigned n, const mpq_class& tol);

}  // namespace knotfam
