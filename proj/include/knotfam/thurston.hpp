#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotfam/enclosure.hpp"
#include "knotfam/integer_matrix.hpp"

namespace knotfam {

enum class MappingClassType { PseudoAnosov, NonPAElliptic, NonPAParabolic };

std::string to_string(MappingClassType t);
MappingClassType mapping_class_from_string(const std::string& s);

/// Classification could not be separated from the boundary case within the
/// retry budget and the exact test was inconclusive.
struct UnresolvedClassificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Result of Thurston's two-multi-twist construction for an intersection
/// matrix N: mu = largest eigenvalue of N N^T (certified), the hyperbolicity
/// classification of the 2x2 representing matrix, and, in the
/// pseudo-Anosov case, enclosures of |lambda| and |lambda^{-1}|.
struct ThurstonResult {
    RationalEnclosure mu;
    MappingClassType classification = MappingClassType::NonPAElliptic;
    std::optional<RationalEnclosure> lambda_abs;
    std::optional<RationalEnclosure> lambda_inv_abs;
    RationalEnclosure trace;  // 2 - mu
    bool filling_assumed = false;
};

/// Verdicts for one family member (g >= 3, n >= 1): the certified mu
/// against 16n^2 - 4n <= mu <= 16n^2 + 4n + 4, and isolation of the
/// Gershgorin disc at the largest diagonal entry.
struct FamilyBoundsReport {
    unsigned g = 0, n = 0;
    RationalEnclosure mu;
    mpz_class lower_bound;
    mpz_class upper_bound;
    bool isolated_disc_ok = false;
    bool bounds_ok = false;
};

struct DistinctnessResult {
    bool distinct = false;
    std::vector<RationalEnclosure> mu_witness;  // ordered by n
};

/// Classify the mapping class of the two-multi-twist composition with
/// intersection matrix N. The filling/connectedness hypothesis is asserted
/// by the caller and recorded in the output, never checked.
///
/// mu > 4 and mu < 4 are certified by the enclosure; mu = 4 only by an
/// exact square-free root test. If the enclosure straddles 4 and the exact
/// test does not fire, the tolerance is divided by 10^4 for up to 3
/// retries before UnresolvedClassificationError.
ThurstonResult thurston_classify(const IntegerMatrix& n_matrix, const mpq_class& tol,
                                 bool filling_assumed = true);

FamilyBoundsReport verify_family_bounds(unsigned g, unsigned n, const mpq_class& tol);

/// For g = 2: mu_n = (T + sqrt(T^2 - 4 D)) / 2 with exact integers
/// T = 3 + 16 n^2 (trace of N N^T) and D = (4n - 1)^2 (its determinant).
std::pair<mpz_class, mpz_class> g2_closed_form_mu(unsigned n);

/// Certify that the mu-enclosures for n = 1..n_max are pairwise disjoint
/// (|lambda| is strictly monotone in mu above 4, so the stretch factors
/// are then pairwise distinct as well).
DistinctnessResult stretch_factors_distinct(unsigned g, unsigned n_max, const mpq_class& tol);

/// Default certification tolerance, 10^-9.
mpq_class default_tolerance();

}  // namespace knotfam
