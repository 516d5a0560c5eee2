#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "knotfam/enclosure.hpp"
#include "knotfam/integer_poly.hpp"

namespace knotfam {

/// No real root at or below the requested search bound. Distinct from any
/// tolerance-related failure.
struct NoRealRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Certified enclosure of the largest real root of p that is <= search_hi.
///
/// Works on the square-free part of p, so multiple roots pose no problem.
/// Localization is by Sturm-sequence sign-variation counts evaluated in
/// exact rational arithmetic; bisection narrows the bracket until
/// hi - lo <= tol. Endpoints are reduced rationals.
RationalEnclosure largest_root_enclosure(const IntegerPolynomial& p,
                                         const mpq_class& search_hi,
                                         const mpq_class& tol);

/// Number of distinct real roots of p in the half-open interval (a, b],
/// by Sturm's theorem.
int count_real_roots(const IntegerPolynomial& p, const mpq_class& a, const mpq_class& b);

}  // namespace knotfam
