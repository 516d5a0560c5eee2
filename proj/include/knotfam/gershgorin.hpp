#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "knotfam/integer_matrix.hpp"

namespace knotfam {

/// Disc centered at a diagonal entry with radius the off-diagonal absolute
/// row sum. For symmetric integer matrices the disc is the real interval
/// [center - radius, center + radius].
struct GershgorinDisc {
    mpz_class center;
    mpz_class radius;
    std::size_t index = 0;

    mpz_class lower() const { return center - radius; }
    mpz_class upper() const { return center + radius; }
};

/// One disc per row, exact centers and radii. Rejects non-square input.
std::vector<GershgorinDisc> gershgorin_discs(const IntegerMatrix& a);

/// max_i (center_i + radius_i): every eigenvalue is <= this.
mpz_class gershgorin_upper_bound(const std::vector<GershgorinDisc>& discs);

/// True iff disc i is disjoint, as a real interval, from every other disc.
bool disc_is_isolated(const std::vector<GershgorinDisc>& discs, std::size_t i);

}  // namespace knotfam
