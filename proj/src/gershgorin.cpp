#include "knotfam/gershgorin.hpp"

#include <stdexcept>

namespace knotfam {

std::vector<GershgorinDisc> gershgorin_discs(const IntegerMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("gershgorin_discs: non-square matrix");
    std::vector<GershgorinDisc> discs;
    discs.reserve(a.nrows());
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        GershgorinDisc d;
        d.index = i;
        d.center = a(i, i);
        d.radius = 0;
        for (std::size_t j = 0; j < a.ncols(); ++j)
            if (j != i) d.radius += abs(a(i, j));
        discs.push_back(std::move(d));
    }
    return discs;
}

mpz_class gershgorin_upper_bound(const std::vector<GershgorinDisc>& discs) {
    if (discs.empty()) throw std::invalid_argument("gershgorin_upper_bound: no discs");
    mpz_class best = discs[0].upper();
    for (const auto& d : discs)
        if (d.upper() > best) best = d.upper();
    return best;
}

bool disc_is_isolated(const std::vector<GershgorinDisc>& discs, std::size_t i) {
    if (i >= discs.size()) throw std::out_of_range("disc_is_isolated: index out of range");
    for (std::size_t j = 0; j < discs.size(); ++j) {
        if (j == i) continue;
        // Real intervals [lower, upper]; closed-interval overlap test.
        if (discs[i].lower() <= discs[j].upper() && discs[j].lower() <= discs[i].upper())
            return false;
    }
    return true;
}

}  // namespace knotfam
