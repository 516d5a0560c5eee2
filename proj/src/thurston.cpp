#include "knotfam/thurston.hpp"

#include <algorithm>

#include "knotfam/gershgorin.hpp"
#include "knotfam/integer_poly.hpp"
#include "knotfam/plumbing.hpp"
#include "knotfam/root_isolation.hpp"

namespace knotfam {

namespace {

constexpr int kMaxRetries = 3;
const long kRetryShrink = 10000;

// Enough sqrt bits that the outward rounding stays well inside tol.
unsigned sqrt_bits_for(const mpq_class& tol) {
    mpq_class inv = 2 / tol;
    mpz_class ceil_inv = inv.get_num() / inv.get_den() + 1;
    return static_cast<unsigned>(mpz_sizeinbase(ceil_inv.get_mpz_t(), 2)) + 4;
}

RationalEnclosure scale(const RationalEnclosure& e, const mpq_class& s) {
    return s >= 0 ? RationalEnclosure{e.lo * s, e.hi * s}
                  : RationalEnclosure{e.hi * s, e.lo * s};
}

}  // namespace

std::string to_string(MappingClassType t) {
    switch (t) {
        case MappingClassType::PseudoAnosov: return "pseudo-Anosov";
        case MappingClassType::NonPAElliptic: return "non-pA-elliptic";
        case MappingClassType::NonPAParabolic: return "non-pA-parabolic";
    }
    return "unknown";
}

MappingClassType mapping_class_from_string(const std::string& s) {
    if (s == "pseudo-Anosov") return MappingClassType::PseudoAnosov;
    if (s == "non-pA-elliptic") return MappingClassType::NonPAElliptic;
    if (s == "non-pA-parabolic") return MappingClassType::NonPAParabolic;
    throw std::invalid_argument("unknown mapping class type: " + s);
}

mpq_class default_tolerance() {
    return mpq_class(1, 1000000000);
}

ThurstonResult thurston_classify(const IntegerMatrix& n_matrix, const mpq_class& tol,
                                 bool filling_assumed) {
    for (std::size_t i = 0; i < n_matrix.nrows(); ++i)
        for (std::size_t j = 0; j < n_matrix.ncols(); ++j)
            if (n_matrix(i, j) < 0)
                throw std::invalid_argument("thurston_classify: N must be nonnegative");

    IntegerMatrix g = gram(n_matrix);
    IntegerPolynomial p = char_poly(g);
    mpq_class search_hi = mpq_class(gershgorin_upper_bound(gershgorin_discs(g))) + 1;

    ThurstonResult result;
    result.filling_assumed = filling_assumed;

    mpq_class cur_tol = tol;
    const mpq_class four(4);
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        RationalEnclosure mu = largest_root_enclosure(p, search_hi, cur_tol);
        if (mu.strictly_above(four)) {
            result.mu = mu;
            result.classification = MappingClassType::PseudoAnosov;
            break;
        }
        if (mu.strictly_below(four)) {
            result.mu = mu;
            result.classification = MappingClassType::NonPAElliptic;
            break;
        }
        // Enclosure straddles 4. mu = 4 is only accepted on an exact
        // certificate: 4 is a root and it is the only root in the bracket.
        IntegerPolynomial sq = square_free_part(p);
        if (sq.eval_int(4) == 0 && count_real_roots(p, mu.lo, mu.hi) == 1 &&
            mu.contains(four)) {
            result.mu = RationalEnclosure::point(four);
            result.classification = MappingClassType::NonPAParabolic;
            break;
        }
        if (attempt == kMaxRetries)
            throw UnresolvedClassificationError(
                "thurston_classify: unresolved at tolerance " + cur_tol.get_str());
        cur_tol /= kRetryShrink;
    }

    result.trace = mpq_class(2) - result.mu;
    if (result.classification == MappingClassType::PseudoAnosov) {
        const RationalEnclosure& mu = result.mu;
        // discriminant mu^2 - 4 mu > 0; clamp the outward-rounded lower end
        // at 0 before taking the square root.
        RationalEnclosure disc = mu * mu - scale(mu, 4);
        if (disc.lo < 0) disc.lo = 0;
        RationalEnclosure root = sqrt_enclosure(disc, sqrt_bits_for(cur_tol));
        RationalEnclosure half = RationalEnclosure::point(mpq_class(1, 2));
        // lambda = (2 - mu - sqrt(mu^2 - 4 mu))/2 (the sign with |lambda| >= 1,
        // negative for mu > 4); |lambda| and |lambda^{-1}| are its negatives.
        RationalEnclosure lambda = (result.trace - root) * half;
        RationalEnclosure lambda_inv = (result.trace + root) * half;
        result.lambda_abs = -lambda;
        result.lambda_inv_abs = -lambda_inv;
    }
    return result;
}

FamilyBoundsReport verify_family_bounds(unsigned g, unsigned n, const mpq_class& tol) {
    if (g < 3) throw std::invalid_argument("verify_family_bounds: requires g >= 3");
    if (n < 1) throw std::invalid_argument("verify_family_bounds: requires n >= 1");

    FamilyBoundsReport report;
    report.g = g;
    report.n = n;
    mpz_class nn = mpz_class(n);
    report.lower_bound = 16 * nn * nn - 4 * nn;
    report.upper_bound = 16 * nn * nn + 4 * nn + 4;

    IntegerMatrix nm = build_family_matrix(g, n);
    IntegerMatrix gm = gram(nm);
    auto discs = gershgorin_discs(gm);
    std::size_t largest = 0;
    for (std::size_t i = 1; i < discs.size(); ++i)
        if (discs[i].center > discs[largest].center) largest = i;
    report.isolated_disc_ok = disc_is_isolated(discs, largest);

    mpq_class search_hi = mpq_class(gershgorin_upper_bound(discs)) + 1;
    report.mu = largest_root_enclosure(char_poly(gm), search_hi, tol);
    report.bounds_ok =
        mpq_class(report.lower_bound) <= report.mu.lo && report.mu.hi <= mpq_class(report.upper_bound);
    return report;
}

std::pair<mpz_class, mpz_class> g2_closed_form_mu(unsigned n) {
    mpz_class nn = mpz_class(n);
    mpz_class t = 3 + 16 * nn * nn;
    mpz_class d = (4 * nn - 1) * (4 * nn - 1);
    return {t, d};
}

DistinctnessResult stretch_factors_distinct(unsigned g, unsigned n_max, const mpq_class& tol) {
    if (g < 2) throw std::invalid_argument("stretch_factors_distinct: g must be >= 2");
    if (n_max < 2) throw std::invalid_argument("stretch_factors_distinct: n_max must be >= 2");

    mpq_class cur_tol = tol;
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        DistinctnessResult result;
        for (unsigned n = 1; n <= n_max; ++n) {
            IntegerMatrix gm = gram(build_family_matrix(g, n));
            mpq_class search_hi = mpq_class(gershgorin_upper_bound(gershgorin_discs(gm))) + 1;
            result.mu_witness.push_back(largest_root_enclosure(char_poly(gm), search_hi, cur_tol));
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < result.mu_witness.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < result.mu_witness.size(); ++j)
                if (result.mu_witness[i].intersects(result.mu_witness[j])) {
                    disjoint = false;
                    break;
                }
        if (disjoint) {
            result.distinct = true;
            return result;
        }
        cur_tol /= kRetryShrink;
    }
    throw UnresolvedClassificationError(
        "stretch_factors_distinct: enclosures not separable within retry cap");
}

}  // namespace knotfam
