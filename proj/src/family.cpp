#include "knotfam/family.hpp"

#include <stdexcept>

#include "knotfam/integer_poly.hpp"
#include "knotfam/root_isolation.hpp"

namespace knotfam {

FamilyBoundsReport family_bounds_report(unsigned g, unsigned n, const mpq_class& tol) {
    if (g < 2) throw std::invalid_argument("family_bounds_report: g must be >= 2");
    if (n < 1) throw std::invalid_argument("family_bounds_report: n must be >= 1");
    FamilyBoundsReport report;
    report.g = g;
    report.n = n;
    mpz_class nn = mpz_class(n);
    report.lower_bound = 16 * nn * nn - 4 * nn;
    report.upper_bound = 16 * nn * nn + 4 * nn + 4;
    IntegerMatrix gm = gram(build_family_matrix(g, n));
    auto discs = gershgorin_discs(gm);
    std::size_t largest = 0;
    for (std::size_t i = 1; i < discs.size(); ++i)
        if (discs[i].center > discs[largest].center) largest = i;
    report.isolated_disc_ok = disc_is_isolated(discs, largest);
    mpq_class search_hi = mpq_class(gershgorin_upper_bound(discs)) + 1;
    report.mu = largest_root_enclosure(char_poly(gm), search_hi, tol);
    report.bounds_ok = mpq_class(report.lower_bound) <= report.mu.lo &&
                       report.mu.hi <= mpq_class(report.upper_bound);
    return report;
}

FamilyRecord build_family_record(unsigned g, unsigned n, const mpq_class& tol,
                                 int convention) {
    if (g < 2) throw std::invalid_argument("build_family_record: g must be >= 2");

    IntegerMatrix nm = build_family_matrix(g, n);
    SeifertMatrix seifert = seifert_family(g, n, convention);
    ThurstonResult thurston = thurston_classify(nm, tol, /*filling_assumed=*/true);

    FamilyRecord rec{
        g,
        n,
        convention,
        nm,
        seifert.matrix,
        thurston.mu,
        thurston.classification,
        thurston.lambda_abs,
        knot_signature(seifert),
        alexander(seifert),
        homological_monodromy(seifert, default_order_cap(seifert.matrix.nrows())).order,
        GershgorinReport{},
        std::nullopt,
        seifert_forms_equal(seifert, seifert_chain(2 * g, convention)),
    };

    IntegerMatrix gm = gram(nm);
    rec.gershgorin.discs = gershgorin_discs(gm);
    rec.gershgorin.largest_row = 0;
    for (std::size_t i = 1; i < rec.gershgorin.discs.size(); ++i)
        if (rec.gershgorin.discs[i].center > rec.gershgorin.discs[rec.gershgorin.largest_row].center)
            rec.gershgorin.largest_row = i;
    rec.gershgorin.isolated = disc_is_isolated(rec.gershgorin.discs, rec.gershgorin.largest_row);

    if (n >= 1) rec.bounds = family_bounds_report(g, n, tol);
    return rec;
}

}  // namespace knotfam
