#include "knotfam/verify.hpp"

#include <sstream>

#include "knotfam/enclosure.hpp"
#include "knotfam/family.hpp"
#include "knotfam/integer_poly.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/io.hpp"
#include "knotfam/thurston.hpp"

namespace knotfam {

namespace {

using SeifertSource = std::function<SeifertMatrix(unsigned, unsigned, int)>;

// Runs one named check, turning any exception into a failure with the
// message as evidence.
template <typename Fn>
void run_check(VerificationReport& report, const std::string& name, Fn&& body) {
    try {
        auto [pass, evidence] = body();
        report.add(name, pass, evidence);
    } catch (const std::exception& e) {
        report.add(name, false, std::string("exception: ") + e.what());
    }
}

std::string range_note(unsigned g_max, unsigned n_max) {
    std::ostringstream os;
    os << "g in [2," << g_max << "], n in [0," << n_max << "]";
    return os.str();
}

}  // namespace

VerificationReport run_verification(unsigned g_max, unsigned n_max, const mpq_class& tol,
                                    const VerificationHooks& hooks) {
    if (g_max < 2) throw std::invalid_argument("run_verification: g_max must be >= 2");
    if (n_max < 1) throw std::invalid_argument("run_verification: n_max must be >= 1");

    SeifertSource seifert = hooks.seifert_override
                                ? hooks.seifert_override
                                : [](unsigned g, unsigned n, int conv) {
                                      return seifert_family(g, n, conv);
                                  };

    VerificationReport report;

    run_check(report, "seifert-form-equality", [&]() -> std::pair<bool, std::string> {
        for (unsigned g = 2; g <= g_max; ++g) {
            SeifertMatrix chain = seifert_chain(2 * g, -1);
            for (unsigned n = 0; n <= n_max; ++n)
                if (!seifert_forms_equal(seifert(g, n, -1), chain))
                    return {false, "mismatch at g=" + std::to_string(g) +
                                       ", n=" + std::to_string(n)};
        }
        return {true, "all family forms equal seifert_chain(2g), " + range_note(g_max, n_max)};
    });

    run_check(report, "eigenvalue-bounds", [&]() -> std::pair<bool, std::string> {
        if (g_max < 3) return {true, "skipped: needs g >= 3"};
        for (unsigned g = 3; g <= g_max; ++g)
            for (unsigned n = 1; n <= n_max; ++n) {
                FamilyBoundsReport b = verify_family_bounds(g, n, tol);
                if (!b.bounds_ok || !b.isolated_disc_ok)
                    return {false, "violated at g=" + std::to_string(g) +
                                       ", n=" + std::to_string(n) +
                                       ", mu=" + b.mu.to_string(9)};
            }
        return {true, "16n^2-4n <= mu_n <= 16n^2+4n+4 and disc isolation hold"};
    });

    run_check(report, "g2-closed-form", [&]() -> std::pair<bool, std::string> {
        for (unsigned n = 0; n <= n_max; ++n) {
            ThurstonResult r = thurston_classify(build_family_matrix(2, n), tol);
            auto [t, d] = g2_closed_form_mu(n);
            mpq_class disc = mpq_class(t) * t - 4 * mpq_class(d);
            RationalEnclosure root = sqrt_enclosure(RationalEnclosure::point(disc), 64);
            RationalEnclosure closed =
                (root + mpq_class(t)) * RationalEnclosure::point(mpq_class(1, 2));
            if (!r.mu.intersects(closed))
                return {false, "n=" + std::to_string(n) + ": mu=" + r.mu.to_string(9) +
                                   " vs closed form " + closed.to_string(9)};
        }
        return {true, "certified mu matches (T+sqrt(T^2-4D))/2 for n=0.." +
                          std::to_string(n_max)};
    });

    run_check(report, "classification", [&]() -> std::pair<bool, std::string> {
        for (unsigned g = 2; g <= g_max; ++g)
            for (unsigned n = 0; n <= n_max; ++n) {
                ThurstonResult r = thurston_classify(build_family_matrix(g, n), tol);
                if (n == 0 && r.classification != MappingClassType::NonPAElliptic)
                    return {false, "n=0 not elliptic at g=" + std::to_string(g)};
                if (n >= 1) {
                    if (r.classification != MappingClassType::PseudoAnosov)
                        return {false, "n=" + std::to_string(n) +
                                           " not pseudo-Anosov at g=" + std::to_string(g)};
                    RationalEnclosure product = *r.lambda_abs * *r.lambda_inv_abs;
                    if (!product.contains(1))
                        return {false, "lambda*lambda^-1 enclosure misses 1"};
                    RationalEnclosure sum = -(*r.lambda_abs + *r.lambda_inv_abs);
                    if (!(sum.lo <= r.trace.lo && r.trace.hi <= sum.hi))
                        return {false, "lambda+lambda^-1 enclosure misses 2-mu"};
                }
            }
        return {true, "elliptic at n=0, pseudo-Anosov for n>=1, lambda identities hold"};
    });

    run_check(report, "distinctness", [&]() -> std::pair<bool, std::string> {
        if (n_max < 2) return {true, "skipped: needs n_max >= 2"};
        for (unsigned g = 2; g <= std::min(3u, g_max); ++g) {
            DistinctnessResult d = stretch_factors_distinct(g, n_max, tol);
            if (!d.distinct) return {false, "mu enclosures overlap at g=" + std::to_string(g)};
            for (std::size_t i = 0; i + 1 < d.mu_witness.size(); ++i)
                if (!(d.mu_witness[i].hi < d.mu_witness[i + 1].lo))
                    return {false, "mu not monotone at g=" + std::to_string(g)};
        }
        return {true, "mu enclosures pairwise disjoint and increasing for n=1.." +
                          std::to_string(n_max)};
    });

    run_check(report, "signature-maximality", [&]() -> std::pair<bool, std::string> {
        for (unsigned g = 2; g <= g_max; ++g) {
            for (unsigned n = 0; n <= n_max; ++n)
                if (knot_signature(seifert(g, n, -1)) != -2 * static_cast<int>(g))
                    return {false, "sigma != -2g at g=" + std::to_string(g) +
                                       ", n=" + std::to_string(n)};
            if (knot_signature(seifert(g, 0, 1)) != 2 * static_cast<int>(g))
                return {false, "flipped convention sigma != +2g at g=" + std::to_string(g)};
        }
        return {true, "sigma = -2g (|sigma| = 2g maximal) throughout"};
    });

    run_check(report, "monodromy-order", [&]() -> std::pair<bool, std::string> {
        for (unsigned g = 2; g <= g_max; ++g)
            for (unsigned n = 0; n <= n_max; ++n) {
                SeifertMatrix a = seifert(g, n, -1);
                MonodromyData m = homological_monodromy(a, default_order_cap(a.matrix.nrows()));
                if (!m.order || *m.order != 4 * g + 2)
                    return {false, "order != 4g+2 at g=" + std::to_string(g) +
                                       ", n=" + std::to_string(n)};
            }
        return {true, "homological monodromy has exact order 4g+2 and preserves the "
                      "intersection form"};
    });

    run_check(report, "alexander-module", [&]() -> std::pair<bool, std::string> {
        for (unsigned g = 2; g <= g_max; ++g) {
            SeifertMatrix base = seifert(g, 0, -1);
            unsigned cap = default_order_cap(base.matrix.nrows());
            for (unsigned n = 1; n <= n_max; ++n)
                if (!alexander_module_agrees(base, seifert(g, n, -1), cap))
                    return {false, "monodromy differs at g=" + std::to_string(g) +
                                       ", n=" + std::to_string(n)};
            LaurentPolynomial delta = alexander(base);
            MonodromyData m = homological_monodromy(base, cap);
            LaurentPolynomial char_m =
                LaurentPolynomial::from_polynomial(char_poly(m.matrix));
            if (!(char_m.unit_canonical() == delta.unit_canonical()))
                return {false, "char(M) != Delta up to units at g=" + std::to_string(g)};
            if (delta.eval_one() != 1)
                return {false, "Delta(1) != 1 at g=" + std::to_string(g)};
            if (!delta.palindromic())
                return {false, "Delta not palindromic at g=" + std::to_string(g)};
            if (abs(delta.eval(mpq_class(-1))) != 2 * g + 1)
                return {false, "|Delta(-1)| != 2g+1 at g=" + std::to_string(g)};
        }
        return {true, "monodromies agree across n; char(M) = Delta up to units; "
                      "Delta(1)=1, palindromic, |Delta(-1)|=2g+1"};
    });

    run_check(report, "levine-tristram", [&]() -> std::pair<bool, std::string> {
        std::vector<mpq_class> grid;
        for (unsigned k = 1; k <= 64; ++k) {
            mpq_class q(k, 64);
            q.canonicalize();
            grid.push_back(q);
        }
        for (unsigned g = 2; g <= g_max; ++g) {
            SeifertMatrix base = seifert(g, 0, -1);
            std::string reference = lt_csv(levine_tristram(base, grid));
            for (unsigned n = 1; n <= n_max; ++n)
                if (lt_csv(levine_tristram(seifert(g, n, -1), grid)) != reference)
                    return {false, "LT output differs at g=" + std::to_string(g) +
                                       ", n=" + std::to_string(n)};
            auto at_pi = levine_tristram(base, {mpq_class(1)});
            if (at_pi.front().omega_signature != knot_signature(base))
                return {false, "sigma_omega(pi) != signature at g=" + std::to_string(g)};
        }
        return {true, "LT signature functions byte-identical across n; theta=pi matches "
                      "the signature"};
    });

    run_check(report, "fox-milnor", [&]() -> std::pair<bool, std::string> {
        for (unsigned g = 2; g <= g_max; ++g) {
            LaurentPolynomial delta = alexander(seifert(g, 0, -1));
            if (!fox_milnor_witness(delta * delta, delta))
                return {false, "Delta^2 fails the witness test at g=" + std::to_string(g)};
        }
        return {true, "Delta(K_n # -K_m) = Delta^2 admits the Fox-Milnor witness Delta"};
    });

    return report;
}

}  // namespace knotfam
