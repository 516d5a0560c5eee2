// Acceptance gate: re-derives every headline claim about the knot family
// from scratch and prints one PASS/FAIL line per criterion. Exits nonzero
// if any criterion fails. argv[1] (optional) is the path to the CLI binary,
// used by the end-to-end criterion.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotfam/enclosure.hpp"
#include "knotfam/family.hpp"
#include "knotfam/gershgorin.hpp"
#include "knotfam/integer_poly.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/io.hpp"
#include "knotfam/plumbing.hpp"
#include "knotfam/signature.hpp"
#include "knotfam/thurston.hpp"
#include "knotfam/verify.hpp"

using namespace knotfam;

namespace {

const mpq_class kTol(1, 1000000000);

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string evidence;
    bool pass = false;
    try {
        pass = body(evidence);
    } catch (const std::exception& e) {
        evidence = std::string("exception: ") + e.what();
    }
    if (!pass) ++g_failures;
    std::cout << (pass ? "PASS " : "FAIL ") << name;
    if (!evidence.empty()) std::cout << " — " << evidence;
    std::cout << std::endl;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion bodies -----------------------------------------------------

bool seifert_form_equality(std::string& ev) {
    auto t0 = std::chrono::steady_clock::now();
    for (unsigned g = 2; g <= 6; ++g) {
        IntegerMatrix chain = seifert_chain(2 * g).matrix;
        for (unsigned n = 0; n <= 10; ++n)
            if (!(seifert_family(g, n).matrix == chain)) {
                ev = "mismatch at g=" + std::to_string(g) + ", n=" + std::to_string(n);
                return false;
            }
    }
    double s = elapsed_s(t0);
    ev = "55 forms equal the torus-knot chain form, " + std::to_string(s) + " s";
    return s < 1.0;
}

bool eigenvalue_bounds(std::string& ev) {
    auto t0 = std::chrono::steady_clock::now();
    for (unsigned g = 3; g <= 5; ++g)
        for (unsigned n = 1; n <= 10; ++n) {
            FamilyBoundsReport b = verify_family_bounds(g, n, kTol);
            if (!b.bounds_ok || !b.isolated_disc_ok || b.mu.width() > kTol) {
                ev = "failure at g=" + std::to_string(g) + ", n=" + std::to_string(n);
                return false;
            }
        }
    double s = elapsed_s(t0);
    ev = "30 members within [16n^2-4n, 16n^2+4n+4], widths <= 1e-9, " +
         std::to_string(s) + " s";
    return s < 5.0;
}

bool genus2_closed_form(std::string& ev) {
    for (unsigned n = 0; n <= 10; ++n) {
        auto [t, d] = g2_closed_form_mu(n);
        RationalEnclosure disc = RationalEnclosure::point(mpq_class(t * t - 4 * d));
        RationalEnclosure closed =
            (RationalEnclosure::point(mpq_class(t)) + sqrt_enclosure(disc, 64)) *
            RationalEnclosure::point(mpq_class(1, 2));
        RationalEnclosure mu = thurston_classify(build_family_matrix(2, n), kTol).mu;
        if (!closed.intersects(mu)) {
            ev = "closed form misses the certified enclosure at n=" + std::to_string(n);
            return false;
        }
    }
    ev = "(T + sqrt(T^2-4D))/2 meets every certified enclosure, n = 0..10";
    return true;
}

bool classification_and_identities(std::string& ev) {
    for (unsigned g = 2; g <= 5; ++g) {
        ThurstonResult r0 = thurston_classify(build_family_matrix(g, 0), kTol);
        if (r0.classification != MappingClassType::NonPAElliptic) {
            ev = "n=0 not elliptic at g=" + std::to_string(g);
            return false;
        }
        for (unsigned n = 1; n <= 10; ++n) {
            ThurstonResult r = thurston_classify(build_family_matrix(g, n), kTol);
            if (r.classification != MappingClassType::PseudoAnosov || !r.lambda_abs ||
                !r.lambda_inv_abs) {
                ev = "n>=1 not pseudo-Anosov at g=" + std::to_string(g) +
                     ", n=" + std::to_string(n);
                return false;
            }
            RationalEnclosure product = *r.lambda_abs * *r.lambda_inv_abs;
            RationalEnclosure neg_sum = -(*r.lambda_abs + *r.lambda_inv_abs);
            bool trace_ok = neg_sum.lo <= r.trace.lo && r.trace.hi <= neg_sum.hi;
            if (!product.contains(1) || !trace_ok) {
                ev = "stretch-factor identity fails at g=" + std::to_string(g) +
                     ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    ev = "elliptic at n=0, pseudo-Anosov for n>=1; |l||1/l| contains 1 and "
         "-(|l|+|1/l|) brackets the trace";
    return true;
}

bool distinct_stretch_factors(std::string& ev) {
    for (unsigned g : {2u, 3u}) {
        DistinctnessResult d = stretch_factors_distinct(g, 10, kTol);
        if (!d.distinct) {
            ev = "overlapping enclosures at g=" + std::to_string(g);
            return false;
        }
        for (std::size_t i = 1; i < d.mu_witness.size(); ++i)
            if (!(d.mu_witness[i].lo > d.mu_witness[i - 1].hi)) {
                ev = "mu not monotone at g=" + std::to_string(g);
                return false;
            }
    }
    ev = "mu enclosures pairwise disjoint and increasing for n = 1..10, g = 2, 3";
    return true;
}

bool signature_maximality(std::string& ev) {
    for (unsigned g = 2; g <= 6; ++g)
        for (unsigned n = 0; n <= 10; ++n)
            if (knot_signature(seifert_family(g, n)) != -2 * static_cast<int>(g)) {
                ev = "signature != -2g at g=" + std::to_string(g) +
                     ", n=" + std::to_string(n);
                return false;
            }
    ev = "signature = -2g (|sigma| = 2g, the maximum for genus g) on all 55 members";
    return true;
}

bool periodic_monodromy(std::string& ev) {
    for (unsigned g = 2; g <= 6; ++g)
        for (unsigned n = 0; n <= 10; ++n) {
            SeifertMatrix a = seifert_family(g, n);
            MonodromyData m = homological_monodromy(a, default_order_cap(a.matrix.nrows()));
            if (m.order != 4 * g + 2) {
                ev = "order != 4g+2 at g=" + std::to_string(g) + ", n=" + std::to_string(n);
                return false;
            }
            IntegerMatrix j = a.intersection_form();
            if (!(m.matrix.transpose() * j * m.matrix == j)) {
                ev = "intersection form not preserved at g=" + std::to_string(g);
                return false;
            }
        }
    ev = "monodromy order exactly 4g+2 by brute-force powers; M^T J M = J exactly";
    return true;
}

bool alexander_module(std::string& ev) {
    for (unsigned g = 2; g <= 6; ++g) {
        SeifertMatrix base = seifert_family(g, 0);
        unsigned cap = default_order_cap(base.matrix.nrows());
        MonodromyData m0 = homological_monodromy(base, cap);
        LaurentPolynomial delta = alexander(base);
        for (unsigned n = 1; n <= 10; ++n)
            if (!alexander_module_agrees(base, seifert_family(g, n), cap)) {
                ev = "monodromy differs at g=" + std::to_string(g) +
                     ", n=" + std::to_string(n);
                return false;
            }
        LaurentPolynomial cm = LaurentPolynomial::from_polynomial(char_poly(m0.matrix));
        if (!(cm.unit_canonical() == delta.unit_canonical())) {
            ev = "char poly of monodromy != Alexander at g=" + std::to_string(g);
            return false;
        }
        if (delta.eval_one() != 1 || !delta.palindromic() ||
            abs(delta.eval(mpq_class(-1))) != 2 * g + 1) {
            ev = "Alexander normalization fails at g=" + std::to_string(g);
            return false;
        }
    }
    ev = "monodromy n-independent; char(M) = Alexander up to units; "
         "Delta(1)=1, palindromic, |Delta(-1)|=2g+1";
    return true;
}

bool levine_tristram_agreement(std::string& ev) {
    std::vector<mpq_class> grid;
    for (unsigned k = 1; k <= 64; ++k) grid.emplace_back(k, 64);
    for (unsigned g = 2; g <= 4; ++g) {
        std::string baseline;
        for (unsigned n = 0; n <= 10; ++n) {
            SeifertMatrix a = seifert_family(g, n);
            std::string csv = lt_csv(levine_tristram(a, grid));
            if (n == 0)
                baseline = csv;
            else if (csv != baseline) {
                ev = "64-sample CSV differs at g=" + std::to_string(g) +
                     ", n=" + std::to_string(n);
                return false;
            }
            auto at_pi = levine_tristram(a, {mpq_class(1)});
            if (at_pi[0].omega_signature != knot_signature(a)) {
                ev = "theta=pi sample disagrees with the signature at g=" +
                     std::to_string(g);
                return false;
            }
        }
    }
    ev = "64-sample profiles byte-identical across n at fixed g; theta=pi "
         "matches the ordinary signature";
    return true;
}

bool fox_milnor(std::string& ev) {
    for (unsigned g = 2; g <= 6; ++g) {
        LaurentPolynomial delta = alexander(seifert_family(g, 1));
        if (!fox_milnor_witness(delta * delta, delta)) {
            ev = "witness rejected at g=" + std::to_string(g);
            return false;
        }
    }
    ev = "Delta^2 factors as f(t) f(1/t) with f = Delta, g = 2..6";
    return true;
}

bool oracle_suites(std::string& ev) {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> entry(-5, 5);

    // signature_exact vs floating eigenvalue signs
    int tested = 0;
    while (tested < 200) {
        std::size_t n = 2 + rng() % 7;  // sizes 2..8
        IntegerMatrix m(n, n);
        Eigen::MatrixXd f(static_cast<long>(n), static_cast<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                int v = entry(rng);
                m(i, j) = m(j, i) = v;
                f(static_cast<long>(i), static_cast<long>(j)) = v;
                f(static_cast<long>(j), static_cast<long>(i)) = v;
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(f);
        bool near_singular = false;
        int sig = 0;
        for (long k = 0; k < solver.eigenvalues().size(); ++k) {
            double evl = solver.eigenvalues()[k];
            if (std::abs(evl) < 1e-6) near_singular = true;
            sig += evl > 0 ? 1 : -1;
        }
        if (near_singular) continue;
        if (signature_exact(m) != sig) {
            ev = "signature mismatch vs floating oracle";
            return false;
        }
        ++tested;
    }

    // char_poly at 0 vs the fraction-free determinant
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 6;  // sizes 1..6
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        mpz_class det = det_bareiss(m);
        mpz_class expected = (n % 2 == 0) ? det : mpz_class(-det);
        if (char_poly(m).coeff(0) != expected) {
            ev = "char_poly constant term mismatch vs determinant";
            return false;
        }
    }

    // Alexander determinants vs hand cofactor expansions (frozen)
    if (!(alexander_raw(seifert_chain(2).matrix) == IntegerPolynomial{1, -1, 1})) {
        ev = "rank-2 Alexander determinant differs from the hand expansion";
        return false;
    }
    if (!(alexander_raw(seifert_chain(4).matrix) == IntegerPolynomial{1, -1, 1, -1, 1})) {
        ev = "rank-4 Alexander determinant differs from the hand expansion";
        return false;
    }
    ev = "200 signature comparisons, 200 determinant comparisons, 2 hand "
         "expansions all agree";
    return true;
}

int run_cli(const std::string& cli, const std::string& args, std::string* output) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (output) *output = out;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

bool end_to_end(const std::string& cli, std::string& ev) {
    if (cli.empty()) {
        ev = "CLI binary path not supplied";
        return false;
    }
    auto t0 = std::chrono::steady_clock::now();
    int rc = run_cli(cli, "verify --g-max 4 --n-max 5", nullptr);
    double s = elapsed_s(t0);
    if (rc != 0) {
        ev = "verify exited with code " + std::to_string(rc);
        return false;
    }
    if (s >= 30.0) {
        ev = "verify took " + std::to_string(s) + " s (budget 30 s)";
        return false;
    }

    // emitted family record round-trips through the serializers
    std::string family_out;
    if (run_cli(cli, "family --genus 3 --n 2", &family_out) != 0) {
        ev = "family subcommand failed";
        return false;
    }
    ordered_json j = ordered_json::parse(family_out);
    if (family_record_to_json(family_record_from_json(j)) != j) {
        ev = "family record does not round-trip";
        return false;
    }

    // exit-code contract: bad input is 2, not 1
    if (run_cli(cli, "family --genus 1 --n 1", nullptr) != 2) {
        ev = "genus below 2 did not exit 2";
        return false;
    }
    {
        std::ofstream bad("/tmp/knotfam_acceptance_bad.json");
        bad << "{\"rows\": [[1, 2], [3]]}";
    }
    int rc_bad = run_cli(cli, "thurston /tmp/knotfam_acceptance_bad.json --assume-filling",
                         nullptr);
    std::remove("/tmp/knotfam_acceptance_bad.json");
    if (rc_bad != 2) {
        ev = "malformed matrix file did not exit 2";
        return false;
    }
    ev = "verify(4,5) exit 0 in " + std::to_string(s) +
         " s; artifacts round-trip; bad inputs exit 2";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    criterion("seifert-form-equality", seifert_form_equality);
    criterion("eigenvalue-bounds", eigenvalue_bounds);
    criterion("genus2-closed-form", genus2_closed_form);
    criterion("classification-and-identities", classification_and_identities);
    criterion("distinct-stretch-factors", distinct_stretch_factors);
    criterion("signature-maximality", signature_maximality);
    criterion("periodic-monodromy", periodic_monodromy);
    criterion("alexander-module", alexander_module);
    criterion("levine-tristram-agreement", levine_tristram_agreement);
    criterion("fox-milnor", fox_milnor);
    criterion("oracle-suites", oracle_suites);
    criterion("end-to-end",
              [&cli](std::string& ev) { return end_to_end(cli, ev); });

    if (g_failures == 0) {
        std::cout << "ALL CRITERIA PASS" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
}
