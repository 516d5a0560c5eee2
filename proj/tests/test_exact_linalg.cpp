#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "knotfam/enclosure.hpp"
#include "knotfam/gershgorin.hpp"
#include "knotfam/integer_matrix.hpp"
#include "knotfam/integer_poly.hpp"
#include "knotfam/root_isolation.hpp"
#include "knotfam/signature.hpp"

using namespace knotfam;

TEST_CASE("gram products") {
    IntegerMatrix n{{1, 0, 0}, {1, 1, 4}, {0, 1, 1}};
    CHECK(gram(n) == IntegerMatrix{{1, 1, 0}, {1, 18, 5}, {0, 5, 2}});

    CHECK(gram(IntegerMatrix::identity(5)) == IntegerMatrix::identity(5));

    IntegerMatrix n2{{1, 4}, {1, 1}};
    CHECK(gram(n2) == IntegerMatrix{{17, 5}, {5, 2}});
}

TEST_CASE("gram is always symmetric") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntegerMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
        CHECK(gram(m).is_symmetric());
    }
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(IntegerMatrix{{17, 5}, {5, 2}}) == IntegerPolynomial{9, -19, 1});
    CHECK(char_poly(IntegerMatrix::identity(2)) == IntegerPolynomial{1, -2, 1});
    CHECK(char_poly(IntegerMatrix{{0}}) == IntegerPolynomial{0, 1});
    CHECK_THROWS_AS(char_poly(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly at zero matches an independent determinant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 5;
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        mpz_class det = det_bareiss(m);
        mpz_class p0 = char_poly(m).coeff(0);
        mpz_class expected = (n % 2 == 0) ? det : mpz_class(-det);
        CHECK(p0 == expected);
    }
}

TEST_CASE("gershgorin discs") {
    IntegerMatrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    auto discs = gershgorin_discs(d);
    REQUIRE(discs.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(discs[i].center == static_cast<long>(i + 1));
        CHECK(discs[i].radius == 0);
    }

    auto discs2 = gershgorin_discs(IntegerMatrix{{1, 1, 0}, {1, 18, 5}, {0, 5, 2}});
    CHECK(discs2[0].center == 1);
    CHECK(discs2[0].radius == 1);
    CHECK(discs2[1].center == 18);
    CHECK(discs2[1].radius == 6);
    CHECK(discs2[2].center == 2);
    CHECK(discs2[2].radius == 5);
    CHECK(gershgorin_upper_bound(discs2) == 24);

    auto discs3 = gershgorin_discs(IntegerMatrix{{2, 1}, {1, 2}});
    CHECK(discs3[0].center == discs3[1].center);
    CHECK(discs3[0].radius == discs3[1].radius);
}

TEST_CASE("disc isolation") {
    auto discs = gershgorin_discs(IntegerMatrix{{1, 1, 0}, {1, 18, 5}, {0, 5, 2}});
    CHECK(disc_is_isolated(discs, 1));
    CHECK_FALSE(disc_is_isolated(discs, 0));  // [0,2] meets [-3,7]

    auto n0 = gershgorin_discs(IntegerMatrix{{1, 1}, {1, 2}});
    CHECK_FALSE(disc_is_isolated(n0, 0));
    CHECK_FALSE(disc_is_isolated(n0, 1));

    auto diag = gershgorin_discs(IntegerMatrix{{1, 0}, {0, 5}});
    CHECK(disc_is_isolated(diag, 0));

    CHECK_THROWS_AS(disc_is_isolated(diag, 2), std::out_of_range);
}

namespace {

const mpq_class kTol(1, 1000000000);

// Quadratic-formula oracle for x^2 - t x + d.
double quadratic_largest_root(double t, double d) {
    return (t + std::sqrt(t * t - 4 * d)) / 2;
}

}  // namespace

TEST_CASE("largest root enclosures against the quadratic oracle") {
    auto e = largest_root_enclosure(IntegerPolynomial{9, -19, 1}, 24, kTol);
    CHECK(e.width() <= kTol);
    double oracle = quadratic_largest_root(19, 9);  // (19+sqrt(325))/2
    CHECK(e.lo.get_d() <= oracle);
    CHECK(e.hi.get_d() >= oracle - 1e-12);

    auto e2 = largest_root_enclosure(IntegerPolynomial{1, -2, 1}, 10, kTol);  // (x-1)^2
    CHECK(e2.contains(1));

    auto e3 = largest_root_enclosure(IntegerPolynomial{1, -3, 1}, 10, kTol);
    double mu0 = quadratic_largest_root(3, 1);  // (3+sqrt(5))/2
    CHECK(e3.lo.get_d() <= mu0);
    CHECK(e3.hi.get_d() >= mu0 - 1e-12);
    CHECK(e3.width() <= kTol);
}

TEST_CASE("root enclosure failure modes") {
    CHECK_THROWS_AS(largest_root_enclosure(IntegerPolynomial{1, 0, 1}, 100, kTol),
                    NoRealRootError);
    // both roots of x^2-19x+9 lie above 0.4
    CHECK_THROWS_AS(largest_root_enclosure(IntegerPolynomial{9, -19, 1}, mpq_class(2, 5), kTol),
                    NoRealRootError);
    CHECK_THROWS_AS(largest_root_enclosure(IntegerPolynomial{9, -19, 1}, 24, 0),
                    std::invalid_argument);
}

TEST_CASE("square-free part changes sign across the returned bracket") {
    IntegerPolynomial p{1, -2, 1};  // (x-1)^2, double root
    auto e = largest_root_enclosure(p, 10, kTol);
    IntegerPolynomial sq = square_free_part(p);
    CHECK(sq == IntegerPolynomial{-1, 1});
    mpq_class at_lo = sq.eval(e.lo), at_hi = sq.eval(e.hi);
    bool sign_change = (sgn(at_lo) != sgn(at_hi)) || at_lo == 0 || at_hi == 0;
    CHECK(sign_change);
}

TEST_CASE("random symmetric matrices: largest eigenvalue inside the Gershgorin union") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng() % 4;
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
        auto discs = gershgorin_discs(m);
        mpq_class hi_bound = mpq_class(gershgorin_upper_bound(discs)) + 1;
        mpz_class lo_bound = discs[0].lower();
        for (const auto& d : discs) lo_bound = std::min(lo_bound, d.lower());
        auto e = largest_root_enclosure(char_poly(m), hi_bound, mpq_class(1, 1000));
        CHECK(e.hi >= mpq_class(lo_bound));
        CHECK(e.lo <= hi_bound);
    }
}

TEST_CASE("exact signatures") {
    CHECK(signature_exact(IntegerMatrix{{-2, 1}, {1, -2}}) == -2);
    CHECK(signature_exact(IntegerMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(signature_exact(IntegerMatrix::identity(6)) == 6);
    CHECK_THROWS_AS(signature_exact(IntegerMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
    // hyperbolic block nested inside a larger form
    CHECK(signature_exact(IntegerMatrix{{0, 3, 0}, {3, 0, 0}, {0, 0, -5}}) == -1);
    // zero matrix
    CHECK(signature_exact(IntegerMatrix(3, 3)) == 0);
}

TEST_CASE("signature agrees with floating eigenvalue signs") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> entry(-5, 5);
    int tested = 0;
    while (tested < 60) {
        std::size_t n = 2 + rng() % 7;
        IntegerMatrix m(n, n);
        Eigen::MatrixXd f(n, n);
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
            double ev = solver.eigenvalues()[k];
            if (std::abs(ev) < 1e-6) near_singular = true;
            sig += ev > 0 ? 1 : -1;
        }
        if (near_singular) continue;
        CHECK(signature_exact(m) == sig);
        ++tested;
    }
}

TEST_CASE("enclosure arithmetic and rational sqrt") {
    RationalEnclosure a(1, 2), b(3, 4);
    CHECK((a + b).lo == 4);
    CHECK((a + b).hi == 6);
    CHECK((a * b).lo == 3);
    CHECK((a * b).hi == 8);
    CHECK((-a).lo == -2);

    auto s = sqrt_enclosure(RationalEnclosure::point(2), 40);
    CHECK(s.lo * s.lo <= 2);
    CHECK(s.hi * s.hi >= 2);
    CHECK(s.width() < mpq_class(1, 1000000000));

    CHECK(decimal_string(mpq_class(1, 4), 3) == "0.250");
    CHECK(decimal_string(mpq_class(-7, 2), 2) == "-3.50");
}

TEST_CASE("degenerate matrix shapes are rejected") {
    CHECK_THROWS_AS(IntegerMatrix(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(IntegerMatrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS((IntegerMatrix{{1, 2}, {3}}), std::invalid_argument);
}
