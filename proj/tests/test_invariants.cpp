#include <doctest.h>

#include <functional>

#include "knotfam/integer_poly.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/laurent.hpp"
#include "knotfam/plumbing.hpp"

using namespace knotfam;

namespace {

// Cofactor-expansion oracle for det(A - t A^T), sizes 2 and 4 only.
// Independent of the fraction-free elimination path.
IntegerPolynomial cofactor_alexander(const IntegerMatrix& a) {
    const std::size_t n = a.nrows();
    std::vector<std::vector<IntegerPolynomial>> m(n, std::vector<IntegerPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = IntegerPolynomial(std::vector<mpz_class>{a(i, j), mpz_class(-a(j, i))});
    std::function<IntegerPolynomial(std::vector<std::size_t>, std::vector<std::size_t>)> det =
        [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> IntegerPolynomial {
        if (rows.size() == 1) return m[rows[0]][cols[0]];
        IntegerPolynomial acc;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::vector<std::size_t> sub_cols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) sub_cols.push_back(cols[j]);
            IntegerPolynomial term = m[rows[0]][cols[k]] * det(sub_rows, sub_cols);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return det(idx, idx);
}

}  // namespace

TEST_CASE("alexander polynomials of torus knots") {
    LaurentPolynomial trefoil = alexander(seifert_chain(2));
    CHECK(trefoil.pairs() ==
          std::vector<std::pair<long, mpz_class>>{{-1, 1}, {0, -1}, {1, 1}});
    CHECK(trefoil.normalized());

    LaurentPolynomial t25 = alexander(seifert_chain(4));
    CHECK(t25.pairs() == std::vector<std::pair<long, mpz_class>>{
                             {-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
    CHECK(t25.eval_one() == 1);

    for (unsigned g = 2; g <= 6; ++g)
        CHECK(alexander(seifert_family(g, 3)).eval_one() == 1);
}

TEST_CASE("alexander determinant matches the cofactor oracle") {
    for (std::size_t k : {2u, 4u}) {
        IntegerMatrix a = seifert_chain(k).matrix;
        CHECK(alexander_raw(a) == cofactor_alexander(a));
    }
}

TEST_CASE("alexander is invariant under transpose and basis reorder") {
    SeifertMatrix chain = seifert_chain(4);
    SeifertMatrix transposed(chain.matrix.transpose(), -1);
    CHECK(alexander(chain) == alexander(transposed));

    // simultaneous row/column permutation (reverse the basis)
    IntegerMatrix p(4, 4);
    for (std::size_t i = 0; i < 4; ++i) p(i, 3 - i) = 1;
    SeifertMatrix permuted(p * chain.matrix * p.transpose(), -1);
    CHECK(alexander(chain) == alexander(permuted));
}

TEST_CASE("knot signatures") {
    CHECK(knot_signature(seifert_chain(4)) == -4);
    CHECK(knot_signature(seifert_chain(2)) == -2);
    CHECK(knot_signature(seifert_chain(2, 1)) == 2);
    for (unsigned g = 2; g <= 6; ++g)
        for (unsigned n = 0; n <= 10; ++n) {
            CHECK(knot_signature(seifert_family(g, n)) == -2 * static_cast<int>(g));
            if (n <= 1)
                CHECK(knot_signature(seifert_family(g, n, 1)) == 2 * static_cast<int>(g));
        }
}

TEST_CASE("levine-tristram samples") {
    SeifertMatrix a = seifert_chain(4);
    auto samples = levine_tristram(
        a, {mpq_class(1, 100), mpq_class(1, 2), mpq_class(1)});
    REQUIRE(samples.size() == 3);
    CHECK(samples[0].omega_signature == 0);  // near omega = 1 the form vanishes
    CHECK_FALSE(samples[0].degenerate);
    CHECK(samples[1].omega_signature == -2);  // omega = i, Delta(i) != 0
    CHECK_FALSE(samples[1].degenerate);
    CHECK(samples[2].omega_signature == -4);  // exact path at omega = -1
    CHECK_FALSE(samples[2].degenerate);

    // trefoil: Delta vanishes at omega = exp(i pi/3), flagged degenerate
    auto tref = levine_tristram(seifert_chain(2), {mpq_class(1, 3)});
    CHECK(tref[0].degenerate);

    CHECK_THROWS_AS(levine_tristram(a, {mpq_class(0)}), std::invalid_argument);
    CHECK_THROWS_AS(levine_tristram(a, {mpq_class(3, 2)}), std::invalid_argument);
}

TEST_CASE("theta = pi agrees with the signature") {
    for (unsigned g = 2; g <= 5; ++g) {
        SeifertMatrix a = seifert_family(g, 2);
        auto s = levine_tristram(a, {mpq_class(1)});
        CHECK(s[0].omega_signature == knot_signature(a));
    }
}

TEST_CASE("homological monodromy") {
    MonodromyData m2 = homological_monodromy(seifert_chain(2), 50);
    CHECK(m2.matrix == IntegerMatrix{{1, -1}, {1, 0}});
    CHECK(m2.order == 6u);
    // M^3 = -I
    IntegerMatrix cube = m2.matrix * m2.matrix * m2.matrix;
    CHECK(cube == (-IntegerMatrix::identity(2)));

    CHECK(homological_monodromy(seifert_chain(4), 50).order == 10u);
    CHECK(homological_monodromy(seifert_chain(6), 50).order == 14u);
    for (unsigned g = 1; g <= 6; ++g)
        CHECK(homological_monodromy(seifert_chain(2 * g), 50).order == 4 * g + 2);

    // order cap exceeded reports nullopt
    CHECK_FALSE(homological_monodromy(seifert_chain(4), 3).order.has_value());
}

TEST_CASE("monodromy preserves the intersection form and detects it exactly") {
    for (unsigned g = 2; g <= 5; ++g) {
        SeifertMatrix a = seifert_family(g, g);
        MonodromyData m = homological_monodromy(a, default_order_cap(a.matrix.nrows()));
        IntegerMatrix j = a.intersection_form();
        CHECK(m.matrix.transpose() * j * m.matrix == j);
        CHECK(det_bareiss(m.matrix) == 1);
    }
}

TEST_CASE("char_poly of the monodromy equals the alexander polynomial up to units") {
    for (unsigned g = 2; g <= 5; ++g) {
        SeifertMatrix a = seifert_family(g, 1);
        MonodromyData m = homological_monodromy(a, default_order_cap(a.matrix.nrows()));
        LaurentPolynomial cm = LaurentPolynomial::from_polynomial(char_poly(m.matrix));
        CHECK(cm.unit_canonical() == alexander(a).unit_canonical());
    }
}

TEST_CASE("alexander module agreement") {
    CHECK(alexander_module_agrees(seifert_family(2, 3), seifert_family(2, 8), 50));
    CHECK(alexander_module_agrees(seifert_chain(2), seifert_chain(2, 1), 50));
    CHECK_THROWS_AS(alexander_module_agrees(seifert_chain(2), seifert_chain(4), 50),
                    std::invalid_argument);
}

TEST_CASE("fox-milnor witness") {
    LaurentPolynomial delta = alexander(seifert_chain(4));
    CHECK(fox_milnor_witness(delta * delta, delta));
    CHECK_FALSE(fox_milnor_witness(alexander(seifert_chain(2)), LaurentPolynomial::one()));
    CHECK(fox_milnor_witness(LaurentPolynomial::one(), LaurentPolynomial::one()));
    // shifting and negating the product must not matter
    CHECK(fox_milnor_witness((-(delta * delta)).shifted(3), delta));
}

TEST_CASE("seifert form equality checks") {
    CHECK(seifert_forms_equal(seifert_family(3, 2), seifert_family(3, 9)));
    SeifertMatrix chain = seifert_chain(4);
    CHECK(seifert_forms_equal(chain, chain));
    SeifertMatrix transposed(chain.matrix.transpose(), -1);
    CHECK_FALSE(seifert_forms_equal(chain, transposed));
    CHECK_THROWS_AS(seifert_forms_equal(chain, seifert_chain(4, 1)), std::invalid_argument);
}

TEST_CASE("laurent normalization and palindromes") {
    for (unsigned g = 1; g <= 6; ++g) {
        LaurentPolynomial delta = alexander(seifert_chain(2 * g));
        CHECK(delta.palindromic());
        CHECK(delta.eval_one() == 1);
        CHECK(abs(delta.eval(mpq_class(-1))) == 2 * g + 1);
    }
    CHECK_THROWS_AS(LaurentPolynomial(0, {mpz_class(1), mpz_class(1)}).normalize_knot(),
                    std::invalid_argument);
}
