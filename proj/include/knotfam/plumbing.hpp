#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "knotfam/integer_matrix.hpp"

namespace knotfam {

/// Plumbing pattern of positive Hopf bands: the bands are the nodes, edges
/// mark which bands are plumbed together, and plumbing_order fixes which
/// band of an edge carries the off-diagonal +1.
struct PlumbingTree {
    std::size_t node_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> plumbing_order;  // permutation of 0..node_count-1

    /// Throws std::invalid_argument unless the edges form a tree and the
    /// order is a permutation.
    void validate() const;
};

/// Homology class in the fixed chain basis, as an integer coordinate vector.
using HomologyClass = std::vector<mpz_class>;

/// Seifert matrix of a plumbed fibre surface. |det| = 1 is checked at
/// construction. convention = -1 means a positive Hopf band has
/// self-linking -1 (the default); +1 negates everything.
struct SeifertMatrix {
    IntegerMatrix matrix;
    int convention = -1;

    SeifertMatrix(IntegerMatrix m, int conv);

    IntegerMatrix intersection_form() const { return matrix - matrix.transpose(); }
};

/// Curve data of the genus-g construction surface: the chain
/// alpha_1, beta_1, ..., beta_{g-1}, alpha_g on the T(2,2g) fibre, the
/// twisting curve c (nullhomologous) and the arc gamma. Intersection
/// counts are unsigned.
struct CurveChainModel {
    explicit CurveChainModel(unsigned genus);

    unsigned genus;
    std::size_t basis_size;  // 2g - 1, chain order alpha_1, beta_1, ..., alpha_g

    // Unsigned intersection counts used by the twist-count derivation.
    unsigned i_gamma_c = 2;
    unsigned i_c_alpha_gm1 = 2;
    unsigned i_gamma_alpha_gm1 = 0;
    unsigned i_gamma_alpha_g = 1;

    std::size_t alpha_g_position() const { return basis_size - 1; }

    /// [c] = 0 in the surface's first homology.
    HomologyClass c_class() const { return HomologyClass(basis_size, mpz_class(0)); }

    /// Class of the arc gamma: meets alpha_g once, nothing else.
    HomologyClass gamma_class() const;

    /// Skew intersection pairing of the chain basis: superdiagonal +1,
    /// subdiagonal -1.
    IntegerMatrix intersection_pairing() const;
};

/// The g x g matrix N(g, n) of unsigned intersection counts between the
/// twist curves alpha_i (rows) and beta_j (columns, beta_g meaning
/// beta_{g,n}). Rejects g < 2.
IntegerMatrix build_family_matrix(unsigned g, unsigned n);

/// Bounds on i(t_c^n(a), b) from |i(t_c^n a, b) - n i(a,c) i(c,b)| <= i(a,b).
/// Exact (lo == hi) when i_ab == 0. Rejects n == 0.
std::pair<mpz_class, mpz_class> twist_intersection_bounds(unsigned i_ac, unsigned i_cb,
                                                          unsigned i_ab, unsigned n);

/// t_c^n(x) = x + n <x, c> c with <x, c> = x^T J c. Rejects size mismatch
/// and non-skew J.
HomologyClass transvection_power(const HomologyClass& c, const HomologyClass& x, long n,
                                 const IntegerMatrix& j);

/// Seifert matrix of a linear chain of k positive Hopf bands: diagonal -1,
/// superdiagonal +1 (default convention).
SeifertMatrix seifert_chain(std::size_t k, int convention = -1);

/// Seifert matrix of an arborescent plumbing of positive Hopf bands. An
/// edge (i, j) with i earlier in plumbing_order carries entry (i, j) = +1.
SeifertMatrix seifert_tree(const PlumbingTree& tree, int convention = -1);

/// 2g x 2g Seifert matrix of the surface S_n in the chain basis
/// (alpha_1, beta_1, ..., beta_{g-1}, alpha_g, beta_{g,n}). The final
/// row/column is derived from the homology class of gamma_n, which is
/// computed by applying the twist transvection n times; since [c] = 0 the
/// result does not depend on n. Rejects g < 2.
SeifertMatrix seifert_family(unsigned g, unsigned n, int convention = -1);

}  // namespace knotfam
