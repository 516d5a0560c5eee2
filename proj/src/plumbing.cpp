#include "knotfam/plumbing.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotfam {

void PlumbingTree::validate() const {
    if (node_count == 0) throw std::invalid_argument("PlumbingTree: no nodes");
    if (edges.size() != node_count - 1)
        throw std::invalid_argument("PlumbingTree: edge count must be node_count - 1");
    std::vector<std::size_t> parent(node_count);
    for (std::size_t i = 0; i < node_count; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a >= node_count || b >= node_count)
            throw std::invalid_argument("PlumbingTree: edge endpoint out of range");
        std::size_t ra = find(a), rb = find(b);
        if (ra == rb) throw std::invalid_argument("PlumbingTree: edges contain a cycle");
        parent[ra] = rb;
    }
    if (plumbing_order.size() != node_count)
        throw std::invalid_argument("PlumbingTree: order size mismatch");
    std::vector<bool> seen(node_count, false);
    for (std::size_t v : plumbing_order) {
        if (v >= node_count || seen[v])
            throw std::invalid_argument("PlumbingTree: order is not a permutation");
        seen[v] = true;
    }
}

SeifertMatrix::SeifertMatrix(IntegerMatrix m, int conv) : matrix(std::move(m)), convention(conv) {
    if (conv != -1 && conv != 1)
        throw std::invalid_argument("SeifertMatrix: convention must be -1 or +1");
    if (!matrix.is_square())
        throw std::invalid_argument("SeifertMatrix: matrix must be square");
    mpz_class d = det_bareiss(matrix);
    if (d != 1 && d != -1)
        throw std::invalid_argument("SeifertMatrix: |det| != 1, not a fibre surface form");
}

CurveChainModel::CurveChainModel(unsigned g) : genus(g), basis_size(2 * g - 1) {
    if (g < 2) throw std::invalid_argument("CurveChainModel: genus must be >= 2");
}

HomologyClass CurveChainModel::gamma_class() const {
    HomologyClass v(basis_size, mpz_class(0));
    v[alpha_g_position()] = i_gamma_alpha_g;
    return v;
}

IntegerMatrix CurveChainModel::intersection_pairing() const {
    IntegerMatrix j(basis_size, basis_size);
    for (std::size_t i = 0; i + 1 < basis_size; ++i) {
        j(i, i + 1) = 1;
        j(i + 1, i) = -1;
    }
    return j;
}

IntegerMatrix build_family_matrix(unsigned g, unsigned n) {
    if (g < 2) throw std::invalid_argument("build_family_matrix: g must be >= 2");
    CurveChainModel model(g);
    IntegerMatrix m(g, g);
    for (unsigned i = 0; i < g; ++i) m(i, i) = 1;
    for (unsigned i = 1; i < g; ++i) m(i, i - 1) = 1;
    // i(beta_{g,n}, alpha_{g-1}): pinned exactly by the twist inequality
    // because gamma and alpha_{g-1} are disjoint.
    if (n >= 1) {
        auto [lo, hi] =
            twist_intersection_bounds(model.i_gamma_c, model.i_c_alpha_gm1,
                                      model.i_gamma_alpha_gm1, n);
        if (lo != hi) throw std::logic_error("build_family_matrix: twist count not exact");
        m(g - 2, g - 1) = lo;
    }
    return m;
}

std::pair<mpz_class, mpz_class> twist_intersection_bounds(unsigned i_ac, unsigned i_cb,
                                                          unsigned i_ab, unsigned n) {
    if (n == 0)
        throw std::invalid_argument(
            "twist_intersection_bounds: n = 0 is outside the inequality's regime");
    mpz_class core = mpz_class(n) * i_ac * i_cb;
    mpz_class lo = core - i_ab;
    if (lo < 0) lo = 0;
    return {lo, core + i_ab};
}

HomologyClass transvection_power(const HomologyClass& c, const HomologyClass& x, long n,
                                 const IntegerMatrix& j) {
    if (c.size() != x.size() || j.nrows() != c.size() || j.ncols() != c.size())
        throw std::invalid_argument("transvection_power: size mismatch");
    for (std::size_t a = 0; a < j.nrows(); ++a)
        for (std::size_t b = 0; b < j.ncols(); ++b)
            if (j(a, b) != -j(b, a))
                throw std::invalid_argument("transvection_power: pairing is not skew");
    // <x, c> = x^T J c
    mpz_class pairing(0);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b) pairing += x[a] * j(a, b) * c[b];
    HomologyClass out = x;
    for (std::size_t a = 0; a < c.size(); ++a) out[a] += n * pairing * c[a];
    return out;
}

SeifertMatrix seifert_chain(std::size_t k, int convention) {
    if (k < 1) throw std::invalid_argument("seifert_chain: k must be >= 1");
    IntegerMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = -1;
    for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
    if (convention == 1) m = -m;
    return SeifertMatrix(std::move(m), convention);
}

SeifertMatrix seifert_tree(const PlumbingTree& tree, int convention) {
    tree.validate();
    std::vector<std::size_t> rank(tree.node_count);
    for (std::size_t k = 0; k < tree.node_count; ++k) rank[tree.plumbing_order[k]] = k;
    IntegerMatrix m(tree.node_count, tree.node_count);
    for (std::size_t i = 0; i < tree.node_count; ++i) m(i, i) = -1;
    for (auto [a, b] : tree.edges) {
        if (rank[a] < rank[b])
            m(a, b) = 1;
        else
            m(b, a) = 1;
    }
    if (convention == 1) m = -m;
    return SeifertMatrix(std::move(m), convention);
}

SeifertMatrix seifert_family(unsigned g, unsigned n, int convention) {
    if (g < 2) throw std::invalid_argument("seifert_family: g must be >= 2");
    CurveChainModel model(g);
    const std::size_t base = model.basis_size;  // 2g - 1

    // The T(2,2g) fibre surface: chain of 2g-1 positive Hopf bands.
    SeifertMatrix s = seifert_chain(base, -1);
    IntegerMatrix j = s.intersection_form();

    // gamma_n = t_c^n(gamma); apply the transvection n times, one twist at
    // a time. [c] = 0, so the class is independent of n.
    HomologyClass gamma_n = model.gamma_class();
    HomologyClass c = model.c_class();
    for (unsigned k = 0; k < n; ++k) gamma_n = transvection_power(c, gamma_n, 1, j);

    // Plumb the band H_{2g} along gamma_n from below: the new generator
    // beta_{g,n} has self-linking -1, its linking with a basis curve x is
    // the algebraic intersection <x, gamma_n>, and the opposite linking
    // vanishes (the band's core bounds a disc on the far side of S).
    IntegerMatrix full(base + 1, base + 1);
    for (std::size_t a = 0; a < base; ++a)
        for (std::size_t b = 0; b < base; ++b) full(a, b) = s.matrix(a, b);
    for (std::size_t a = 0; a < base; ++a) full(a, base) = gamma_n[a];
    full(base, base) = -1;
    if (convention == 1) full = -full;
    return SeifertMatrix(std::move(full), convention);
}

}  // namespace knotfam
