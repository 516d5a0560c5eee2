#include "knotfam/signature.hpp"

#include <stdexcept>
#include <vector>

namespace knotfam {

namespace {

// Dense symmetric working copy over Q, addressed through an index list so
// that eliminated rows/columns drop out without data movement.
struct SymWork {
    std::size_t n;
    std::vector<mpq_class> a;
    mpq_class& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

}  // namespace

int signature_exact(const IntegerMatrix& s) {
    if (!s.is_symmetric())
        throw std::invalid_argument("signature_exact: matrix is not symmetric");
    const std::size_t n = s.nrows();
    SymWork w{n, std::vector<mpq_class>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = s(i, j);

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    int pos = 0, neg = 0;
    while (!active.empty()) {
        // Symmetric pivot permutation: prefer a nonzero diagonal pivot.
        std::size_t pivot_pos = active.size();
        for (std::size_t k = 0; k < active.size(); ++k)
            if (w.at(active[k], active[k]) != 0) {
                pivot_pos = k;
                break;
            }
        if (pivot_pos < active.size()) {
            std::size_t p = active[pivot_pos];
            mpq_class d = w.at(p, p);
            (d > 0 ? pos : neg) += 1;
            active.erase(active.begin() + static_cast<long>(pivot_pos));
            for (std::size_t ki = 0; ki < active.size(); ++ki) {
                std::size_t i = active[ki];
                if (w.at(i, p) == 0) continue;
                mpq_class f = w.at(i, p) / d;
                for (std::size_t kj = 0; kj < active.size(); ++kj) {
                    std::size_t j = active[kj];
                    w.at(i, j) -= f * w.at(p, j);
                }
            }
            // The update C_ij -> C_ij - u_i u_j / d is already symmetric.
            continue;
        }
        // Diagonal of the remaining block is all zero: look for a hyperbolic
        // 2x2 block. It contributes 0 to the signature.
        std::size_t bi = active.size(), bj = active.size();
        for (std::size_t ki = 0; ki < active.size() && bi == active.size(); ++ki)
            for (std::size_t kj = ki + 1; kj < active.size(); ++kj)
                if (w.at(active[ki], active[kj]) != 0) {
                    bi = ki;
                    bj = kj;
                    break;
                }
        if (bi == active.size()) break;  // remaining block is zero
        std::size_t p = active[bi], q = active[bj];
        mpq_class b = w.at(p, q);
        active.erase(active.begin() + static_cast<long>(bj));
        active.erase(active.begin() + static_cast<long>(bi));
        // Congruence e_i -> e_i - (w_iq/b) e_p - (w_ip/b) e_q kills the
        // coupling to the block [[0,b],[b,0]] and updates the remaining
        // block by C_ij -> C_ij - (u_i v_j + v_i u_j)/b with u_i = w_ip,
        // v_i = w_iq. Snapshot u, v before modifying.
        std::vector<mpq_class> u(active.size()), v(active.size());
        for (std::size_t ki = 0; ki < active.size(); ++ki) {
            u[ki] = w.at(active[ki], p);
            v[ki] = w.at(active[ki], q);
        }
        for (std::size_t ki = 0; ki < active.size(); ++ki)
            for (std::size_t kj = 0; kj < active.size(); ++kj)
                w.at(active[ki], active[kj]) -= (u[ki] * v[kj] + v[ki] * u[kj]) / b;
    }
    return pos - neg;
}

}  // namespace knotfam
