#include "knotfam/root_isolation.hpp"

#include <vector>

namespace knotfam {

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntegerPolynomial& p) {
    QPoly q(p.coeffs().size());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = p.coeffs()[k];
    return q;
}

QPoly qneg_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        qtrim(a);
    }
    for (mpq_class& c : a) c = -c;
    return a;
}

mpq_class qeval(const QPoly& p, const mpq_class& x) {
    mpq_class acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Sturm chain of a square-free polynomial.
std::vector<QPoly> sturm_chain(const IntegerPolynomial& sq) {
    std::vector<QPoly> chain;
    chain.push_back(to_qpoly(sq));
    chain.push_back(to_qpoly(sq.derivative()));
    qtrim(chain.back());
    while (chain.back().size() > 0) {
        QPoly next = qneg_rem(chain[chain.size() - 2], chain.back());
        if (next.empty()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int variations = 0, prev = 0;
    for (const QPoly& p : chain) {
        mpq_class v = qeval(p, x);
        int s = sgn(v);
        if (s != 0) {
            if (prev != 0 && s != prev) ++variations;
            prev = s;
        }
    }
    return variations;
}

// Cauchy bound: all real roots lie in [-B, B].
mpq_class cauchy_bound(const IntegerPolynomial& p) {
    mpz_class maxc(0);
    for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
        mpz_class a = abs(p.coeffs()[k]);
        if (a > maxc) maxc = a;
    }
    mpz_class lead = abs(p.leading());
    mpq_class b(maxc, lead);
    b.canonicalize();
    return b + 1;
}

}  // namespace

int count_real_roots(const IntegerPolynomial& p, const mpq_class& a, const mpq_class& b) {
    IntegerPolynomial sq = square_free_part(p);
    if (sq.degree() == 0) return 0;
    auto chain = sturm_chain(sq);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

RationalEnclosure largest_root_enclosure(const IntegerPolynomial& p,
                                         const mpq_class& search_hi,
                                         const mpq_class& tol) {
    if (tol <= 0) throw std::invalid_argument("largest_root_enclosure: tol must be positive");
    if (p.is_zero()) throw std::invalid_argument("largest_root_enclosure: zero polynomial");
    IntegerPolynomial sq = square_free_part(p);
    if (sq.degree() == 0) throw NoRealRootError("constant polynomial has no roots");
    auto chain = sturm_chain(sq);

    mpq_class bound = cauchy_bound(sq);
    mpq_class lo = -bound;
    mpq_class hi = search_hi < bound ? search_hi : bound;
    if (hi <= lo) throw NoRealRootError("no real root at or below the search bound");
    int v_lo = sign_variations(chain, lo);
    int v_hi = sign_variations(chain, hi);
    if (v_lo - v_hi <= 0) throw NoRealRootError("no real root at or below the search bound");

    // Invariant: the largest root <= search_hi lies in (lo, hi].
    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        if (sign_variations(chain, mid) - v_hi >= 1) {
            lo = mid;
        } else {
            hi = mid;
            v_hi = sign_variations(chain, hi);
        }
    }
    return {lo, hi};
}

}  // namespace knotfam
