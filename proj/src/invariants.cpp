#include "knotfam/invariants.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "knotfam/signature.hpp"

namespace knotfam {

namespace {

// Fraction-free Bareiss determinant over Z[t].
IntegerPolynomial poly_det_bareiss(std::vector<std::vector<IntegerPolynomial>> m) {
    const std::size_t n = m.size();
    IntegerPolynomial prev({1});
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return {};
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = IntegerPolynomial::divexact(
                    m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

IntegerPolynomial alexander_raw(const IntegerMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("alexander_raw: non-square matrix");
    const std::size_t n = a.nrows();
    std::vector<std::vector<IntegerPolynomial>> m(n, std::vector<IntegerPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = IntegerPolynomial({a(i, j), -a(j, i)});  // A_ij - t A_ji
    return poly_det_bareiss(std::move(m));
}

LaurentPolynomial alexander(const SeifertMatrix& a) {
    LaurentPolynomial p = LaurentPolynomial::from_polynomial(alexander_raw(a.matrix));
    long span = p.max_exp() - p.min_exp();
    mpz_class at_one = p.eval_one();
    if (span % 2 != 0 || (at_one != 1 && at_one != -1)) return p;
    return p.normalize_knot();
}

int knot_signature(const SeifertMatrix& a) {
    return signature_exact(a.matrix + a.matrix.transpose());
}

std::vector<LTSample> levine_tristram(const SeifertMatrix& a,
                                      const std::vector<mpq_class>& theta_over_pi) {
    const std::size_t n = a.matrix.nrows();
    std::vector<LTSample> out;
    out.reserve(theta_over_pi.size());
    for (const mpq_class& q : theta_over_pi) {
        if (q <= 0 || q > 1)
            throw std::invalid_argument("levine_tristram: angle must be in (0, pi]");
        LTSample sample;
        sample.theta_over_pi = q;
        if (q == 1) {
            // omega = -1: the form is 2(A + A^T); exact path.
            IntegerMatrix sym = a.matrix + a.matrix.transpose();
            sample.omega_signature = signature_exact(sym);
            sample.degenerate = det_bareiss(sym) == 0;
        } else {
            double theta = M_PI * q.get_d();
            std::complex<double> omega(std::cos(theta), std::sin(theta));
            Eigen::MatrixXcd h(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    h(static_cast<long>(i), static_cast<long>(j)) =
                        (1.0 - omega) * a.matrix(i, j).get_d() +
                        (1.0 - std::conj(omega)) * a.matrix(j, i).get_d();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
            const auto& ev = solver.eigenvalues();
            double max_abs = 0;
            for (long k = 0; k < ev.size(); ++k) max_abs = std::max(max_abs, std::abs(ev[k]));
            const double threshold = 1e-8 * max_abs;
            int pos = 0, neg = 0;
            bool degenerate = max_abs == 0;
            for (long k = 0; k < ev.size(); ++k) {
                if (std::abs(ev[k]) <= threshold)
                    degenerate = true;
                else if (ev[k] > 0)
                    ++pos;
                else
                    ++neg;
            }
            sample.omega_signature = pos - neg;
            sample.degenerate = degenerate;
        }
        out.push_back(std::move(sample));
    }
    return out;
}

unsigned default_order_cap(std::size_t size) {
    return static_cast<unsigned>(4 * size + 10);
}

MonodromyData homological_monodromy(const SeifertMatrix& a, unsigned order_cap) {
    if (order_cap < 1) throw std::invalid_argument("homological_monodromy: cap must be >= 1");
    const std::size_t n = a.matrix.nrows();
    const IntegerMatrix at = a.matrix.transpose();

    // Solve A^T M = A over Q by Gaussian elimination; unimodularity makes
    // the result integral.
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = at(i, j);
            aug[i][n + j] = a.matrix(i, j);
        }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug[p][k] == 0) ++p;
        if (p == n) throw std::invalid_argument("homological_monodromy: singular matrix");
        std::swap(aug[k], aug[p]);
        mpq_class d = aug[k][k];
        for (std::size_t j = k; j < 2 * n; ++j) aug[k][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug[i][k] == 0) continue;
            mpq_class f = aug[i][k];
            for (std::size_t j = k; j < 2 * n; ++j) aug[i][j] -= f * aug[k][j];
        }
    }
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = aug[i][n + j];
            if (v.get_den() != 1)
                throw std::logic_error("homological_monodromy: non-integral entry");
            m(i, j) = v.get_num();
        }

    if (det_bareiss(m) != 1)
        throw std::logic_error("homological_monodromy: det(M) != 1");
    IntegerMatrix j = a.intersection_form();
    if (!(m.transpose() * j * m == j))
        throw std::logic_error("homological_monodromy: intersection form not preserved");

    MonodromyData data{m, std::nullopt};
    IntegerMatrix power = m;
    IntegerMatrix id = IntegerMatrix::identity(n);
    for (unsigned k = 1; k <= order_cap; ++k) {
        if (power == id) {
            data.order = k;
            break;
        }
        if (k < order_cap) power = power * m;
    }
    return data;
}

bool alexander_module_agrees(const SeifertMatrix& a, const SeifertMatrix& b,
                             unsigned order_cap) {
    if (a.matrix.nrows() != b.matrix.nrows())
        throw std::invalid_argument("alexander_module_agrees: size mismatch");
    return homological_monodromy(a, order_cap).matrix ==
           homological_monodromy(b, order_cap).matrix;
}

bool fox_milnor_witness(const LaurentPolynomial& p, const LaurentPolynomial& f) {
    LaurentPolynomial product = f * f.reversed();
    return p.unit_canonical() == product.unit_canonical();
}

bool seifert_forms_equal(const SeifertMatrix& a, const SeifertMatrix& b) {
    if (a.convention != b.convention)
        throw std::invalid_argument("seifert_forms_equal: convention mismatch");
    return a.matrix == b.matrix;
}

}  // namespace knotfam
