#include "knotfam/integer_matrix.hpp"

#include <sstream>

namespace knotfam {

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < nrows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < ncols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntegerMatrix gram(const IntegerMatrix& n) {
    return n * n.transpose();
}

mpz_class det_bareiss(const IntegerMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("det_bareiss: non-square matrix");
    const std::size_t n = a.nrows();
    IntegerMatrix m = a;
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : mpz_class(-m(n - 1, n - 1));
}

}  // namespace knotfam
