#include "knotfam/integer_poly.hpp"

#include <algorithm>
#include <sstream>

namespace knotfam {

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::divexact(const IntegerPolynomial& a,
                                              const IntegerPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divexact: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::invalid_argument("divexact: not divisible");
    std::vector<mpz_class> rem = a.coeffs_;
    std::vector<mpz_class> quot(a.coeffs_.size() - b.coeffs_.size() + 1, mpz_class(0));
    const mpz_class& lead = b.leading();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        mpz_class top = rem[k + b.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::invalid_argument("divexact: not divisible");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quot[k] = q;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            rem[k + j] -= q * b.coeffs_[j];
    }
    for (const mpz_class& r : rem)
        if (r != 0) throw std::invalid_argument("divexact: nonzero remainder");
    return IntegerPolynomial(std::move(quot));
}

mpz_class IntegerPolynomial::content() const {
    mpz_class g(0);
    for (const mpz_class& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        mpz_divexact(c[k].get_mpz_t(), coeffs_[k].get_mpz_t(), g.get_mpz_t());
    return IntegerPolynomial(std::move(c));
}

std::string IntegerPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class ac = abs(c);
        if (ac != 1 || k == 0) os << ac.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Polynomial over Q, dense by degree. Internal helper for gcd computation.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        qtrim(a);
    }
    return a;
}

QPoly to_qpoly(const IntegerPolynomial& p) {
    QPoly q(p.coeffs().size());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = p.coeffs()[k];
    return q;
}

IntegerPolynomial clear_denominators(const QPoly& q) {
    mpz_class lcm(1);
    for (const mpq_class& c : q)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> c(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        mpq_class v = q[k] * lcm;
        c[k] = v.get_num();
    }
    return IntegerPolynomial(std::move(c));
}

}  // namespace

IntegerPolynomial square_free_part(const IntegerPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (p.degree() == 0) return IntegerPolynomial({1});
    QPoly a = to_qpoly(p);
    QPoly b = to_qpoly(p.derivative());
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // Gauss: both p.primitive_part() and g are primitive, so the quotient
    // is an exact integer polynomial.
    IntegerPolynomial g = clear_denominators(a).primitive_part();
    return IntegerPolynomial::divexact(p.primitive_part(), g).primitive_part();
}

IntegerPolynomial char_poly(const IntegerMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = a.nrows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A(M_k + c_{n-k} I).
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    IntegerMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        mpz_class ck;
        mpz_class neg_tr = -tr;
        mpz_class kk(static_cast<unsigned long>(k));
        mpz_divexact(ck.get_mpz_t(), neg_tr.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = ck;
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
            m = a * m;
        }
    }
    return IntegerPolynomial(std::move(c));
}

}  // namespace knotfam
