#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotfam/integer_matrix.hpp"

namespace knotfam {

/// Polynomial with arbitrary-precision integer coefficients, index = degree.
/// The zero polynomial is the empty coefficient list.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;

    explicit IntegerPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    IntegerPolynomial(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static IntegerPolynomial constant(const mpz_class& c) {
        return IntegerPolynomial(std::vector<mpz_class>{c});
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
    }

    const mpz_class& leading() const {
        if (is_zero()) throw std::logic_error("IntegerPolynomial: zero has no leading coefficient");
        return coeffs_.back();
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    mpz_class eval_int(const mpz_class& x) const {
        mpz_class acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntegerPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<mpz_class> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = mpz_class(k) * coeffs_[k];
        return IntegerPolynomial(std::move(d));
    }

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    IntegerPolynomial operator-() const;

    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Quotient of an exact division; throws if b does not divide a.
    static IntegerPolynomial divexact(const IntegerPolynomial& a, const IntegerPolynomial& b);

    /// gcd of all coefficients (0 for the zero polynomial).
    mpz_class content() const;

    /// a / content, with positive leading coefficient.
    IntegerPolynomial primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpz_class> coeffs_;
};

/// p / gcd(p, p'): same real roots, all simple. Primitive with positive
/// leading coefficient.
IntegerPolynomial square_free_part(const IntegerPolynomial& p);

/// det(xI - A) with exact integer coefficients (Faddeev-LeVerrier; the
/// per-step divisions are exact over the integers). Rejects non-square A.
IntegerPolynomial char_poly(const IntegerMatrix& a);

}  // namespace knotfam
