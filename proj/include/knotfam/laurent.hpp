#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "knotfam/integer_poly.hpp"

namespace knotfam {

/// Integer-coefficient polynomial in t, t^-1. Kept trimmed: the lowest and
/// highest stored coefficients are nonzero (the zero polynomial stores
/// nothing). The normalized flag marks the canonical knot-polynomial form:
/// symmetric exponent range and value 1 at t = 1.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    LaurentPolynomial(long min_exp, std::vector<mpz_class> coeffs)
        : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
        trim();
    }

    static LaurentPolynomial from_polynomial(const IntegerPolynomial& p, long shift = 0) {
        return LaurentPolynomial(shift, p.coeffs());
    }

    static LaurentPolynomial one() { return LaurentPolynomial(0, {mpz_class(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    bool normalized() const { return normalized_; }

    mpz_class coeff(long e) const {
        long k = e - min_exp_;
        if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    mpq_class eval(const mpq_class& t) const;

    /// Sum of coefficients (the value at t = 1).
    mpz_class eval_one() const;

    LaurentPolynomial shifted(long k) const {
        LaurentPolynomial r = *this;
        if (!r.is_zero()) r.min_exp_ += k;
        return r;
    }

    /// Substitute t -> t^-1.
    LaurentPolynomial reversed() const;

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
    }

    bool palindromic() const { return *this == reversed(); }

    /// Canonical representative modulo units +-t^k: min exponent 0, lowest
    /// coefficient positive. Used for up-to-units equality.
    LaurentPolynomial unit_canonical() const;

    /// Knot-polynomial normalization: symmetric exponent range and value 1
    /// at t = 1. Returns a copy with the normalized flag set; throws if no
    /// such representative exists (odd exponent span or |p(1)| != 1).
    LaurentPolynomial normalize_knot() const;

    /// (exponent, coefficient) pairs with strictly increasing exponents.
    std::vector<std::pair<long, mpz_class>> pairs() const;
    static LaurentPolynomial from_pairs(const std::vector<std::pair<long, mpz_class>>& pairs);

    std::string to_string() const;

private:
    void trim();
    long min_exp_ = 0;
    std::vector<mpz_class> coeffs_;
    bool normalized_ = false;
};

}  // namespace knotfam
