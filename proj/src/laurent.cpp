#include "knotfam/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotfam {

void LaurentPolynomial::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<long>(lead);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class LaurentPolynomial::eval(const mpq_class& t) const {
    if (t == 0) throw std::invalid_argument("LaurentPolynomial: cannot evaluate at t = 0");
    mpq_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    // account for t^{min_exp}
    mpq_class unit(1);
    long e = min_exp_;
    mpq_class base = e >= 0 ? t : mpq_class(t.get_den(), t.get_num());
    if (e < 0) {
        base.canonicalize();
        e = -e;
    }
    for (long i = 0; i < e; ++i) unit *= base;
    return acc * unit;
}

mpz_class LaurentPolynomial::eval_one() const {
    mpz_class s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
}

LaurentPolynomial LaurentPolynomial::reversed() const {
    if (is_zero()) return {};
    std::vector<mpz_class> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPolynomial(-max_exp(), std::move(rev));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPolynomial(a.min_exp_ + b.min_exp_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::unit_canonical() const {
    if (is_zero()) return {};
    LaurentPolynomial r = *this;
    r.min_exp_ = 0;
    if (r.coeffs_.front() < 0)
        for (auto& c : r.coeffs_) c = -c;
    r.normalized_ = false;
    return r;
}

LaurentPolynomial LaurentPolynomial::normalize_knot() const {
    if (is_zero()) throw std::invalid_argument("normalize_knot: zero polynomial");
    long span = max_exp() - min_exp();
    if (span % 2 != 0)
        throw std::invalid_argument("normalize_knot: odd exponent span has no symmetric form");
    mpz_class at_one = eval_one();
    if (at_one != 1 && at_one != -1)
        throw std::invalid_argument("normalize_knot: |value at t = 1| != 1");
    LaurentPolynomial r = *this;
    r.min_exp_ = -span / 2;
    if (at_one == -1)
        for (auto& c : r.coeffs_) c = -c;
    r.normalized_ = true;
    return r;
}

std::vector<std::pair<long, mpz_class>> LaurentPolynomial::pairs() const {
    std::vector<std::pair<long, mpz_class>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            out.emplace_back(min_exp_ + static_cast<long>(k), coeffs_[k]);
    return out;
}

LaurentPolynomial LaurentPolynomial::from_pairs(
    const std::vector<std::pair<long, mpz_class>>& pairs) {
    if (pairs.empty()) return {};
    for (std::size_t k = 1; k < pairs.size(); ++k)
        if (pairs[k].first <= pairs[k - 1].first)
            throw std::invalid_argument("from_pairs: exponents must strictly increase");
    long lo = pairs.front().first, hi = pairs.back().first;
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (const auto& [e, v] : pairs) c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentPolynomial(lo, std::move(c));
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = max_exp(); e >= min_exp(); --e) {
        mpz_class c = coeff(e);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class ac = abs(c);
        if (ac != 1 || e == 0) os << ac.get_str();
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace knotfam
