#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace knotfam {

/// Closed interval with exact rational endpoints, certifying a real value.
struct RationalEnclosure {
    mpq_class lo;
    mpq_class hi;

    RationalEnclosure() = default;
    RationalEnclosure(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
        lo.canonicalize();
        hi.canonicalize();
        if (lo > hi) throw std::invalid_argument("RationalEnclosure: lo > hi");
    }

    static RationalEnclosure point(const mpq_class& v) { return {v, v}; }

    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
    bool intersects(const RationalEnclosure& o) const { return lo <= o.hi && o.lo <= hi; }
    bool strictly_above(const mpq_class& v) const { return lo > v; }
    bool strictly_below(const mpq_class& v) const { return hi < v; }
    bool disjoint_from(const RationalEnclosure& o) const { return !intersects(o); }

    friend RationalEnclosure operator+(const RationalEnclosure& a, const RationalEnclosure& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RationalEnclosure operator-(const RationalEnclosure& a, const RationalEnclosure& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    RationalEnclosure operator-() const { return {-hi, -lo}; }

    friend RationalEnclosure operator*(const RationalEnclosure& a, const RationalEnclosure& b) {
        mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        mpq_class lo = p1, hi = p1;
        for (const mpq_class* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (*p > hi) hi = *p;
        }
        return {lo, hi};
    }

    friend RationalEnclosure operator+(const RationalEnclosure& a, const mpq_class& c) {
        return {a.lo + c, a.hi + c};
    }
    friend RationalEnclosure operator-(const mpq_class& c, const RationalEnclosure& a) {
        return {c - a.hi, c - a.lo};
    }

    /// Decimal rendering of the midpoint-free endpoints, for reports.
    std::string to_string(int digits = 15) const;
};

/// Rational r with r^2 <= q, within 2^-bits of sqrt(q). Requires q >= 0.
mpq_class sqrt_lower(const mpq_class& q, unsigned bits);

/// Rational r with r^2 >= q, within 2^-bits of sqrt(q). Requires q >= 0.
mpq_class sqrt_upper(const mpq_class& q, unsigned bits);

/// Outward-rounded sqrt of a nonnegative enclosure.
RationalEnclosure sqrt_enclosure(const RationalEnclosure& e, unsigned bits);

/// Fixed-point decimal rendering of an exact rational (round toward zero).
std::string decimal_string(const mpq_class& q, int digits = 15);

}  // namespace knotfam
