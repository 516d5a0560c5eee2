#include "knotfam/enclosure.hpp"

#include <sstream>

namespace knotfam {

namespace {

// floor(sqrt(q * 4^bits)) as an integer; the scaled lower square root.
mpz_class scaled_isqrt_floor(const mpq_class& q, unsigned bits) {
    if (q < 0) throw std::invalid_argument("sqrt of negative rational");
    // floor(sqrt(n/d * 4^bits)) = isqrt(floor(n * 4^bits / d)) can be off by
    // one near perfect squares; use isqrt(n * d * 4^bits) / d scaling instead:
    // sqrt(n/d) = sqrt(n*d)/d, so floor(2^bits * sqrt(n/d)) needs
    // isqrt(n * d * 4^bits) with exact floor semantics. mpz_sqrt gives the
    // exact floor of the integer square root.
    mpz_class scaled = q.get_num() * q.get_den();
    scaled <<= 2 * bits;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return root;  // floor(2^bits * d * sqrt(n/d))
}

}  // namespace

mpq_class sqrt_lower(const mpq_class& q, unsigned bits) {
    mpz_class root = scaled_isqrt_floor(q, bits);
    mpq_class r(root, q.get_den() << bits);
    r.canonicalize();
    return r;
}

mpq_class sqrt_upper(const mpq_class& q, unsigned bits) {
    mpz_class root = scaled_isqrt_floor(q, bits) + 1;
    mpq_class r(root, q.get_den() << bits);
    r.canonicalize();
    return r;
}

RationalEnclosure sqrt_enclosure(const RationalEnclosure& e, unsigned bits) {
    return {sqrt_lower(e.lo, bits), sqrt_upper(e.hi, bits)};
}

std::string decimal_string(const mpq_class& q, int digits) {
    mpq_class a = q < 0 ? mpq_class(-q) : q;
    mpz_class pow10(1);
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    mpz_class scaled = a.get_num() * pow10 / a.get_den();
    mpz_class ip = scaled / pow10;
    mpz_class fp = scaled % pow10;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    std::ostringstream os;
    if (q < 0) os << "-";
    os << ip.get_str() << "." << frac;
    return os.str();
}

std::string RationalEnclosure::to_string(int digits) const {
    return "[" + decimal_string(lo, digits) + ", " + decimal_string(hi, digits) + "]";
}

}  // namespace knotfam
