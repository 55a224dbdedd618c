#include "xring/rational.hpp"

#include <stdexcept>

namespace xring {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("malformed rational (zero denominator): '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

long to_long(const Int& n) {
    if (!n.fits_slong_p()) {
        throw std::overflow_error("integer too large for machine word: " + n.get_str());
    }
    return n.get_si();
}

Int ceil_sqrt(const Int& n) {
    if (n < 0) {
        throw std::domain_error("ceil_sqrt of negative value");
    }
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) {
        root += 1;
    }
    return root;
}

Rational rational_sqrt_upper(const Rational& r, unsigned digits) {
    if (r < 0) {
        throw std::domain_error("rational_sqrt_upper of negative value");
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    // ceil(num * scale^2 / den), then ceil-sqrt: (m/scale)^2 >= r.
    Int scaled_num = r.get_num() * scale * scale;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    return make_rational(ceil_sqrt(q), scale);
}

std::string decimal_upper(const Rational& r, unsigned digits) {
    if (r < 0) {
        throw std::domain_error("decimal_upper of negative value");
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled = r.get_num() * scale;
    Int units;
    mpz_cdiv_q(units.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
    Int whole = units / scale;
    Int frac = units % scale;
    std::string frac_str = frac.get_str();
    if (frac_str.size() < digits) {
        frac_str = std::string(digits - frac_str.size(), '0') + frac_str;
    }
    return whole.get_str() + "." + frac_str;
}

}  // namespace xring
