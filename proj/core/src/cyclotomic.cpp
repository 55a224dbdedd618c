#include "xring/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xring {

namespace {

// --- integer polynomial helpers (for the cyclotomic polynomials) ---

void int_poly_trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; remainder is known to vanish.
std::vector<Int> int_poly_div_monic(std::vector<Int> num, const std::vector<Int>& den) {
    int_poly_trim(num);
    const size_t dd = den.size() - 1;  // divisor degree
    if (num.size() < den.size()) {
        throw std::logic_error("int_poly_div_monic: degree underflow");
    }
    std::vector<Int> quot(num.size() - dd, 0);
    for (size_t k = num.size(); k-- > dd;) {
        Int c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (size_t j = 0; j <= dd; ++j) {
            num[k - dd + j] -= c * den[j];
        }
    }
    int_poly_trim(num);
    if (!num.empty()) {
        throw std::logic_error("int_poly_div_monic: nonzero remainder");
    }
    return quot;
}

// --- rational polynomial helpers (residue arithmetic) ---

void poly_trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place reduction modulo a monic integer polynomial.
void poly_reduce(std::vector<Rational>& p, const std::vector<Int>& mod) {
    const size_t deg = mod.size() - 1;
    for (size_t k = p.size(); k-- > deg;) {
        Rational c = p[k];
        if (c == 0) continue;
        p[k] = 0;
        for (size_t j = 0; j < deg; ++j) {
            p[k - deg + j] -= c * Rational(mod[j]);
        }
    }
    p.resize(std::min(p.size(), deg));
    p.resize(deg, Rational(0));
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Division with remainder over Q[x]; divisor need not be monic.
void poly_divmod(std::vector<Rational> num, std::vector<Rational> den,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
    poly_trim(num);
    poly_trim(den);
    if (den.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    quot.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / lead;
        size_t shift = num.size() - den.size();
        quot[shift] += c;
        for (size_t j = 0; j < den.size(); ++j) {
            num[shift + j] -= c * den[j];
        }
        poly_trim(num);
    }
    rem = std::move(num);
    poly_trim(quot);
}

std::vector<unsigned> proper_divisors(unsigned q) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d < q; ++d) {
        if (q % d == 0) out.push_back(d);
    }
    return out;
}

}  // namespace

unsigned euler_phi(unsigned q) {
    if (q == 0) {
        throw std::domain_error("euler_phi(0)");
    }
    unsigned result = q;
    unsigned n = q;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Int>& cyclotomic_polynomial(unsigned q) {
    if (q == 0) {
        throw std::domain_error("cyclotomic_polynomial(0)");
    }
    static std::mutex cache_mutex;
    static std::map<unsigned, std::vector<Int>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;

    // x^q - 1 divided by the product of Phi_d over proper divisors d of q.
    std::function<std::vector<Int>(unsigned)> compute = [&](unsigned m) -> std::vector<Int> {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Int> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (unsigned d : proper_divisors(m)) {
            num = int_poly_div_monic(std::move(num), compute(d));
        }
        cache.emplace(m, num);
        return num;
    };
    compute(q);
    return cache.at(q);
}

CycScalar::CycScalar() : order_(kDefaultScalarOrder), coeffs_(euler_phi(kDefaultScalarOrder), Rational(0)) {}

CycScalar::CycScalar(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ == 0) {
        throw std::domain_error("cyclotomic order must be positive");
    }
    if (coeffs_.size() != euler_phi(order_)) {
        throw std::invalid_argument("CycScalar: coefficient vector length must be phi(order)");
    }
}

CycScalar CycScalar::zero(unsigned order) {
    return CycScalar(order, std::vector<Rational>(euler_phi(order), Rational(0)));
}

CycScalar CycScalar::one(unsigned order) {
    return from_rational(Rational(1), order);
}

CycScalar CycScalar::from_rational(const Rational& r, unsigned order) {
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[0] = r;
    // Q(zeta_1) = Q[x]/(x-1): the basis vector is zeta^0 = 1 either way.
    return CycScalar(order, std::move(c));
}

CycScalar CycScalar::from_int(long value, unsigned order) {
    return from_rational(Rational(value), order);
}

CycScalar CycScalar::root_of_unity(unsigned order, long power) {
    long p = power % static_cast<long>(order);
    if (p < 0) p += order;
    std::vector<Rational> poly(static_cast<size_t>(p) + 1, Rational(0));
    poly[static_cast<size_t>(p)] = 1;
    poly_reduce(poly, cyclotomic_polynomial(order));
    return CycScalar(order, std::move(poly));
}

CycScalar CycScalar::gaussian(const Rational& re, const Rational& im) {
    return CycScalar(4, {re, im});
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycScalar::is_one() const {
    auto r = as_rational();
    return r && *r == 1;
}

std::optional<Rational> CycScalar::as_rational() const {
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) return std::nullopt;
    }
    return coeffs_[0];
}

CycScalar CycScalar::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) {
        throw std::invalid_argument("CycScalar::embedded: target order not a multiple of source order");
    }
    const unsigned step = new_order / order_;
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        poly[k * step] = coeffs_[k];
    }
    poly_reduce(poly, cyclotomic_polynomial(new_order));
    return CycScalar(new_order, std::move(poly));
}

CycScalar CycScalar::converted(unsigned target) const {
    if (target == order_) return *this;
    if (auto r = as_rational()) return from_rational(*r, target);
    if (target % order_ == 0) return embedded(target);
    throw std::invalid_argument("CycScalar::converted: value does not live in the target order");
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.order_ != b.order_) {
        throw std::invalid_argument("cyclotomic order mismatch (embed into a common order first)");
    }
    std::vector<Rational> out(a.coeffs_.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
    return CycScalar(a.order_, std::move(out));
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    if (a.order_ != b.order_) {
        throw std::invalid_argument("cyclotomic order mismatch (embed into a common order first)");
    }
    std::vector<Rational> out(a.coeffs_.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = a.coeffs_[k] - b.coeffs_[k];
    return CycScalar(a.order_, std::move(out));
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.order_ != b.order_) {
        throw std::invalid_argument("cyclotomic order mismatch (embed into a common order first)");
    }
    std::vector<Rational> out = poly_mul(a.coeffs_, b.coeffs_);
    poly_reduce(out, cyclotomic_polynomial(a.order_));
    return CycScalar(a.order_, std::move(out));
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = -coeffs_[k];
    return CycScalar(order_, std::move(out));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string CycScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << to_string(coeffs_[k]);
        if (k > 0) os << "*z" << order_ << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycScalar conj(const CycScalar& a) {
    const unsigned q = a.order();
    std::vector<Rational> poly(q, Rational(0));
    for (size_t k = 0; k < a.coeffs().size(); ++k) {
        size_t e = (k == 0) ? 0 : q - k;
        poly[e] += a.coeffs()[k];
    }
    poly_reduce(poly, cyclotomic_polynomial(q));
    return CycScalar(q, std::move(poly));
}

CycScalar inverse(const CycScalar& a) {
    if (a.is_zero()) {
        throw std::domain_error("not invertible: zero scalar");
    }
    const auto& phi_poly = cyclotomic_polynomial(a.order());
    // Extended Euclid in Q[x] for (a, Phi_q); Phi_q is irreducible over Q,
    // so the gcd is a nonzero constant.
    std::vector<Rational> r0(a.coeffs());
    poly_trim(r0);
    std::vector<Rational> r1(phi_poly.size());
    for (size_t k = 0; k < phi_poly.size(); ++k) r1[k] = Rational(phi_poly[k]);
    std::vector<Rational> s0 = {Rational(1)};
    std::vector<Rational> s1 = {};

    while (!r1.empty()) {
        std::vector<Rational> q, rem;
        poly_divmod(r0, r1, q, rem);
        std::vector<Rational> qs1 = s1.empty() ? std::vector<Rational>{} : poly_mul(q, s1);
        std::vector<Rational> s2(std::max(s0.size(), qs1.size()), Rational(0));
        for (size_t k = 0; k < s0.size(); ++k) s2[k] += s0[k];
        for (size_t k = 0; k < qs1.size(); ++k) s2[k] -= qs1[k];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (constant), s0 * a = r0 (mod Phi_q).
    if (r0.size() != 1) {
        throw std::logic_error("inverse: cyclotomic polynomial not coprime with residue");
    }
    const Rational g = r0[0];
    std::vector<Rational> inv = std::move(s0);
    for (auto& c : inv) c /= g;
    poly_reduce(inv, phi_poly);
    return CycScalar(a.order(), std::move(inv));
}

CycScalar abs_squared(const CycScalar& a) { return a * conj(a); }

Rational abs_upper_bound(const CycScalar& a) {
    const auto sq = abs_squared(a).as_rational();
    if (sq) {
        // |a| = sqrt of a rational; exact when that value is a square.
        const Rational& r = *sq;
        if (mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
            mpz_perfect_square_p(r.get_den().get_mpz_t())) {
            Int n, d;
            mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
            mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
            return make_rational(n, d);
        }
        return rational_sqrt_upper(r);
    }
    // Triangle inequality on the power basis: every basis vector has modulus 1.
    Rational bound(0);
    for (const auto& c : a.coeffs()) bound += abs(c);
    return bound;
}

unsigned lcm_order(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm(a, b));
}

}  // namespace xring
