#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// generators over the desk-scale windows and an independent numeric oracle
// for cyclotomic arithmetic.

#include "xring/crossed_product.hpp"
#include "xring/cyclotomic.hpp"
#include "xring/group_ring.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace testsupport {

using namespace xring;

class Rng {
public:
    explicit Rng(unsigned long seed) : gen_(seed) {}

    unsigned long raw() { return gen_(); }

    long below(long n) { return static_cast<long>(gen_() % static_cast<unsigned long>(n)); }

    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    Rational rational(long max_num = 3, long max_den = 3) {
        return make_rational(Int(range(-max_num, max_num)), Int(range(1, max_den)));
    }

    Rational nonzero_rational(long max_num = 3, long max_den = 3) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    CycScalar scalar(unsigned order) {
        std::vector<Rational> coeffs(euler_phi(order));
        for (auto& c : coeffs) c = rational();
        return CycScalar(order, std::move(coeffs));
    }

    CycScalar nonzero_scalar(unsigned order) {
        while (true) {
            CycScalar s = scalar(order);
            if (!s.is_zero()) return s;
        }
    }

    /// A value from the default Gaussian grid {0, +-1, +-i, +-1/2}.
    CycScalar gaussian_grid_value() {
        switch (below(7)) {
            case 0: return CycScalar::zero(4);
            case 1: return CycScalar::from_int(1, 4);
            case 2: return CycScalar::from_int(-1, 4);
            case 3: return CycScalar::root_of_unity(4, 1);
            case 4: return -CycScalar::root_of_unity(4, 1);
            case 5: return CycScalar::gaussian(make_rational(1, 2), Rational(0));
            default: return CycScalar::gaussian(make_rational(-1, 2), Rational(0));
        }
    }

    CycScalar nonzero_gaussian_grid_value() {
        while (true) {
            CycScalar s = gaussian_grid_value();
            if (!s.is_zero()) return s;
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[static_cast<size_t>(below(static_cast<long>(pool.size())))];
    }

    GroupRingElement ring_element(const Group& g, const std::vector<GroupElement>& window,
                                  size_t max_terms) {
        GroupRingElement::TermMap terms;
        size_t count = static_cast<size_t>(range(0, static_cast<long>(max_terms)));
        for (size_t i = 0; i < count; ++i) {
            CycScalar c = gaussian_grid_value();
            if (c.is_zero()) continue;
            terms[pick(window)] = c;
        }
        return GroupRingElement(g, 4, std::move(terms));
    }

    GroupRingElement nonzero_ring_element(const Group& g, const std::vector<GroupElement>& window,
                                          size_t max_terms) {
        while (true) {
            GroupRingElement f = ring_element(g, window, max_terms);
            if (!f.is_zero()) return f;
        }
    }

    CrossedProductElement crossed_element(const CrossedSystem& cs,
                                          const std::vector<GroupElement>& n_window,
                                          const std::vector<GroupElement>& h_window,
                                          size_t max_terms) {
        std::map<GroupElement, GroupRingElement::TermMap> grouped;
        size_t count = static_cast<size_t>(range(0, static_cast<long>(max_terms)));
        for (size_t i = 0; i < count; ++i) {
            CycScalar c = gaussian_grid_value();
            if (c.is_zero()) continue;
            grouped[pick(h_window)][pick(n_window)] = c;
        }
        CrossedProductElement::TermMap terms;
        for (auto& [h, coeffs] : grouped) {
            terms.emplace(h, GroupRingElement(cs.coefficient_group(), 4, std::move(coeffs)));
        }
        return CrossedProductElement(cs, std::move(terms));
    }

private:
    std::mt19937_64 gen_;
};

/// Independent numeric oracle: evaluate at zeta_q = exp(2*pi*i/q).
inline std::complex<double> numeric(const CycScalar& s) {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc{0.0, 0.0};
    for (size_t k = 0; k < s.coeffs().size(); ++k) {
        double c = mpq_get_d(s.coeffs()[k].get_mpq_t());
        double angle = two_pi * static_cast<double>(k) / static_cast<double>(s.order());
        acc += c * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

inline bool numerically_close(const std::complex<double>& a, const std::complex<double>& b,
                              double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace testsupport
