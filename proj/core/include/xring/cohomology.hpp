#pragma once

#include "xring/group.hpp"
#include "xring/int_matrix.hpp"

#include <optional>
#include <vector>

namespace xring {

/// An integer-valued bilinear 2-cocycle beta(x, y) = x^T B y on Z^m with
/// trivial action. Bilinearity makes the cocycle identity automatic; the
/// constructor still machine-checks it on a small window.
class BilinearCocycle {
public:
    explicit BilinearCocycle(IntMatrix matrix);

    size_t rank() const { return matrix_.rows(); }
    const IntMatrix& matrix() const { return matrix_; }

    Int evaluate(const std::vector<Int>& x, const std::vector<Int>& y) const;

private:
    IntMatrix matrix_;
};

/// B - B^T; the cohomology class of a bilinear cocycle is determined by
/// this antisymmetrization.
IntMatrix antisymmetrize(const BilinearCocycle& c);

/// An integer coboundary witness b with
/// b(x) + b(y) - b(x+y) = (c1 - c2)(x, y), built from binomial-coefficient
/// quadratics: b(x) = -(sum_i d_ii C(x_i,2) + sum_{i<j} d_ij x_i x_j) for
/// the symmetric difference D = B1 - B2.
class CoboundaryWitness {
public:
    explicit CoboundaryWitness(IntMatrix symmetric_difference);

    Int evaluate(const std::vector<Int>& x) const;
    const IntMatrix& symmetric_difference() const { return diff_; }

    /// delta b(x,y) = b(x) + b(y) - b(x+y) equals target(x,y) on the l^1
    /// ball of the given radius.
    bool verify(const BilinearCocycle& c1, const BilinearCocycle& c2, long radius) const;

private:
    IntMatrix diff_;
};

struct CohomologyAnswer {
    bool cohomologous = false;
    std::optional<CoboundaryWitness> witness;  // present iff cohomologous
};

/// Equality of antisymmetrizations, with a window-verified coboundary
/// witness on every positive answer. Throws std::invalid_argument on rank
/// mismatch and std::logic_error if a witness fails its own verification.
CohomologyAnswer is_cohomologous(const BilinearCocycle& c1, const BilinearCocycle& c2,
                                 long verify_radius = 3);

/// The central extension of Z by Z^m attached to an antisymmetric class
/// parameter: the upper triangle of the class is used as the bilinear
/// representative. Validated on a small window before being returned.
Group extension_family(size_t rank, const IntMatrix& class_param);

}  // namespace xring
