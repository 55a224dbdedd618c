#include "xring/cohomology.hpp"

#include "xring/factor_system.hpp"

#include <stdexcept>

namespace xring {

namespace {

// Enumerate the l^1 ball of Z^m as raw coordinate vectors.
std::vector<std::vector<Int>> coordinate_ball(size_t rank, long radius) {
    std::vector<std::vector<Int>> out;
    for (const auto& e : ball(Group::free_abelian(rank), radius)) {
        out.push_back(e.coords());
    }
    return out;
}

std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

}  // namespace

BilinearCocycle::BilinearCocycle(IntMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) {
        throw std::invalid_argument("BilinearCocycle: matrix must be square and non-empty");
    }
    // Trivial-action cocycle identity on a small window; holds identically
    // for bilinear forms, checked anyway.
    auto window = coordinate_ball(rank(), 1);
    for (const auto& x : window) {
        for (const auto& y : window) {
            for (const auto& z : window) {
                Int lhs = evaluate(x, y) + evaluate(add(x, y), z);
                Int rhs = evaluate(y, z) + evaluate(x, add(y, z));
                if (lhs != rhs) {
                    throw std::logic_error("BilinearCocycle: cocycle identity failed");
                }
            }
        }
    }
}

Int BilinearCocycle::evaluate(const std::vector<Int>& x, const std::vector<Int>& y) const {
    return matrix_.bilinear(x, y);
}

IntMatrix antisymmetrize(const BilinearCocycle& c) {
    return c.matrix() - c.matrix().transpose();
}

CoboundaryWitness::CoboundaryWitness(IntMatrix symmetric_difference)
    : diff_(std::move(symmetric_difference)) {
    if (diff_ != diff_.transpose()) {
        throw std::invalid_argument("CoboundaryWitness: difference matrix must be symmetric");
    }
}

Int CoboundaryWitness::evaluate(const std::vector<Int>& x) const {
    const size_t m = diff_.rows();
    Int q = 0;
    for (size_t i = 0; i < m; ++i) {
        // d_ii * C(x_i, 2) keeps the witness integer-valued.
        q += diff_.at(i, i) * (x[i] * (x[i] - 1)) / 2;
        for (size_t j = i + 1; j < m; ++j) {
            q += diff_.at(i, j) * x[i] * x[j];
        }
    }
    return -q;
}

bool CoboundaryWitness::verify(const BilinearCocycle& c1, const BilinearCocycle& c2,
                               long radius) const {
    auto window = coordinate_ball(diff_.rows(), radius);
    for (const auto& x : window) {
        for (const auto& y : window) {
            Int delta = evaluate(x) + evaluate(y) - evaluate(add(x, y));
            if (delta != c1.evaluate(x, y) - c2.evaluate(x, y)) return false;
        }
    }
    return true;
}

CohomologyAnswer is_cohomologous(const BilinearCocycle& c1, const BilinearCocycle& c2,
                                 long verify_radius) {
    if (c1.rank() != c2.rank()) {
        throw std::invalid_argument("is_cohomologous: rank mismatch");
    }
    CohomologyAnswer answer;
    if (antisymmetrize(c1) != antisymmetrize(c2)) {
        return answer;
    }
    CoboundaryWitness witness(c1.matrix() - c2.matrix());
    if (!witness.verify(c1, c2, verify_radius)) {
        throw std::logic_error("is_cohomologous: coboundary witness failed verification");
    }
    answer.cohomologous = true;
    answer.witness = std::move(witness);
    return answer;
}

Group extension_family(size_t rank, const IntMatrix& class_param) {
    if (class_param.rows() != rank || class_param.cols() != rank) {
        throw std::invalid_argument("extension_family: class parameter has wrong dimensions");
    }
    if (!class_param.is_antisymmetric()) {
        throw std::invalid_argument("extension_family: class parameter must be antisymmetric");
    }
    // Upper-triangular bilinear representative of the class.
    IntMatrix rep(rank, rank);
    for (size_t i = 0; i < rank; ++i) {
        for (size_t j = i + 1; j < rank; ++j) rep.at(i, j) = class_param.at(i, j);
    }
    FactorSystem fs = FactorSystem::central_bilinear(rep);
    ValidationReport report = validate_factor_system(fs, ValidationWindow::from_radius(fs, 2, 2));
    if (!report.passed()) {
        throw std::logic_error("extension_family: bilinear representative failed validation");
    }
    return Group::extension(std::move(fs));
}

}  // namespace xring
