#pragma once

#include "xring/crossed_product.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xring {

/// Default RNG seed for randomized oracle runs; echoed in every report so
/// runs are reproducible.
inline constexpr unsigned long kDefaultSeed = 1729;

/// A finite, fully enumerable space of group-ring or crossed-product
/// candidates: supports drawn from a fixed window of positions, nonzero
/// coefficients drawn from a fixed grid, at most max_support_size terms.
/// The candidate count is computable up front:
///   sum over s <= max of C(|window|, s) * |grid \ {0}|^s
/// (the s = 0 term being the zero element).
struct SearchSpace {
    std::optional<Group> group;            // candidates in C[group], or
    std::optional<CrossedSystem> crossed;  // candidates in C[N] x_(S,omega) H
    /// Positions: group elements for a group space; pair elements (n; h)
    /// for a crossed space, meaning the term delta_n d_h.
    std::vector<GroupElement> support_window;
    std::vector<CycScalar> coefficient_grid;
    size_t max_support_size = 1;
    unsigned long seed = kDefaultSeed;

    static SearchSpace for_group(Group g, std::vector<GroupElement> window,
                                 std::vector<CycScalar> grid, size_t max_support);
    static SearchSpace for_crossed(CrossedSystem cs, std::vector<GroupElement> window,
                                   std::vector<CycScalar> grid, size_t max_support);

    std::vector<CycScalar> nonzero_grid() const;
    Int candidate_count() const;
};

/// Outcome of an exhaustive search. Every witness embeds the recomputation
/// that certifies it, serialized; reports are deterministic for a given
/// space (the elapsed_ms field is a sidecar excluded from the canonical
/// serialization).
struct SearchReport {
    std::string kind;  // "zero_divisor" | "unit" | "idempotent"
    struct Witness {
        std::string lhs;             // serialized candidate
        std::string rhs;             // partner candidate ("" for idempotents)
        std::string recheck;         // serialized recomputation backing the claim
        std::string classification;  // units/idempotents: trivial, homogeneous, ...
    };
    Int candidate_count;
    Int nonzero_candidate_count;
    std::vector<Witness> witnesses;
    std::string verdict;
    long elapsed_ms = 0;

    bool all_classified(const std::string& cls) const;
};

/// Enumerates ordered pairs (f, g) of nonzero candidates and reports every
/// pair with f * g = 0. An empty report certifies the window contains no
/// zero divisors.
SearchReport zero_divisor_search(const SearchSpace& space);

/// Enumerates pairs with f * g = g * f = identity and classifies each unit
/// found: trivial (scalar multiple of a group element) for group rings,
/// homogeneous for crossed products.
SearchReport unit_search(const SearchSpace& space);

/// Enumerates candidates with f * f = f, flagging non-trivial idempotents
/// (neither 0 nor the identity).
SearchReport idempotent_search(const SearchSpace& space);

/// The 3x3 upper-unitriangular integer matrix model of the Heisenberg
/// group; the independent cross-check target for both extension presets.
struct UpperTriangular {
    Int a, b, c;  // rows (1 a c / 0 1 b / 0 0 1)

    static UpperTriangular identity() { return {0, 0, 0}; }
    friend UpperTriangular operator*(const UpperTriangular& x, const UpperTriangular& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
    }
    UpperTriangular inverse() const { return {-a, -b, -c + a * b}; }
    friend bool operator==(const UpperTriangular& x, const UpperTriangular& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

/// The documented correspondences onto the matrix model.
/// Semidirect preset: ((m,n); k) -> (a=m, b=k, c=mk-n).
UpperTriangular heisenberg_matrix_image_semidirect(const GroupElement& e);
/// Central preset: (z; (k,k')) -> (a=k, b=k', c=z).
UpperTriangular heisenberg_matrix_image_central(const GroupElement& e);

struct MatrixOracleReport {
    size_t words_checked = 0;
    unsigned long seed = kDefaultSeed;
    struct Mismatch {
        std::string preset;
        std::string word;  // letters a, b, c, A, B, C (capitals = inverses)
    };
    std::vector<Mismatch> mismatches;
    bool passed() const { return mismatches.empty(); }
};

/// Multiplies `count` random generator words per Heisenberg preset both
/// abstractly and in the matrix model and reports every disagreement.
MatrixOracleReport matrix_oracle_check(size_t count, unsigned long seed);

using GeneratorMap = std::vector<std::pair<GroupElement, GroupElement>>;

struct IsoReport {
    size_t ball_size = 0;
    struct Violation {
        std::string check;  // "well-defined" | "product" | "injectivity"
        std::vector<GroupElement> at;
    };
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

/// Extends gen_map multiplicatively over the Cayley ball of the given
/// radius in G1 and verifies the induced map is well defined, preserves
/// all in-ball products, and is injective on the ball. Throws
/// std::invalid_argument if a generator image lies outside G2.
IsoReport group_iso_check(const Group& g1, const Group& g2, const GeneratorMap& gen_map,
                          long radius);

}  // namespace xring
