#pragma once

#include "xring/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace xring {

class FactorSystem;

/// A canonical-form group element: an integer vector (free Abelian part),
/// a reduced residue (finite cyclic part), or a pair (n, h) of elements of
/// the building blocks of an extension group. Elements carry no reference
/// to their group; operations take the Group explicitly, so one value can
/// be reused across isomorphic groups. Equality and ordering are
/// structural on the canonical form.
class GroupElement {
public:
    enum class Kind { FreeAbelian, Cyclic, Pair };

    GroupElement() : kind_(Kind::FreeAbelian) {}

    static GroupElement vector_elem(std::vector<Int> coords);
    static GroupElement vector_elem(std::initializer_list<long> coords);
    static GroupElement cyclic_elem(Int residue);
    static GroupElement pair_elem(GroupElement normal, GroupElement quotient);

    Kind kind() const { return kind_; }
    const std::vector<Int>& coords() const;
    const Int& residue() const;
    const GroupElement& normal_part() const;
    const GroupElement& quotient_part() const;

    /// Total order on canonical forms (kind, then content, lexicographic).
    static int compare(const GroupElement& a, const GroupElement& b);

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return compare(a, b) == 0;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) {
        return compare(a, b) != 0;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return compare(a, b) < 0;
    }

private:
    Kind kind_;
    std::vector<Int> coords_;
    Int residue_;
    std::shared_ptr<const GroupElement> left_, right_;  // Pair components
};

/// One of the closed-form group families: Z^n, Z/m, or an extension group
/// N x_(S,omega) H built on a factor system. Groups are immutable values
/// (cheap to copy); all operations are pure.
class Group {
public:
    enum class Kind { FreeAbelian, Cyclic, Extension };

    /// The trivial group Z^0.
    Group();

    static Group free_abelian(size_t rank);
    static Group cyclic(Int modulus);
    static Group extension(FactorSystem fs);

    Kind kind() const;
    size_t rank() const;          // FreeAbelian
    const Int& modulus() const;   // Cyclic
    const FactorSystem& factor_system() const;  // Extension
    const Group& normal_group() const;          // Extension: N
    const Group& quotient_group() const;        // Extension: H

    /// Recorded sufficient condition only: true for Z^n and for extensions
    /// of torsion-free by torsion-free; false for Z/m with m > 1.
    bool torsion_free() const;

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    bool contains(const GroupElement& a) const;

    /// Canonical element of Z/m from any integer.
    GroupElement reduced_cyclic(const Int& value) const;

    friend bool same_group(const Group& a, const Group& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit Group(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
};

/// All elements of word length (l^1 norm) at most `radius` for Z^n; the
/// residues closest to 0 for Z/m; component-wise balls, paired, for
/// extension groups. Sorted canonically.
std::vector<GroupElement> ball(const Group& g, long radius);

/// Context-free rendering for diagnostics and reports: "[1,-2]", "3",
/// "([1,0];[2])". The group-aware file syntax lives in serialization.
std::string debug_string(const GroupElement& e);

}  // namespace xring
