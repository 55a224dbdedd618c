#include "xring/group.hpp"

#include "xring/factor_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xring {

GroupElement GroupElement::vector_elem(std::vector<Int> coords) {
    GroupElement e;
    e.kind_ = Kind::FreeAbelian;
    e.coords_ = std::move(coords);
    return e;
}

GroupElement GroupElement::vector_elem(std::initializer_list<long> coords) {
    std::vector<Int> v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return vector_elem(std::move(v));
}

GroupElement GroupElement::cyclic_elem(Int residue) {
    GroupElement e;
    e.kind_ = Kind::Cyclic;
    e.residue_ = std::move(residue);
    return e;
}

GroupElement GroupElement::pair_elem(GroupElement normal, GroupElement quotient) {
    GroupElement e;
    e.kind_ = Kind::Pair;
    e.left_ = std::make_shared<const GroupElement>(std::move(normal));
    e.right_ = std::make_shared<const GroupElement>(std::move(quotient));
    return e;
}

const std::vector<Int>& GroupElement::coords() const {
    if (kind_ != Kind::FreeAbelian) {
        throw std::logic_error("GroupElement::coords on non-vector element");
    }
    return coords_;
}

const Int& GroupElement::residue() const {
    if (kind_ != Kind::Cyclic) {
        throw std::logic_error("GroupElement::residue on non-cyclic element");
    }
    return residue_;
}

const GroupElement& GroupElement::normal_part() const {
    if (kind_ != Kind::Pair) {
        throw std::logic_error("GroupElement::normal_part on non-pair element");
    }
    return *left_;
}

const GroupElement& GroupElement::quotient_part() const {
    if (kind_ != Kind::Pair) {
        throw std::logic_error("GroupElement::quotient_part on non-pair element");
    }
    return *right_;
}

int GroupElement::compare(const GroupElement& a, const GroupElement& b) {
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
    }
    switch (a.kind_) {
        case Kind::FreeAbelian: {
            if (a.coords_.size() != b.coords_.size()) {
                return a.coords_.size() < b.coords_.size() ? -1 : 1;
            }
            for (size_t i = 0; i < a.coords_.size(); ++i) {
                int c = cmp(a.coords_[i], b.coords_[i]);
                if (c != 0) return c;
            }
            return 0;
        }
        case Kind::Cyclic:
            return cmp(a.residue_, b.residue_);
        case Kind::Pair: {
            int c = compare(*a.left_, *b.left_);
            if (c != 0) return c;
            return compare(*a.right_, *b.right_);
        }
    }
    return 0;
}

struct Group::Node {
    Kind kind;
    size_t rank = 0;
    Int modulus;
    std::shared_ptr<const FactorSystem> fs;
};

Group::Group() : Group(free_abelian(0)) {}

Group Group::free_abelian(size_t rank) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::FreeAbelian;
    node->rank = rank;
    return Group(std::move(node));
}

Group Group::cyclic(Int modulus) {
    if (modulus < 1) {
        throw std::invalid_argument("cyclic group modulus must be >= 1");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Cyclic;
    node->modulus = std::move(modulus);
    return Group(std::move(node));
}

Group Group::extension(FactorSystem fs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Extension;
    node->fs = std::make_shared<const FactorSystem>(std::move(fs));
    return Group(std::move(node));
}

Group::Kind Group::kind() const { return node_->kind; }

size_t Group::rank() const {
    if (node_->kind != Kind::FreeAbelian) {
        throw std::logic_error("Group::rank on non-free-abelian group");
    }
    return node_->rank;
}

const Int& Group::modulus() const {
    if (node_->kind != Kind::Cyclic) {
        throw std::logic_error("Group::modulus on non-cyclic group");
    }
    return node_->modulus;
}

const FactorSystem& Group::factor_system() const {
    if (node_->kind != Kind::Extension) {
        throw std::logic_error("Group::factor_system on non-extension group");
    }
    return *node_->fs;
}

const Group& Group::normal_group() const { return factor_system().normal_group(); }

const Group& Group::quotient_group() const { return factor_system().quotient_group(); }

bool Group::torsion_free() const {
    switch (node_->kind) {
        case Kind::FreeAbelian:
            return true;
        case Kind::Cyclic:
            return node_->modulus == 1;
        case Kind::Extension:
            return normal_group().torsion_free() && quotient_group().torsion_free();
    }
    return false;
}

GroupElement Group::identity() const {
    switch (node_->kind) {
        case Kind::FreeAbelian:
            return GroupElement::vector_elem(std::vector<Int>(node_->rank, Int(0)));
        case Kind::Cyclic:
            return GroupElement::cyclic_elem(Int(0));
        case Kind::Extension:
            return GroupElement::pair_elem(normal_group().identity(), quotient_group().identity());
    }
    throw std::logic_error("unreachable");
}

GroupElement Group::reduced_cyclic(const Int& value) const {
    if (node_->kind != Kind::Cyclic) {
        throw std::logic_error("Group::reduced_cyclic on non-cyclic group");
    }
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), node_->modulus.get_mpz_t());
    return GroupElement::cyclic_elem(std::move(r));
}

bool Group::contains(const GroupElement& a) const {
    switch (node_->kind) {
        case Kind::FreeAbelian:
            return a.kind() == GroupElement::Kind::FreeAbelian && a.coords().size() == node_->rank;
        case Kind::Cyclic:
            return a.kind() == GroupElement::Kind::Cyclic && a.residue() >= 0 &&
                   a.residue() < node_->modulus;
        case Kind::Extension:
            return a.kind() == GroupElement::Kind::Pair &&
                   normal_group().contains(a.normal_part()) &&
                   quotient_group().contains(a.quotient_part());
    }
    return false;
}

namespace {

void require_member(const Group& g, const GroupElement& a, const char* op) {
    if (!g.contains(a)) {
        throw std::invalid_argument(std::string(op) + ": element does not belong to the group");
    }
}

}  // namespace

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
    require_member(*this, a, "mul");
    require_member(*this, b, "mul");
    switch (node_->kind) {
        case Kind::FreeAbelian: {
            std::vector<Int> out(node_->rank);
            for (size_t i = 0; i < node_->rank; ++i) out[i] = a.coords()[i] + b.coords()[i];
            return GroupElement::vector_elem(std::move(out));
        }
        case Kind::Cyclic:
            return reduced_cyclic(a.residue() + b.residue());
        case Kind::Extension: {
            // (n,h)(n',h') = (n * S(h)(n') * omega(h,h'), hh')
            const FactorSystem& fs = *node_->fs;
            const Group& n_grp = fs.normal_group();
            const Group& h_grp = fs.quotient_group();
            const GroupElement& h = a.quotient_part();
            const GroupElement& hp = b.quotient_part();
            GroupElement acted = fs.action(h).forward(b.normal_part());
            GroupElement n_out = n_grp.mul(n_grp.mul(a.normal_part(), acted), fs.cocycle(h, hp));
            return GroupElement::pair_elem(std::move(n_out), h_grp.mul(h, hp));
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement Group::inv(const GroupElement& a) const {
    require_member(*this, a, "inv");
    switch (node_->kind) {
        case Kind::FreeAbelian: {
            std::vector<Int> out(node_->rank);
            for (size_t i = 0; i < node_->rank; ++i) out[i] = -a.coords()[i];
            return GroupElement::vector_elem(std::move(out));
        }
        case Kind::Cyclic:
            return reduced_cyclic(-a.residue());
        case Kind::Extension: {
            // (n,h)^{-1} = (omega(h^{-1},h)^{-1} * S(h^{-1})(n^{-1}), h^{-1}),
            // solved from the extension multiplication rule.
            const FactorSystem& fs = *node_->fs;
            const Group& n_grp = fs.normal_group();
            const Group& h_grp = fs.quotient_group();
            GroupElement hinv = h_grp.inv(a.quotient_part());
            GroupElement omega_inv = n_grp.inv(fs.cocycle(hinv, a.quotient_part()));
            GroupElement acted = fs.action(hinv).forward(n_grp.inv(a.normal_part()));
            return GroupElement::pair_elem(n_grp.mul(omega_inv, acted), std::move(hinv));
        }
    }
    throw std::logic_error("unreachable");
}

bool same_group(const Group& a, const Group& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
        case Group::Kind::FreeAbelian:
            return a.node_->rank == b.node_->rank;
        case Group::Kind::Cyclic:
            return a.node_->modulus == b.node_->modulus;
        case Group::Kind::Extension:
            return same_factor_system(*a.node_->fs, *b.node_->fs);
    }
    return false;
}

namespace {

void fill_l1_ball(size_t dim, long radius, std::vector<Int>& current,
                  std::vector<GroupElement>& out) {
    if (dim == current.size()) {
        out.push_back(GroupElement::vector_elem(current));
        return;
    }
    for (long v = -radius; v <= radius; ++v) {
        current[dim] = v;
        long rest = radius - std::abs(v);
        fill_l1_ball(dim + 1, rest, current, out);
    }
}

}  // namespace

std::string debug_string(const GroupElement& e) {
    std::ostringstream os;
    switch (e.kind()) {
        case GroupElement::Kind::FreeAbelian: {
            os << "[";
            const auto& v = e.coords();
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) os << ",";
                os << v[i].get_str();
            }
            os << "]";
            break;
        }
        case GroupElement::Kind::Cyclic:
            os << e.residue().get_str();
            break;
        case GroupElement::Kind::Pair:
            os << "(" << debug_string(e.normal_part()) << ";" << debug_string(e.quotient_part())
               << ")";
            break;
    }
    return os.str();
}

std::vector<GroupElement> ball(const Group& g, long radius) {
    if (radius < 0) {
        throw std::invalid_argument("ball radius must be >= 0");
    }
    std::vector<GroupElement> out;
    switch (g.kind()) {
        case Group::Kind::FreeAbelian: {
            std::vector<Int> current(g.rank(), Int(0));
            fill_l1_ball(0, radius, current, out);
            break;
        }
        case Group::Kind::Cyclic: {
            if (g.modulus() <= 2 * radius + 1) {
                for (Int r = 0; r < g.modulus(); ++r) {
                    out.push_back(GroupElement::cyclic_elem(r));
                }
            } else {
                for (long k = -radius; k <= radius; ++k) {
                    out.push_back(g.reduced_cyclic(Int(k)));
                }
            }
            break;
        }
        case Group::Kind::Extension: {
            auto n_ball = ball(g.normal_group(), radius);
            auto h_ball = ball(g.quotient_group(), radius);
            for (const auto& n : n_ball) {
                for (const auto& h : h_ball) {
                    out.push_back(GroupElement::pair_elem(n, h));
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace xring
