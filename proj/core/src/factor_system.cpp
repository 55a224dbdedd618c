#include "xring/factor_system.hpp"

#include "descriptor_internal.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace xring {

namespace {

std::string render(const GroupElement& e) { return debug_string(e); }

Automorphism identity_automorphism() {
    auto id = [](const GroupElement& n) { return n; };
    return Automorphism{id, id};
}

// Memoized integer matrix powers; the action evaluation is the hot path of
// crossed-product multiplication.
struct MatrixPowerCache {
    IntMatrix base;
    mutable std::mutex mutex;
    mutable std::map<long, IntMatrix> powers;

    const IntMatrix& power(long k) const {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = powers.find(k);
        if (it == powers.end()) {
            it = powers.emplace(k, base.power(k)).first;
        }
        return it->second;
    }
};

}  // namespace

struct FactorSystem::Impl {
    Group n;
    Group h;
    Action action;
    Cocycle cocycle;
    std::string descriptor;
    bool central;

    Impl(Group n_, Group h_, Action action_, Cocycle cocycle_, std::string descriptor_,
         bool central_)
        : n(std::move(n_)),
          h(std::move(h_)),
          action(std::move(action_)),
          cocycle(std::move(cocycle_)),
          descriptor(std::move(descriptor_)),
          central(central_) {}
};

FactorSystem::FactorSystem(Group n, Group h, Action action, Cocycle cocycle,
                           std::string descriptor, bool central)
    : impl_(std::make_shared<const Impl>(std::move(n), std::move(h), std::move(action),
                                         std::move(cocycle), std::move(descriptor), central)) {}

const Group& FactorSystem::normal_group() const { return impl_->n; }
const Group& FactorSystem::quotient_group() const { return impl_->h; }

Automorphism FactorSystem::action(const GroupElement& h) const { return impl_->action(h); }

GroupElement FactorSystem::cocycle(const GroupElement& h, const GroupElement& hp) const {
    return impl_->cocycle(h, hp);
}

const std::string& FactorSystem::descriptor() const { return impl_->descriptor; }
bool FactorSystem::central() const { return impl_->central; }

bool same_factor_system(const FactorSystem& a, const FactorSystem& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.impl_->descriptor == "{\"kind\":\"derived\"}") return false;
    return a.impl_->descriptor == b.impl_->descriptor;
}

FactorSystem FactorSystem::trivial(const Group& n, const Group& h) {
    detail::ojson desc;
    desc["kind"] = "trivial";
    desc["n"] = detail::group_descriptor(n);
    desc["h"] = detail::group_descriptor(h);
    GroupElement e_n = n.identity();
    return FactorSystem(
        n, h, [](const GroupElement&) { return identity_automorphism(); },
        [e_n](const GroupElement&, const GroupElement&) { return e_n; }, desc.dump(),
        /*central=*/true);
}

FactorSystem FactorSystem::semidirect_z(const IntMatrix& action_matrix) {
    if (!action_matrix.is_square() || action_matrix.rows() == 0) {
        throw std::invalid_argument("semidirect action matrix must be square and non-empty");
    }
    Int det = action_matrix.determinant();
    if (det != 1 && det != -1) {
        throw std::invalid_argument("semidirect action matrix must be unimodular");
    }
    const size_t m = action_matrix.rows();
    Group n = Group::free_abelian(m);
    Group h = Group::free_abelian(1);
    auto cache = std::make_shared<MatrixPowerCache>();
    cache->base = action_matrix;

    detail::ojson desc;
    desc["kind"] = "semidirect";
    desc["matrix_action"] = detail::matrix_to_json(action_matrix);

    auto action = [cache](const GroupElement& h_elem) {
        long k = to_long(h_elem.coords().at(0));
        return Automorphism{
            [cache, k](const GroupElement& n_elem) {
                return GroupElement::vector_elem(cache->power(k).apply(n_elem.coords()));
            },
            [cache, k](const GroupElement& n_elem) {
                return GroupElement::vector_elem(cache->power(-k).apply(n_elem.coords()));
            }};
    };
    GroupElement e_n = n.identity();
    auto cocycle = [e_n](const GroupElement&, const GroupElement&) { return e_n; };
    return FactorSystem(n, h, std::move(action), std::move(cocycle), desc.dump(),
                        /*central=*/false);
}

FactorSystem FactorSystem::central_bilinear(const IntMatrix& b) {
    if (!b.is_square() || b.rows() == 0) {
        throw std::invalid_argument("central bilinear cocycle matrix must be square and non-empty");
    }
    Group n = Group::free_abelian(1);
    Group h = Group::free_abelian(b.rows());

    detail::ojson desc;
    desc["kind"] = "central_bilinear";
    desc["matrix"] = detail::matrix_to_json(b);

    auto cocycle = [b](const GroupElement& x, const GroupElement& y) {
        return GroupElement::vector_elem({b.bilinear(x.coords(), y.coords())});
    };
    return FactorSystem(n, h, [](const GroupElement&) { return identity_automorphism(); },
                        std::move(cocycle), desc.dump(), /*central=*/true);
}

FactorSystem FactorSystem::central_split(std::vector<Int> left, std::vector<Int> right) {
    if (left.size() != right.size() || left.empty()) {
        throw std::invalid_argument("central_split vectors must be non-empty and of equal length");
    }
    Group n = Group::free_abelian(1);
    Group h = Group::free_abelian(left.size());

    detail::ojson desc;
    desc["kind"] = "central_split";
    desc["left"] = detail::int_vector_to_json(left);
    desc["right"] = detail::int_vector_to_json(right);

    auto cocycle = [left, right](const GroupElement& x, const GroupElement& y) {
        Int value = 0;
        for (size_t i = 0; i < left.size(); ++i) {
            value += left[i] * x.coords().at(i) + right[i] * y.coords().at(i);
        }
        return GroupElement::vector_elem({value});
    };
    return FactorSystem(n, h, [](const GroupElement&) { return identity_automorphism(); },
                        std::move(cocycle), desc.dump(), /*central=*/true);
}

FactorSystem FactorSystem::heisenberg_semidirect() {
    return semidirect_z(IntMatrix({{Int(1), Int(0)}, {Int(1), Int(1)}}));
}

FactorSystem FactorSystem::heisenberg_central() {
    return central_bilinear(IntMatrix({{Int(0), Int(1)}, {Int(0), Int(0)}}));
}

Group heisenberg_semidirect() { return Group::extension(FactorSystem::heisenberg_semidirect()); }

Group heisenberg_central() { return Group::extension(FactorSystem::heisenberg_central()); }

ValidationWindow ValidationWindow::from_radius(const FactorSystem& fs, long quotient_radius,
                                               long normal_radius) {
    return ValidationWindow{ball(fs.quotient_group(), quotient_radius),
                            ball(fs.normal_group(), normal_radius)};
}

ValidationReport validate_factor_system(const FactorSystem& fs, const ValidationWindow& window) {
    if (window.quotient_elems.empty()) {
        throw std::invalid_argument("validate_factor_system: empty window");
    }
    ValidationReport report;
    const Group& n_grp = fs.normal_group();
    const Group& h_grp = fs.quotient_group();
    const GroupElement e_n = n_grp.identity();
    const GroupElement e_h = h_grp.identity();

    auto record = [&report](std::string identity, std::vector<GroupElement> at,
                            std::string detail) {
        report.violations.push_back({std::move(identity), std::move(at), std::move(detail)});
    };

    // Normalization: S(e) = id and omega(h, e) = omega(e, h) = e.
    {
        Automorphism s_e = fs.action(e_h);
        for (const auto& n : window.normal_elems) {
            ++report.checks_performed;
            GroupElement image = s_e.forward(n);
            if (image != n) {
                record("normalization: S(e) = id", {n},
                       "S(e)(" + render(n) + ") = " + render(image));
            }
        }
        for (const auto& h : window.quotient_elems) {
            ++report.checks_performed;
            GroupElement right = fs.cocycle(h, e_h);
            GroupElement left = fs.cocycle(e_h, h);
            if (right != e_n) {
                record("normalization: omega(h, e) = e", {h}, "omega = " + render(right));
            }
            if (left != e_n) {
                record("normalization: omega(e, h) = e", {h}, "omega = " + render(left));
            }
        }
    }

    // Each S(h) is an automorphism of N: lands in N, respects products,
    // and the declared inverse really inverts it.
    for (const auto& h : window.quotient_elems) {
        Automorphism s = fs.action(h);
        for (const auto& n : window.normal_elems) {
            ++report.checks_performed;
            GroupElement image = s.forward(n);
            if (!n_grp.contains(image)) {
                record("action image outside N", {h, n}, render(image));
                continue;
            }
            if (s.inverse(image) != n) {
                record("action inverse: S(h)^{-1} S(h) = id", {h, n},
                       "round trip gives " + render(s.inverse(image)));
            }
        }
        for (const auto& n1 : window.normal_elems) {
            for (const auto& n2 : window.normal_elems) {
                ++report.checks_performed;
                GroupElement lhs = s.forward(n_grp.mul(n1, n2));
                GroupElement rhs = n_grp.mul(s.forward(n1), s.forward(n2));
                if (lhs != rhs) {
                    record("action respects products", {h, n1, n2},
                           render(lhs) + " != " + render(rhs));
                }
            }
        }
    }

    // Cocycle values must land in N.
    for (const auto& h1 : window.quotient_elems) {
        for (const auto& h2 : window.quotient_elems) {
            ++report.checks_performed;
            GroupElement w = fs.cocycle(h1, h2);
            if (!n_grp.contains(w)) {
                record("cocycle value outside N", {h1, h2}, render(w));
            }
        }
    }

    // Action compatibility: S(h) S(h') = C_N(omega(h,h')) S(hh').
    for (const auto& h1 : window.quotient_elems) {
        Automorphism s1 = fs.action(h1);
        for (const auto& h2 : window.quotient_elems) {
            Automorphism s2 = fs.action(h2);
            GroupElement w = fs.cocycle(h1, h2);
            GroupElement w_inv = n_grp.inv(w);
            Automorphism s12 = fs.action(h_grp.mul(h1, h2));
            for (const auto& n : window.normal_elems) {
                ++report.checks_performed;
                GroupElement lhs = s1.forward(s2.forward(n));
                GroupElement rhs = n_grp.mul(n_grp.mul(w, s12.forward(n)), w_inv);
                if (lhs != rhs) {
                    record("action compatibility: S(h)S(h') = C(omega) S(hh')", {h1, h2, n},
                           render(lhs) + " != " + render(rhs));
                }
            }
        }
    }

    // Cocycle identity: omega(h,h') omega(hh',h'') = S(h)(omega(h',h'')) omega(h,h'h'').
    for (const auto& h1 : window.quotient_elems) {
        Automorphism s1 = fs.action(h1);
        for (const auto& h2 : window.quotient_elems) {
            GroupElement h12 = h_grp.mul(h1, h2);
            GroupElement w12 = fs.cocycle(h1, h2);
            for (const auto& h3 : window.quotient_elems) {
                ++report.checks_performed;
                GroupElement lhs = n_grp.mul(w12, fs.cocycle(h12, h3));
                GroupElement rhs = n_grp.mul(s1.forward(fs.cocycle(h2, h3)),
                                             fs.cocycle(h1, h_grp.mul(h2, h3)));
                if (lhs != rhs) {
                    record("cocycle identity", {h1, h2, h3}, render(lhs) + " != " + render(rhs));
                }
            }
        }
    }

    return report;
}

ExtensionData ExtensionData::from_extension_group(const Group& g) {
    if (g.kind() != Group::Kind::Extension) {
        throw std::invalid_argument("from_extension_group: group is not an extension group");
    }
    ExtensionData ext;
    ext.multiply = [g](const GroupElement& a, const GroupElement& b) { return g.mul(a, b); };
    ext.invert = [g](const GroupElement& a) { return g.inv(a); };
    ext.identity = g.identity();
    ext.normal = g.normal_group();
    ext.quotient = g.quotient_group();
    GroupElement e_h = g.quotient_group().identity();
    ext.embed_normal = [e_h](const GroupElement& n) { return GroupElement::pair_elem(n, e_h); };
    ext.restrict_normal = [e_h](const GroupElement& a) -> std::optional<GroupElement> {
        if (a.kind() != GroupElement::Kind::Pair || a.quotient_part() != e_h) return std::nullopt;
        return a.normal_part();
    };
    ext.project = [](const GroupElement& a) { return a.quotient_part(); };
    return ext;
}

ExtensionData ExtensionData::heisenberg_matrix() {
    ExtensionData ext;
    // [a, b, c] encodes the unitriangular matrix with entries a (1,2),
    // c (1,3), b (2,3); multiplication adds a and b and accumulates c.
    ext.multiply = [](const GroupElement& x, const GroupElement& y) {
        const auto& u = x.coords();
        const auto& v = y.coords();
        return GroupElement::vector_elem({u[0] + v[0], u[1] + v[1], u[2] + v[2] + u[0] * v[1]});
    };
    ext.invert = [](const GroupElement& x) {
        const auto& u = x.coords();
        return GroupElement::vector_elem({-u[0], -u[1], -u[2] + u[0] * u[1]});
    };
    ext.identity = GroupElement::vector_elem({0, 0, 0});
    ext.normal = Group::free_abelian(2);
    ext.quotient = Group::free_abelian(1);
    ext.embed_normal = [](const GroupElement& n) {
        return GroupElement::vector_elem({n.coords()[0], Int(0), -n.coords()[1]});
    };
    ext.restrict_normal = [](const GroupElement& g) -> std::optional<GroupElement> {
        const auto& u = g.coords();
        if (u[1] != 0) return std::nullopt;
        return GroupElement::vector_elem({u[0], -u[2]});
    };
    ext.project = [](const GroupElement& g) {
        return GroupElement::vector_elem({g.coords()[1]});
    };
    return ext;
}

FactorSystem derive_factor_system(const ExtensionData& ext,
                                  const std::function<GroupElement(const GroupElement&)>& sigma,
                                  const std::vector<GroupElement>& quotient_window) {
    const Group h_grp = ext.quotient;
    const GroupElement e_h = h_grp.identity();

    if (sigma(e_h) != ext.identity) {
        throw std::invalid_argument("derive_factor_system: section is not normalized");
    }
    for (const auto& h : quotient_window) {
        if (ext.project(sigma(h)) != h) {
            throw std::invalid_argument("derive_factor_system: section is not a right inverse of q");
        }
    }
    // Surface cocycle values outside N eagerly on the window.
    for (const auto& h1 : quotient_window) {
        for (const auto& h2 : quotient_window) {
            GroupElement g = ext.multiply(ext.multiply(sigma(h1), sigma(h2)),
                                          ext.invert(sigma(h_grp.mul(h1, h2))));
            if (!ext.restrict_normal(g)) {
                throw std::invalid_argument("derive_factor_system: cocycle value outside N");
            }
        }
    }

    auto action = [ext, sigma](const GroupElement& h) {
        GroupElement sig = sigma(h);
        GroupElement sig_inv = ext.invert(sig);
        auto conj_by = [ext](const GroupElement& left, const GroupElement& right) {
            return [ext, left, right](const GroupElement& n) {
                GroupElement image =
                    ext.multiply(ext.multiply(left, ext.embed_normal(n)), right);
                auto restricted = ext.restrict_normal(image);
                if (!restricted) {
                    throw std::domain_error("derived action image outside N");
                }
                return *restricted;
            };
        };
        return Automorphism{conj_by(sig, sig_inv), conj_by(sig_inv, sig)};
    };
    auto cocycle = [ext, sigma, h_grp](const GroupElement& h1, const GroupElement& h2) {
        GroupElement g = ext.multiply(ext.multiply(sigma(h1), sigma(h2)),
                                      ext.invert(sigma(h_grp.mul(h1, h2))));
        auto restricted = ext.restrict_normal(g);
        if (!restricted) {
            throw std::domain_error("derived cocycle value outside N");
        }
        return *restricted;
    };
    return FactorSystem(ext.normal, h_grp, std::move(action), std::move(cocycle),
                        "{\"kind\":\"derived\"}", /*central=*/false);
}

}  // namespace xring
