#include "xring/oracles.hpp"

#include "xring/serialization.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace xring {

SearchSpace SearchSpace::for_group(Group g, std::vector<GroupElement> window,
                                   std::vector<CycScalar> grid, size_t max_support) {
    SearchSpace space;
    space.group = std::move(g);
    space.support_window = std::move(window);
    space.coefficient_grid = std::move(grid);
    space.max_support_size = max_support;
    std::sort(space.support_window.begin(), space.support_window.end());
    space.support_window.erase(
        std::unique(space.support_window.begin(), space.support_window.end()),
        space.support_window.end());
    for (const auto& pos : space.support_window) {
        if (!space.group->contains(pos)) {
            throw std::invalid_argument("SearchSpace: window position outside the group");
        }
    }
    return space;
}

SearchSpace SearchSpace::for_crossed(CrossedSystem cs, std::vector<GroupElement> window,
                                     std::vector<CycScalar> grid, size_t max_support) {
    SearchSpace space;
    space.crossed = std::move(cs);
    space.support_window = std::move(window);
    space.coefficient_grid = std::move(grid);
    space.max_support_size = max_support;
    std::sort(space.support_window.begin(), space.support_window.end());
    space.support_window.erase(
        std::unique(space.support_window.begin(), space.support_window.end()),
        space.support_window.end());
    for (const auto& pos : space.support_window) {
        if (pos.kind() != GroupElement::Kind::Pair ||
            !space.crossed->coefficient_group().contains(pos.normal_part()) ||
            !space.crossed->quotient_group().contains(pos.quotient_part())) {
            throw std::invalid_argument(
                "SearchSpace: crossed window positions must be (n; h) pairs over N and H");
        }
    }
    return space;
}

std::vector<CycScalar> SearchSpace::nonzero_grid() const {
    unsigned order = 1;
    for (const auto& c : coefficient_grid) order = lcm_order(order, c.order());
    std::vector<CycScalar> out;
    for (const auto& c : coefficient_grid) {
        if (!c.is_zero()) out.push_back(c.converted(order));
    }
    return out;
}

Int SearchSpace::candidate_count() const {
    const size_t positions = support_window.size();
    const size_t values = nonzero_grid().size();
    Int total = 0;
    for (size_t s = 0; s <= std::min(max_support_size, positions); ++s) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), positions, s);
        Int powed;
        mpz_ui_pow_ui(powed.get_mpz_t(), values, s);
        total += binom * powed;
    }
    return total;
}

namespace {

// ---------------------------------------------------------------------
// Candidate enumeration. Candidates are generated in a fixed canonical
// order: support size ascending, support subsets lexicographic by window
// index, coefficient assignments as an odometer over the nonzero grid
// (first position slowest). Index 0 is the zero element.
// ---------------------------------------------------------------------

struct RawCandidate {
    std::vector<std::pair<size_t, size_t>> assignment;  // (position index, grid index)
    size_t leading = 0;  // bucket: first support position (0 for the zero element)
};

std::vector<RawCandidate> enumerate_raw(size_t positions, size_t values, size_t max_support) {
    std::vector<RawCandidate> out;
    out.push_back(RawCandidate{});  // the zero element
    if (values == 0) return out;
    std::vector<size_t> subset;
    auto emit_assignments = [&](const std::vector<size_t>& chosen) {
        std::vector<size_t> odo(chosen.size(), 0);
        while (true) {
            RawCandidate cand;
            cand.leading = chosen.front();
            cand.assignment.reserve(chosen.size());
            for (size_t i = 0; i < chosen.size(); ++i) {
                cand.assignment.emplace_back(chosen[i], odo[i]);
            }
            out.push_back(std::move(cand));
            size_t i = odo.size();
            while (i > 0) {
                --i;
                if (++odo[i] < values) break;
                odo[i] = 0;
                if (i == 0) return;
            }
        }
    };
    std::function<void(size_t, size_t)> choose = [&](size_t start, size_t remaining) {
        if (remaining == 0) {
            emit_assignments(subset);
            return;
        }
        for (size_t p = start; p + remaining <= positions; ++p) {
            subset.push_back(p);
            choose(p + 1, remaining - 1);
            subset.pop_back();
        }
    };
    for (size_t s = 1; s <= std::min(max_support, positions); ++s) {
        choose(0, s);
    }
    return out;
}

struct MaterializedSpace {
    unsigned scalar_order = kDefaultScalarOrder;
    std::vector<CycScalar> grid;  // nonzero, at scalar_order
    std::vector<RawCandidate> raw;
    std::vector<GroupRingElement> ring;       // group spaces
    std::vector<CrossedProductElement> cp;    // crossed spaces
    bool is_crossed = false;
};

MaterializedSpace materialize(const SearchSpace& space) {
    MaterializedSpace m;
    m.grid = space.nonzero_grid();
    if (!m.grid.empty()) m.scalar_order = m.grid.front().order();
    m.raw = enumerate_raw(space.support_window.size(), m.grid.size(), space.max_support_size);
    m.is_crossed = space.crossed.has_value();
    if (m.is_crossed) {
        const CrossedSystem& cs = *space.crossed;
        const Group& n_grp = cs.coefficient_group();
        m.cp.reserve(m.raw.size());
        for (const auto& cand : m.raw) {
            std::map<GroupElement, GroupRingElement::TermMap> grouped;
            for (const auto& [pos, value] : cand.assignment) {
                const GroupElement& position = space.support_window[pos];
                grouped[position.quotient_part()].emplace(position.normal_part(), m.grid[value]);
            }
            CrossedProductElement::TermMap terms;
            for (auto& [h, coeffs] : grouped) {
                terms.emplace(h, GroupRingElement(n_grp, m.scalar_order, std::move(coeffs)));
            }
            m.cp.emplace_back(cs, std::move(terms));
        }
    } else {
        const Group& grp = *space.group;
        m.ring.reserve(m.raw.size());
        for (const auto& cand : m.raw) {
            GroupRingElement::TermMap terms;
            for (const auto& [pos, value] : cand.assignment) {
                terms.emplace(space.support_window[pos], m.grid[value]);
            }
            m.ring.emplace_back(grp, m.scalar_order, std::move(terms));
        }
    }
    return m;
}

// ---------------------------------------------------------------------
// Early-exit product comparison. The product is evaluated one output
// degree at a time in canonical order; the first component differing from
// the expected value aborts the remaining work. Exact arithmetic, same
// multiplication rule as operator*.
// ---------------------------------------------------------------------

bool ring_product_equals(const GroupRingElement& x, const GroupRingElement& y,
                         const GroupRingElement* expected) {
    const Group& grp = x.group();
    struct Contribution {
        GroupElement key;
        const CycScalar* a;
        const CycScalar* b;
    };
    std::vector<Contribution> contribs;
    contribs.reserve(x.support_size() * y.support_size());
    for (const auto& [ga, ca] : x.terms()) {
        for (const auto& [gb, cb] : y.terms()) {
            contribs.push_back({grp.mul(ga, gb), &ca, &cb});
        }
    }
    std::sort(contribs.begin(), contribs.end(),
              [](const Contribution& l, const Contribution& r) { return l.key < r.key; });
    size_t matched = 0;
    size_t i = 0;
    while (i < contribs.size()) {
        size_t j = i;
        CycScalar acc = (*contribs[i].a) * (*contribs[i].b);
        for (++j; j < contribs.size() && contribs[j].key == contribs[i].key; ++j) {
            acc = acc + (*contribs[j].a) * (*contribs[j].b);
        }
        if (expected) {
            if (acc != expected->coefficient(contribs[i].key)) return false;
            if (!acc.is_zero()) ++matched;
        } else if (!acc.is_zero()) {
            return false;
        }
        i = j;
    }
    return expected ? matched == expected->support_size() : true;
}

bool crossed_product_equals(const CrossedProductElement& x, const CrossedProductElement& y,
                            const CrossedProductElement* expected) {
    const CrossedSystem& cs = x.system();
    const Group& h_grp = cs.quotient_group();
    struct Contribution {
        GroupElement key;
        const GroupElement* h;
        const GroupRingElement* f;
        const GroupElement* hp;
        const GroupRingElement* fp;
    };
    std::vector<Contribution> contribs;
    contribs.reserve(x.support_size() * y.support_size());
    for (const auto& [h, f] : x.terms()) {
        for (const auto& [hp, fp] : y.terms()) {
            contribs.push_back({h_grp.mul(h, hp), &h, &f, &hp, &fp});
        }
    }
    std::sort(contribs.begin(), contribs.end(),
              [](const Contribution& l, const Contribution& r) { return l.key < r.key; });
    size_t matched = 0;
    size_t i = 0;
    while (i < contribs.size()) {
        size_t j = i;
        GroupRingElement acc = homogeneous_product_coefficient(cs, *contribs[i].f, *contribs[i].h,
                                                               *contribs[i].fp, *contribs[i].hp);
        for (++j; j < contribs.size() && contribs[j].key == contribs[i].key; ++j) {
            acc = acc + homogeneous_product_coefficient(cs, *contribs[j].f, *contribs[j].h,
                                                        *contribs[j].fp, *contribs[j].hp);
        }
        if (expected) {
            if (acc != expected->coefficient(contribs[i].key)) return false;
            if (!acc.is_zero()) ++matched;
        } else if (!acc.is_zero()) {
            return false;
        }
        i = j;
    }
    return expected ? matched == expected->support_size() : true;
}

// Partition outer candidates by leading support element; workers pull
// buckets from a shared counter and the merge walks buckets in order, so
// the report does not depend on scheduling or worker count.
template <typename PerBucket>
void run_buckets(size_t bucket_count, PerBucket&& per_bucket) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 8u);
    if (workers <= 1 || bucket_count <= 1) {
        for (size_t b = 0; b < bucket_count; ++b) per_bucket(b);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (size_t b = next.fetch_add(1); b < bucket_count; b = next.fetch_add(1)) {
                per_bucket(b);
            }
        });
    }
    for (auto& t : pool) t.join();
}

std::string serialize_candidate(const MaterializedSpace& m, size_t index) {
    return m.is_crossed ? crossed_element_to_json(m.cp[index])
                        : ring_element_to_json(m.ring[index]);
}

long elapsed_since(const std::chrono::steady_clock::time_point& start) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count());
}

}  // namespace

bool SearchReport::all_classified(const std::string& cls) const {
    for (const auto& w : witnesses) {
        if (w.classification != cls) return false;
    }
    return true;
}

SearchReport zero_divisor_search(const SearchSpace& space) {
    const auto start = std::chrono::steady_clock::now();
    MaterializedSpace m = materialize(space);
    const size_t total = m.raw.size();

    SearchReport report;
    report.kind = "zero_divisor";
    report.candidate_count = space.candidate_count();
    report.nonzero_candidate_count = report.candidate_count - 1;

    const size_t buckets = std::max<size_t>(1, space.support_window.size());
    std::vector<std::vector<SearchReport::Witness>> found(buckets);
    run_buckets(buckets, [&](size_t bucket) {
        for (size_t i = 1; i < total; ++i) {
            if (m.raw[i].leading != bucket) continue;
            for (size_t j = 1; j < total; ++j) {
                bool zero = m.is_crossed ? crossed_product_equals(m.cp[i], m.cp[j], nullptr)
                                         : ring_product_equals(m.ring[i], m.ring[j], nullptr);
                if (zero) {
                    SearchReport::Witness w;
                    w.lhs = serialize_candidate(m, i);
                    w.rhs = serialize_candidate(m, j);
                    w.recheck = m.is_crossed ? crossed_element_to_json(m.cp[i] * m.cp[j])
                                             : ring_element_to_json(m.ring[i] * m.ring[j]);
                    found[bucket].push_back(std::move(w));
                }
            }
        }
    });
    for (auto& bucket : found) {
        for (auto& w : bucket) report.witnesses.push_back(std::move(w));
    }
    report.verdict = report.witnesses.empty() ? "no_zero_divisors_in_window" : "zero_divisors_found";
    report.elapsed_ms = elapsed_since(start);
    return report;
}

SearchReport unit_search(const SearchSpace& space) {
    const auto start = std::chrono::steady_clock::now();
    MaterializedSpace m = materialize(space);
    const size_t total = m.raw.size();

    SearchReport report;
    report.kind = "unit";
    report.candidate_count = space.candidate_count();
    report.nonzero_candidate_count = report.candidate_count - 1;

    std::optional<GroupRingElement> ring_one;
    std::optional<CrossedProductElement> cp_one;
    if (m.is_crossed) {
        cp_one = CrossedProductElement::identity(*space.crossed, m.scalar_order);
    } else {
        ring_one = GroupRingElement::identity(*space.group, m.scalar_order);
    }

    const size_t buckets = std::max<size_t>(1, space.support_window.size());
    std::vector<std::vector<SearchReport::Witness>> found(buckets);
    run_buckets(buckets, [&](size_t bucket) {
        for (size_t i = 1; i < total; ++i) {
            if (m.raw[i].leading != bucket) continue;
            for (size_t j = 1; j < total; ++j) {
                bool is_unit =
                    m.is_crossed
                        ? (crossed_product_equals(m.cp[i], m.cp[j], &*cp_one) &&
                           crossed_product_equals(m.cp[j], m.cp[i], &*cp_one))
                        : (ring_product_equals(m.ring[i], m.ring[j], &*ring_one) &&
                           ring_product_equals(m.ring[j], m.ring[i], &*ring_one));
                if (!is_unit) continue;
                SearchReport::Witness w;
                w.lhs = serialize_candidate(m, i);
                w.rhs = serialize_candidate(m, j);
                if (m.is_crossed) {
                    w.classification =
                        homogeneous_part(m.cp[i]) ? "homogeneous" : "non_homogeneous";
                    w.recheck = "{\"left\":" + crossed_element_to_json(m.cp[j] * m.cp[i]) +
                                ",\"right\":" + crossed_element_to_json(m.cp[i] * m.cp[j]) + "}";
                } else {
                    w.classification = trivial_unit(m.ring[i]) ? "trivial" : "non_trivial";
                    w.recheck = "{\"left\":" + ring_element_to_json(m.ring[j] * m.ring[i]) +
                                ",\"right\":" + ring_element_to_json(m.ring[i] * m.ring[j]) + "}";
                }
                found[bucket].push_back(std::move(w));
                break;  // inverses are unique
            }
        }
    });
    for (auto& bucket : found) {
        for (auto& w : bucket) report.witnesses.push_back(std::move(w));
    }
    const char* good = m.is_crossed ? "homogeneous" : "trivial";
    if (report.witnesses.empty()) {
        report.verdict = "no_units_in_window";
    } else if (report.all_classified(good)) {
        report.verdict = m.is_crossed ? "all_units_homogeneous" : "all_units_trivial";
    } else {
        report.verdict = m.is_crossed ? "non_homogeneous_unit_found" : "non_trivial_unit_found";
    }
    report.elapsed_ms = elapsed_since(start);
    return report;
}

SearchReport idempotent_search(const SearchSpace& space) {
    const auto start = std::chrono::steady_clock::now();
    MaterializedSpace m = materialize(space);
    const size_t total = m.raw.size();

    SearchReport report;
    report.kind = "idempotent";
    report.candidate_count = space.candidate_count();
    report.nonzero_candidate_count = report.candidate_count - 1;

    std::optional<GroupRingElement> ring_one;
    std::optional<CrossedProductElement> cp_one;
    if (m.is_crossed) {
        cp_one = CrossedProductElement::identity(*space.crossed, m.scalar_order);
    } else {
        ring_one = GroupRingElement::identity(*space.group, m.scalar_order);
    }

    const size_t buckets = std::max<size_t>(1, space.support_window.size());
    std::vector<std::vector<SearchReport::Witness>> found(buckets);
    run_buckets(buckets, [&](size_t bucket) {
        for (size_t i = 0; i < total; ++i) {
            size_t candidate_bucket = (i == 0) ? 0 : m.raw[i].leading;
            if (candidate_bucket != bucket) continue;
            bool idem = m.is_crossed ? crossed_product_equals(m.cp[i], m.cp[i], &m.cp[i])
                                     : ring_product_equals(m.ring[i], m.ring[i], &m.ring[i]);
            if (!idem) continue;
            bool trivial = m.is_crossed
                               ? (m.cp[i].is_zero() || m.cp[i] == *cp_one)
                               : (m.ring[i].is_zero() || m.ring[i] == *ring_one);
            SearchReport::Witness w;
            w.lhs = serialize_candidate(m, i);
            w.recheck = m.is_crossed ? crossed_element_to_json(m.cp[i] * m.cp[i])
                                     : ring_element_to_json(m.ring[i] * m.ring[i]);
            w.classification = trivial ? "trivial" : "non_trivial";
            found[bucket].push_back(std::move(w));
        }
    });
    for (auto& bucket : found) {
        for (auto& w : bucket) report.witnesses.push_back(std::move(w));
    }
    report.verdict = report.all_classified("trivial") ? "only_trivial_idempotents"
                                                      : "non_trivial_idempotent_found";
    report.elapsed_ms = elapsed_since(start);
    return report;
}

UpperTriangular heisenberg_matrix_image_semidirect(const GroupElement& e) {
    const Int& m = e.normal_part().coords()[0];
    const Int& n = e.normal_part().coords()[1];
    const Int& k = e.quotient_part().coords()[0];
    return {m, k, m * k - n};
}

UpperTriangular heisenberg_matrix_image_central(const GroupElement& e) {
    const Int& z = e.normal_part().coords()[0];
    const Int& k = e.quotient_part().coords()[0];
    const Int& kp = e.quotient_part().coords()[1];
    return {k, kp, z};
}

MatrixOracleReport matrix_oracle_check(size_t count, unsigned long seed) {
    MatrixOracleReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);

    struct Preset {
        std::string name;
        Group group;
        std::vector<GroupElement> gens;  // a, b, c and inverses
        UpperTriangular (*image)(const GroupElement&);
    };

    Group sd = heisenberg_semidirect();
    Group ce = heisenberg_central();
    auto pair2 = [](long m, long n, long k) {
        return GroupElement::pair_elem(GroupElement::vector_elem({m, n}),
                                       GroupElement::vector_elem({k}));
    };
    auto pair1 = [](long z, long k, long kp) {
        return GroupElement::pair_elem(GroupElement::vector_elem({z}),
                                       GroupElement::vector_elem({k, kp}));
    };
    std::vector<Preset> presets;
    {
        // a, b, c = [a, b]; capitals are the inverses.
        std::vector<GroupElement> gens = {pair2(1, 0, 0), pair2(0, 0, 1), pair2(0, -1, 0)};
        for (int i = 0; i < 3; ++i) gens.push_back(sd.inv(gens[i]));
        presets.push_back({"semidirect", sd, gens, &heisenberg_matrix_image_semidirect});
    }
    {
        std::vector<GroupElement> gens = {pair1(0, 1, 0), pair1(0, 0, 1), pair1(1, 0, 0)};
        for (int i = 0; i < 3; ++i) gens.push_back(ce.inv(gens[i]));
        presets.push_back({"central", ce, gens, &heisenberg_matrix_image_central});
    }

    static const char letters[] = {'a', 'b', 'c', 'A', 'B', 'C'};
    size_t remaining = count;
    for (size_t p = 0; p < presets.size(); ++p) {
        const Preset& preset = presets[p];
        size_t quota = (p + 1 == presets.size()) ? remaining : count / presets.size();
        remaining -= quota;
        std::vector<UpperTriangular> images;
        images.reserve(preset.gens.size());
        for (const auto& g : preset.gens) images.push_back(preset.image(g));
        for (size_t w = 0; w < quota; ++w) {
            size_t length = 1 + static_cast<size_t>(rng() % 12);
            GroupElement abstract = preset.group.identity();
            UpperTriangular matrix = UpperTriangular::identity();
            std::string word;
            for (size_t l = 0; l < length; ++l) {
                size_t g = static_cast<size_t>(rng() % preset.gens.size());
                abstract = preset.group.mul(abstract, preset.gens[g]);
                matrix = matrix * images[g];
                word.push_back(letters[g]);
            }
            ++report.words_checked;
            if (!(preset.image(abstract) == matrix)) {
                report.mismatches.push_back({preset.name, word});
            }
        }
    }
    return report;
}

IsoReport group_iso_check(const Group& g1, const Group& g2, const GeneratorMap& gen_map,
                          long radius) {
    for (const auto& [gen, image] : gen_map) {
        if (!g1.contains(gen)) {
            throw std::invalid_argument("group_iso_check: generator outside the source group");
        }
        if (!g2.contains(image)) {
            throw std::invalid_argument("group_iso_check: generator image outside the target group");
        }
    }
    IsoReport report;
    GeneratorMap steps = gen_map;
    for (const auto& [gen, image] : gen_map) {
        steps.emplace_back(g1.inv(gen), g2.inv(image));
    }

    // Grow the Cayley ball, propagating images; a revisited element whose
    // propagated image disagrees witnesses a broken relation.
    std::map<GroupElement, GroupElement> phi;
    phi.emplace(g1.identity(), g2.identity());
    std::vector<GroupElement> frontier = {g1.identity()};
    for (long r = 0; r < radius; ++r) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier) {
            const GroupElement& fx = phi.at(x);
            for (const auto& [s, t] : steps) {
                GroupElement y = g1.mul(x, s);
                GroupElement fy = g2.mul(fx, t);
                auto it = phi.find(y);
                if (it == phi.end()) {
                    phi.emplace(y, std::move(fy));
                    next.push_back(std::move(y));
                } else if (it->second != fy) {
                    report.violations.push_back({"well-defined", {x, s}});
                }
            }
        }
        frontier = std::move(next);
    }
    report.ball_size = phi.size();

    // Product preservation on all in-ball pairs whose product is in the ball.
    for (const auto& [x, fx] : phi) {
        for (const auto& [y, fy] : phi) {
            GroupElement xy = g1.mul(x, y);
            auto it = phi.find(xy);
            if (it == phi.end()) continue;
            if (it->second != g2.mul(fx, fy)) {
                report.violations.push_back({"product", {x, y}});
            }
        }
    }

    // Injectivity on the ball.
    std::map<GroupElement, const GroupElement*> preimages;
    for (const auto& [x, fx] : phi) {
        auto [it, inserted] = preimages.emplace(fx, &x);
        if (!inserted) {
            report.violations.push_back({"injectivity", {*it->second, x}});
        }
    }
    return report;
}

}  // namespace xring
