// Command-line front end: parse element / factor-system / character files,
// run the algebra operations and the verification searches, emit JSON
// reports.
//
// Exit codes: 0 = success / verified, 1 = violations or failed
// certification (witnesses in the report), 2 = malformed input.

#include "CLI11.hpp"
#include "json.hpp"

#include "xring/cohomology.hpp"
#include "xring/crossed_product.hpp"
#include "xring/fibers.hpp"
#include "xring/oracles.hpp"
#include "xring/serialization.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace {

using namespace xring;
using ojson = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

FactorSystem load_factor_system(const std::string& arg) {
    if (arg == "heisenberg_semidirect") return FactorSystem::heisenberg_semidirect();
    if (arg == "heisenberg_central") return FactorSystem::heisenberg_central();
    return factor_system_from_json(read_file(arg));
}

Group load_group(const std::string& arg) {
    if (arg == "z") return Group::free_abelian(1);
    if (arg == "z2") return Group::free_abelian(2);
    if (arg == "z3") return Group::free_abelian(3);
    if (arg.rfind("zmod", 0) == 0) return Group::cyclic(Int(arg.substr(4)));
    if (arg == "heisenberg_semidirect" || arg == "heisenberg_central") {
        return Group::extension(load_factor_system(arg));
    }
    return group_from_json(read_file(arg));
}

std::vector<CycScalar> load_grid(const std::string& arg) {
    if (arg == "rational") {
        return {CycScalar::from_int(-1), CycScalar::from_rational(make_rational(-1, 2), 4),
                CycScalar::zero(4), CycScalar::from_rational(make_rational(1, 2), 4),
                CycScalar::from_int(1)};
    }
    if (arg == "gaussian") {
        return {CycScalar::zero(4), CycScalar::from_int(1), CycScalar::from_int(-1),
                CycScalar::root_of_unity(4, 1), -CycScalar::root_of_unity(4, 1)};
    }
    if (arg == "gaussian-half") {
        return {CycScalar::zero(4),
                CycScalar::from_int(1),
                CycScalar::from_int(-1),
                CycScalar::root_of_unity(4, 1),
                -CycScalar::root_of_unity(4, 1),
                CycScalar::from_rational(make_rational(1, 2), 4),
                CycScalar::from_rational(make_rational(-1, 2), 4)};
    }
    ojson parsed = ojson::parse(read_file(arg));
    if (!parsed.is_array()) {
        throw InputError("grid file must hold a JSON array of scalars");
    }
    std::vector<CycScalar> grid;
    for (const auto& entry : parsed) grid.push_back(scalar_from_json(entry.dump()));
    return grid;
}

// Element files: a group-ring element carries "group", a crossed-product
// element carries "crossed_system".
struct LoadedElement {
    std::optional<GroupRingElement> ring;
    std::optional<CrossedProductElement> crossed;
};

LoadedElement load_element(const std::string& path) {
    std::string text = read_file(path);
    ojson sniff = ojson::parse(text);
    LoadedElement out;
    if (sniff.contains("crossed_system")) {
        out.crossed = crossed_element_from_json(text);
    } else if (sniff.contains("group")) {
        out.ring = ring_element_from_json(text);
    } else {
        throw InputError(path + ": element file needs a \"group\" or \"crossed_system\" field");
    }
    return out;
}

struct Emitter {
    std::string command;
    ojson config = ojson::object();
    std::string out_path;

    int emit(const ojson& result, int exit_code, long elapsed_ms) const {
        ojson envelope;
        envelope["tool"] = "xring";
        envelope["version"] = kToolVersion;
        envelope["command"] = command;
        envelope["config"] = config;
        envelope["result"] = result;
        envelope["elapsed_ms"] = elapsed_ms;
        std::string text = envelope.dump(2);
        text.push_back('\n');
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write report to " << out_path << "\n";
                return kExitInputError;
            }
            out << text;
            std::cout << command << ": report written to " << out_path << "\n";
        }
        return exit_code;
    }
};

long ms_since(const std::chrono::steady_clock::time_point& start) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count());
}

// ----------------------------------------------------------------------
// selftest: a compact run of the property suite over the shipped presets.
// ----------------------------------------------------------------------

int run_selftest(Emitter emitter) {
    const auto start = std::chrono::steady_clock::now();
    ojson checks = ojson::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok) {
        checks.push_back(ojson{{"check", name}, {"passed", ok}});
        all_ok = all_ok && ok;
        std::cerr << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    };

    std::mt19937_64 rng(kDefaultSeed);
    auto grid_value = [&]() {
        switch (rng() % 5) {
            case 0: return CycScalar::from_int(1);
            case 1: return CycScalar::from_int(-1);
            case 2: return CycScalar::root_of_unity(4, 1);
            case 3: return CycScalar::from_rational(make_rational(1, 2), 4);
            default: return CycScalar::zero(4);
        }
    };

    // Field axioms.
    {
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            std::vector<Rational> ca(2), cb(2), cc(2);
            for (auto* v : {&ca, &cb, &cc}) {
                for (auto& r : *v) {
                    r = make_rational(Int(static_cast<long>(rng() % 7) - 3),
                                      Int(1 + static_cast<long>(rng() % 3)));
                }
            }
            CycScalar a(4, ca), b(4, cb), c(4, cc);
            ok = ok && ((a + b) * c == a * c + b * c) && (a * b == b * a);
            if (!a.is_zero()) ok = ok && (a * inverse(a) == CycScalar::one(4));
        }
        record("cyclotomic field axioms", ok);
    }

    // Factor-system validation of both presets.
    for (const char* name : {"heisenberg_semidirect", "heisenberg_central"}) {
        FactorSystem fs = load_factor_system(name);
        ValidationReport report =
            validate_factor_system(fs, ValidationWindow::from_radius(fs, 2, 2));
        record(std::string(name) + " validates", report.passed());
    }

    // Phi is a *-homomorphism on random pairs.
    {
        bool ok = true;
        for (const char* name : {"heisenberg_semidirect", "heisenberg_central"}) {
            FactorSystem fs = load_factor_system(name);
            CrossedSystem cs = lift_to_crossed_system(fs);
            Group g = Group::extension(fs);
            auto window = ball(g, 1);
            for (int t = 0; t < 50 && ok; ++t) {
                GroupRingElement::TermMap ta, tb;
                for (int k = 0; k < 4; ++k) {
                    CycScalar c = grid_value();
                    if (!c.is_zero()) ta[window[rng() % window.size()]] = c;
                    CycScalar d = grid_value();
                    if (!d.is_zero()) tb[window[rng() % window.size()]] = d;
                }
                GroupRingElement f(g, 4, std::move(ta));
                GroupRingElement h(g, 4, std::move(tb));
                ok = ok && (phi(cs, f * h) == phi(cs, f) * phi(cs, h)) &&
                     (phi(cs, involute(f)) == involute(phi(cs, f)));
            }
        }
        record("phi transports products and involutions", ok);
    }

    // Homogeneous inverses.
    {
        bool ok = true;
        FactorSystem fs = FactorSystem::heisenberg_semidirect();
        CrossedSystem cs = lift_to_crossed_system(fs);
        auto n_window = ball(cs.coefficient_group(), 2);
        auto h_window = ball(cs.quotient_group(), 2);
        for (int t = 0; t < 25 && ok; ++t) {
            CycScalar c = grid_value();
            if (c.is_zero()) continue;
            GroupRingElement f = GroupRingElement::dirac(
                cs.coefficient_group(), n_window[rng() % n_window.size()], c);
            const GroupElement& h = h_window[rng() % h_window.size()];
            CrossedProductElement u = CrossedProductElement::monomial(cs, f, h);
            CrossedProductElement uinv = invert_homogeneous(cs, f, h);
            CrossedProductElement one = CrossedProductElement::identity(cs);
            ok = ok && (u * uinv == one) && (uinv * u == one);
        }
        record("homogeneous inverse formula verifies", ok);
    }

    // Idempotent relations on the torsion example.
    {
        Group z2 = Group::cyclic(2);
        CrossedSystem cs =
            lift_to_crossed_system(FactorSystem::trivial(z2, Group::free_abelian(1)));
        CycScalar half = CycScalar::from_rational(make_rational(1, 2), 4);
        GroupRingElement f = GroupRingElement::dirac(z2, z2.reduced_cyclic(0), half) +
                             GroupRingElement::dirac(z2, z2.reduced_cyclic(1), half);
        CrossedProductElement p =
            CrossedProductElement::monomial(cs, f, Group::free_abelian(1).identity());
        record("torsion idempotent satisfies the relations",
               idempotent_relations(p).passed() && p * p == p);
    }

    // Cohomology classification with verified witnesses.
    {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            auto entry = [&]() { return Int(static_cast<long>(rng() % 7) - 3); };
            BilinearCocycle c1(IntMatrix({{entry(), entry()}, {entry(), entry()}}));
            BilinearCocycle c2(IntMatrix({{entry(), entry()}, {entry(), entry()}}));
            CohomologyAnswer ans = is_cohomologous(c1, c2);
            ok = ok && (ans.cohomologous == (antisymmetrize(c1) == antisymmetrize(c2)));
            if (ans.cohomologous) ok = ok && ans.witness->verify(c1, c2, 3);
        }
        record("bilinear cocycle classification", ok);
    }

    // Fiber evaluation is multiplicative.
    {
        bool ok = true;
        Group g = heisenberg_central();
        auto window = ball(g, 1);
        for (unsigned q : {1u, 2u, 4u}) {
            for (const Character& chi : Character::all_of_order(1, q)) {
                for (int t = 0; t < 10 && ok; ++t) {
                    GroupRingElement::TermMap ta, tb;
                    for (int k = 0; k < 3; ++k) {
                        CycScalar c = grid_value();
                        if (!c.is_zero()) ta[window[rng() % window.size()]] = c;
                        CycScalar d = grid_value();
                        if (!d.is_zero()) tb[window[rng() % window.size()]] = d;
                    }
                    GroupRingElement x(g, 4, std::move(ta));
                    GroupRingElement y(g, 4, std::move(tb));
                    ok = ok && (evaluate_fiber(x * y, chi) ==
                                evaluate_fiber(x, chi) * evaluate_fiber(y, chi));
                }
            }
        }
        record("fiber evaluation is multiplicative", ok);
    }

    // Matrix oracle.
    {
        MatrixOracleReport report = matrix_oracle_check(1000, kDefaultSeed);
        record("matrix oracle: 1000 random words", report.passed());
    }

    ojson result;
    result["checks"] = checks;
    result["passed"] = all_ok;
    return emitter.emit(result, all_ok ? kExitOk : kExitViolations, ms_since(start));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"xring: exact group rings of group extensions as crossed products"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_version_flag("--version", kToolVersion);

    std::string out_path;
    app.add_option("--out", out_path, "Write the JSON report to this path instead of stdout");

    // validate-fs
    auto* validate_cmd =
        app.add_subcommand("validate-fs", "Validate a factor system on a finite window");
    std::string validate_input;
    long validate_window = 2;
    validate_cmd->add_option("input", validate_input, "Factor-system file or preset name")
        ->required();
    validate_cmd->add_option("--window", validate_window, "Ball radius for the test window");

    // multiply
    auto* multiply_cmd = app.add_subcommand("multiply", "Multiply two serialized elements");
    std::string lhs_path, rhs_path;
    multiply_cmd->add_option("lhs", lhs_path, "Left element file")->required();
    multiply_cmd->add_option("rhs", rhs_path, "Right element file")->required();

    // phi
    auto* phi_cmd = app.add_subcommand(
        "phi", "Apply the crossed-product decomposition (or its inverse with --inverse)");
    std::string phi_input;
    bool phi_inverse_flag = false;
    phi_cmd->add_option("input", phi_input, "Element file")->required();
    phi_cmd->add_flag("--inverse", phi_inverse_flag, "Map a crossed element back to C[G]");

    // involute
    auto* involute_cmd = app.add_subcommand("involute", "Apply the *-involution");
    std::string involute_input;
    involute_cmd->add_option("input", involute_input, "Element file")->required();

    // invert
    auto* invert_cmd =
        app.add_subcommand("invert", "Invert a homogeneous element (certified units only)");
    std::string invert_input;
    invert_cmd->add_option("input", invert_input, "Element file")->required();

    // idempotent-relations
    auto* relations_cmd =
        app.add_subcommand("idempotent-relations", "Check the self-adjoint idempotent relations");
    std::string relations_input;
    relations_cmd->add_option("input", relations_input, "Crossed-product element file")
        ->required();

    // searches
    std::string search_group, search_crossed, search_grid = "rational";
    long search_window = 1;
    size_t search_max_support = 2;
    unsigned long search_seed = kDefaultSeed;
    auto add_search_options = [&](CLI::App* cmd) {
        cmd->add_option("--group", search_group, "Group preset (z, z2, zmodN, ...) or file");
        cmd->add_option("--crossed", search_crossed, "Factor-system preset or file");
        cmd->add_option("--window", search_window, "Support window radius");
        cmd->add_option("--grid", search_grid,
                        "Coefficient grid preset (rational, gaussian, gaussian-half) or file");
        cmd->add_option("--max-support", search_max_support, "Maximum support size");
        cmd->add_option("--seed", search_seed, "Seed echoed into the report");
    };
    auto* zd_cmd = app.add_subcommand("search-zero-divisors",
                                      "Exhaustive zero-divisor search over a finite window");
    add_search_options(zd_cmd);
    auto* unit_cmd =
        app.add_subcommand("search-units", "Exhaustive unit search over a finite window");
    add_search_options(unit_cmd);
    auto* idem_cmd = app.add_subcommand("search-idempotents",
                                        "Exhaustive idempotent search over a finite window");
    add_search_options(idem_cmd);

    // cohomology-class
    auto* coho_cmd =
        app.add_subcommand("cohomology-class", "Classify bilinear cocycles (one file) or compare two");
    std::vector<std::string> coho_inputs;
    coho_cmd->add_option("input", coho_inputs, "One or two cocycle files")
        ->required()
        ->expected(1, 2);

    // fiber-eval
    auto* fiber_cmd =
        app.add_subcommand("fiber-eval", "Evaluate an element onto a character fiber");
    std::string fiber_elem, fiber_char;
    fiber_cmd->add_option("element", fiber_elem, "Group-ring element file")->required();
    fiber_cmd->add_option("character", fiber_char, "Character file")->required();

    // fiber-scan
    auto* scan_cmd =
        app.add_subcommand("fiber-scan", "Scan fibers over all characters of the given orders");
    std::string scan_elem;
    std::vector<unsigned> scan_orders = {1, 2, 3, 4, 6};
    scan_cmd->add_option("element", scan_elem, "Group-ring element file")->required();
    scan_cmd->add_option("--orders", scan_orders, "Character orders to scan")->delimiter(',');

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded property suite");

    CLI11_PARSE(app, argc, argv);

    Emitter emitter;
    emitter.out_path = out_path;
    const auto start = std::chrono::steady_clock::now();

    try {
        if (*validate_cmd) {
            emitter.command = "validate-fs";
            emitter.config = {{"input", validate_input}, {"window", validate_window}};
            FactorSystem fs = load_factor_system(validate_input);
            ValidationReport report = validate_factor_system(
                fs, ValidationWindow::from_radius(fs, validate_window, validate_window));
            ojson result = ojson::parse(validation_report_to_json(report));
            result["factor_system"] = ojson::parse(fs.descriptor());
            return emitter.emit(result, report.passed() ? kExitOk : kExitViolations,
                                ms_since(start));
        }

        if (*multiply_cmd) {
            emitter.command = "multiply";
            emitter.config = {{"lhs", lhs_path}, {"rhs", rhs_path}};
            LoadedElement a = load_element(lhs_path);
            LoadedElement b = load_element(rhs_path);
            ojson result;
            if (a.ring && b.ring) {
                result["product"] = ojson::parse(ring_element_to_json(*a.ring * *b.ring));
            } else if (a.crossed && b.crossed) {
                result["product"] = ojson::parse(crossed_element_to_json(*a.crossed * *b.crossed));
            } else {
                throw InputError("multiply: operands must be elements of the same kind");
            }
            return emitter.emit(result, kExitOk, ms_since(start));
        }

        if (*phi_cmd) {
            emitter.command = "phi";
            emitter.config = {{"input", phi_input}, {"inverse", phi_inverse_flag}};
            LoadedElement e = load_element(phi_input);
            ojson result;
            if (phi_inverse_flag) {
                if (!e.crossed) throw InputError("phi --inverse expects a crossed element");
                result["element"] = ojson::parse(ring_element_to_json(phi_inverse(*e.crossed)));
            } else {
                if (!e.ring) throw InputError("phi expects a group-ring element");
                if (e.ring->group().kind() != Group::Kind::Extension) {
                    throw InputError("phi expects an element over an extension group");
                }
                CrossedSystem cs = lift_to_crossed_system(e.ring->group().factor_system());
                result["element"] = ojson::parse(crossed_element_to_json(phi(cs, *e.ring)));
            }
            return emitter.emit(result, kExitOk, ms_since(start));
        }

        if (*involute_cmd) {
            emitter.command = "involute";
            emitter.config = {{"input", involute_input}};
            LoadedElement e = load_element(involute_input);
            ojson result;
            if (e.ring) {
                result["element"] = ojson::parse(ring_element_to_json(involute(*e.ring)));
            } else {
                result["element"] = ojson::parse(crossed_element_to_json(involute(*e.crossed)));
            }
            return emitter.emit(result, kExitOk, ms_since(start));
        }

        if (*invert_cmd) {
            emitter.command = "invert";
            emitter.config = {{"input", invert_input}};
            LoadedElement e = load_element(invert_input);
            ojson result;
            try {
                if (e.ring) {
                    result["inverse"] =
                        ojson::parse(ring_element_to_json(invert_trivial_unit(*e.ring)));
                } else {
                    auto part = homogeneous_part(*e.crossed);
                    if (!part) {
                        throw std::domain_error(
                            "cannot certify invertibility: element is not homogeneous");
                    }
                    result["inverse"] = ojson::parse(crossed_element_to_json(
                        invert_homogeneous(e.crossed->system(), part->second, part->first)));
                }
            } catch (const std::domain_error& err) {
                result["error"] = err.what();
                return emitter.emit(result, kExitViolations, ms_since(start));
            }
            return emitter.emit(result, kExitOk, ms_since(start));
        }

        if (*relations_cmd) {
            emitter.command = "idempotent-relations";
            emitter.config = {{"input", relations_input}};
            LoadedElement e = load_element(relations_input);
            if (!e.crossed) {
                throw InputError("idempotent-relations expects a crossed-product element");
            }
            RelationReport report = idempotent_relations(*e.crossed);
            ojson result = ojson::parse(relation_report_to_json(report));
            return emitter.emit(result, report.passed() ? kExitOk : kExitViolations,
                                ms_since(start));
        }

        if (*zd_cmd || *unit_cmd || *idem_cmd) {
            if (search_group.empty() == search_crossed.empty()) {
                throw InputError("searches need exactly one of --group or --crossed");
            }
            std::vector<CycScalar> grid = load_grid(search_grid);
            SearchSpace space;
            if (!search_group.empty()) {
                Group g = load_group(search_group);
                space =
                    SearchSpace::for_group(g, ball(g, search_window), grid, search_max_support);
            } else {
                CrossedSystem cs = lift_to_crossed_system(load_factor_system(search_crossed));
                std::vector<GroupElement> window;
                for (const auto& n : ball(cs.coefficient_group(), search_window)) {
                    for (const auto& h : ball(cs.quotient_group(), search_window)) {
                        window.push_back(GroupElement::pair_elem(n, h));
                    }
                }
                space = SearchSpace::for_crossed(cs, window, grid, search_max_support);
            }
            space.seed = search_seed;
            emitter.config = {{"group", search_group},   {"crossed", search_crossed},
                              {"window", search_window}, {"grid", search_grid},
                              {"max_support", search_max_support}, {"seed", search_seed}};
            SearchReport report;
            int exit_code = kExitViolations;
            if (*zd_cmd) {
                emitter.command = "search-zero-divisors";
                report = zero_divisor_search(space);
                exit_code = report.witnesses.empty() ? kExitOk : kExitViolations;
            } else if (*unit_cmd) {
                emitter.command = "search-units";
                report = unit_search(space);
                bool good = report.all_classified(space.crossed ? "homogeneous" : "trivial");
                exit_code = good ? kExitOk : kExitViolations;
            } else {
                emitter.command = "search-idempotents";
                report = idempotent_search(space);
                exit_code = report.all_classified("trivial") ? kExitOk : kExitViolations;
            }
            ojson result = ojson::parse(search_report_to_json(report, space, true));
            return emitter.emit(result, exit_code, ms_since(start));
        }

        if (*coho_cmd) {
            emitter.command = "cohomology-class";
            emitter.config = {{"input", coho_inputs}};
            BilinearCocycle first = cocycle_from_json(read_file(coho_inputs[0]));
            ojson result;
            IntMatrix a = antisymmetrize(first);
            {
                ojson rows = ojson::array();
                for (size_t r = 0; r < a.rows(); ++r) {
                    ojson row = ojson::array();
                    for (size_t c = 0; c < a.cols(); ++c) row.push_back(to_long(a.at(r, c)));
                    rows.push_back(row);
                }
                result["antisymmetrization"] = rows;
            }
            if (first.rank() == 2) {
                result["class_integer"] = to_long(a.at(0, 1));
            }
            if (coho_inputs.size() == 2) {
                BilinearCocycle second = cocycle_from_json(read_file(coho_inputs[1]));
                CohomologyAnswer ans = is_cohomologous(first, second);
                result["comparison"] = ojson::parse(cohomology_answer_to_json(ans));
            }
            return emitter.emit(result, kExitOk, ms_since(start));
        }

        if (*fiber_cmd) {
            emitter.command = "fiber-eval";
            emitter.config = {{"element", fiber_elem}, {"character", fiber_char}};
            LoadedElement e = load_element(fiber_elem);
            if (!e.ring) throw InputError("fiber-eval expects a group-ring element");
            Character chi = character_from_json(read_file(fiber_char));
            TwistedAlgebraElement image = evaluate_fiber(*e.ring, chi);
            ojson terms = ojson::array();
            for (const auto& [h, c] : image.terms()) {
                terms.push_back(ojson{{"h", element_to_text(image.quotient_group(), h)},
                                      {"coeff", ojson::parse(scalar_to_json(c))}});
            }
            ojson result;
            result["character"] = ojson::parse(character_to_json(chi));
            result["scalar_order"] = image.scalar_order();
            result["terms"] = terms;
            return emitter.emit(result, kExitOk, ms_since(start));
        }

        if (*scan_cmd) {
            emitter.command = "fiber-scan";
            emitter.config = {{"element", scan_elem}, {"orders", scan_orders}};
            LoadedElement e = load_element(scan_elem);
            if (!e.ring) throw InputError("fiber-scan expects a group-ring element");
            ScanReport report = fiber_idempotent_scan(*e.ring, scan_orders);
            ojson result = ojson::parse(scan_report_to_json(report));
            return emitter.emit(result, report.any_flagged() ? kExitViolations : kExitOk,
                                ms_since(start));
        }

        if (*selftest_cmd) {
            emitter.command = "selftest";
            return run_selftest(std::move(emitter));
        }
    } catch (const ParseError& err) {
        std::cerr << "input error (line " << err.line << ", column " << err.column
                  << "): " << err.what() << "\n";
        return kExitInputError;
    } catch (const InputError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitViolations;
    }
    return kExitInputError;
}
