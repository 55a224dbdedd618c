#include "xring/serialization.hpp"

#include "descriptor_internal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace xring {

namespace {

using detail::ojson;

ojson parse_json(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, column = 1;
        size_t limit = std::min<size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(e.what(), line, column);
    }
}

ojson rational_pair(const Rational& r) {
    return ojson::array({detail::int_to_json(r.get_num()), detail::int_to_json(r.get_den())});
}

Rational rational_from_pair(const ojson& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("rational must be a [num, den] pair: " + j.dump());
    }
    return make_rational(detail::int_from_json(j[0]), detail::int_from_json(j[1]));
}

ojson scalar_to_ojson(const CycScalar& s) {
    ojson out;
    out["order"] = s.order();
    ojson coeffs = ojson::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_pair(c));
    out["coeffs"] = std::move(coeffs);
    return out;
}

CycScalar scalar_from_ojson(const ojson& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
        throw std::invalid_argument("scalar must be {\"order\": q, \"coeffs\": [[num,den],...]}");
    }
    unsigned order = j.at("order").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& entry : j.at("coeffs")) coeffs.push_back(rational_from_pair(entry));
    return CycScalar(order, std::move(coeffs));
}

// --- the element text grammar ---

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, 1, static_cast<int>(pos) + 1);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
            fail("expected an integer");
        }
        Int value;
        if (value.set_str(text.substr(start, pos - start), 10) != 0) {
            fail("malformed integer");
        }
        return value;
    }
    bool keyword(const char* word) {
        skip_ws();
        size_t len = std::string(word).size();
        if (text.compare(pos, len, word) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
};

GroupElement parse_element(Cursor& cur, const Group& g) {
    switch (g.kind()) {
        case Group::Kind::FreeAbelian: {
            if (!cur.consume('[')) cur.fail("expected '[' starting a vector element");
            std::vector<Int> coords;
            cur.skip_ws();
            if (!cur.consume(']')) {
                while (true) {
                    coords.push_back(cur.integer());
                    if (cur.consume(']')) break;
                    if (!cur.consume(',')) cur.fail("expected ',' or ']' in a vector element");
                }
            }
            if (coords.size() != g.rank()) {
                cur.fail("vector element has wrong rank");
            }
            return GroupElement::vector_elem(std::move(coords));
        }
        case Group::Kind::Cyclic: {
            Int residue = cur.integer();
            if (!cur.keyword("mod")) cur.fail("expected 'mod' in a cyclic element");
            Int modulus = cur.integer();
            if (modulus != g.modulus()) {
                cur.fail("cyclic element modulus does not match the group");
            }
            return g.reduced_cyclic(residue);
        }
        case Group::Kind::Extension: {
            if (!cur.consume('(')) cur.fail("expected '(' starting an extension pair");
            GroupElement n = parse_element(cur, g.normal_group());
            if (!cur.consume(';')) cur.fail("expected ';' between pair components");
            GroupElement h = parse_element(cur, g.quotient_group());
            if (!cur.consume(')')) cur.fail("expected ')' closing an extension pair");
            return GroupElement::pair_elem(std::move(n), std::move(h));
        }
    }
    cur.fail("unsupported group kind");
}

std::string element_text(const Group& g, const GroupElement& e) {
    std::ostringstream os;
    switch (g.kind()) {
        case Group::Kind::FreeAbelian: {
            os << "[";
            for (size_t i = 0; i < e.coords().size(); ++i) {
                if (i) os << ",";
                os << e.coords()[i].get_str();
            }
            os << "]";
            break;
        }
        case Group::Kind::Cyclic:
            os << e.residue().get_str() << " mod " << g.modulus().get_str();
            break;
        case Group::Kind::Extension:
            os << "(" << element_text(g.normal_group(), e.normal_part()) << ";"
               << element_text(g.quotient_group(), e.quotient_part()) << ")";
            break;
    }
    return os.str();
}

Group group_from_ojson(const ojson& j);

FactorSystem factor_system_from_ojson(const ojson& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::invalid_argument("factor system descriptor needs a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "trivial") {
        return FactorSystem::trivial(group_from_ojson(j.at("n")), group_from_ojson(j.at("h")));
    }
    if (kind == "semidirect") {
        return FactorSystem::semidirect_z(detail::matrix_from_json(j.at("matrix_action")));
    }
    if (kind == "central_bilinear") {
        return FactorSystem::central_bilinear(detail::matrix_from_json(j.at("matrix")));
    }
    if (kind == "central_split") {
        return FactorSystem::central_split(detail::int_vector_from_json(j.at("left")),
                                           detail::int_vector_from_json(j.at("right")));
    }
    throw std::invalid_argument("unknown factor system kind: " + kind);
}

Group group_from_ojson(const ojson& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::invalid_argument("group descriptor needs a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "free_abelian") {
        return Group::free_abelian(j.at("rank").get<size_t>());
    }
    if (kind == "cyclic") {
        return Group::cyclic(detail::int_from_json(j.at("modulus")));
    }
    if (kind == "extension") {
        return Group::extension(factor_system_from_ojson(j.at("factor_system")));
    }
    throw std::invalid_argument("unknown group kind: " + kind);
}

ojson ring_element_to_ojson(const GroupRingElement& f) {
    ojson out;
    out["group"] = detail::group_descriptor(f.group());
    out["scalar_order"] = f.scalar_order();
    ojson terms = ojson::array();
    for (const auto& [g, coeff] : f.terms()) {
        ojson term;
        term["elem"] = element_text(f.group(), g);
        term["coeff"] = scalar_to_ojson(coeff);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

GroupRingElement ring_element_from_ojson(const ojson& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("terms")) {
        throw std::invalid_argument("group-ring element needs \"group\" and \"terms\" fields");
    }
    Group g = group_from_ojson(j.at("group"));
    unsigned order = j.contains("scalar_order") ? j.at("scalar_order").get<unsigned>()
                                                : kDefaultScalarOrder;
    GroupRingElement::TermMap terms;
    for (const auto& term : j.at("terms")) {
        std::string elem_text_str = term.at("elem").get<std::string>();
        Cursor cur{elem_text_str};
        GroupElement e = parse_element(cur, g);
        cur.skip_ws();
        if (cur.pos != elem_text_str.size()) cur.fail("trailing characters after element");
        CycScalar coeff = scalar_from_ojson(term.at("coeff"));
        auto it = terms.find(e);
        if (it != terms.end()) {
            throw std::invalid_argument("duplicate term key: " + elem_text_str);
        }
        terms.emplace(std::move(e), coeff.converted(order));
    }
    return GroupRingElement(std::move(g), order, std::move(terms));
}

ojson crossed_element_to_ojson(const CrossedProductElement& x) {
    const auto& base = x.system().base_factor_system();
    if (!base) {
        throw std::invalid_argument("only lifted crossed systems are serializable");
    }
    ojson out;
    out["crossed_system"] = ojson::parse(base->descriptor());
    out["scalar_order"] = x.scalar_order();
    ojson terms = ojson::array();
    for (const auto& [h, f] : x.terms()) {
        ojson term;
        term["h"] = element_text(x.system().quotient_group(), h);
        term["coeff_ring_elem"] = ring_element_to_ojson(f);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

CrossedProductElement crossed_element_from_ojson(const ojson& j) {
    if (!j.is_object() || !j.contains("crossed_system") || !j.contains("terms")) {
        throw std::invalid_argument(
            "crossed-product element needs \"crossed_system\" and \"terms\" fields");
    }
    FactorSystem fs = factor_system_from_ojson(j.at("crossed_system"));
    CrossedSystem cs = lift_to_crossed_system(fs);
    CrossedProductElement::TermMap terms;
    for (const auto& term : j.at("terms")) {
        std::string h_text = term.at("h").get<std::string>();
        Cursor cur{h_text};
        GroupElement h = parse_element(cur, cs.quotient_group());
        cur.skip_ws();
        if (cur.pos != h_text.size()) cur.fail("trailing characters after element");
        GroupRingElement f = ring_element_from_ojson(term.at("coeff_ring_elem"));
        if (!same_group(f.group(), cs.coefficient_group())) {
            throw std::invalid_argument("coefficient ring element is not over C[N]");
        }
        if (terms.count(h)) {
            throw std::invalid_argument("duplicate degree: " + h_text);
        }
        terms.emplace(std::move(h), std::move(f));
    }
    return CrossedProductElement(std::move(cs), std::move(terms));
}

ojson character_to_ojson(const Character& chi) {
    ojson out;
    out["order"] = chi.order();
    out["exponents"] = detail::int_vector_to_json(chi.exponents());
    return out;
}

ojson violations_to_ojson(const std::vector<ValidationReport::Violation>& violations) {
    ojson out = ojson::array();
    for (const auto& v : violations) {
        ojson entry;
        entry["identity"] = v.identity;
        ojson at = ojson::array();
        for (const auto& e : v.at) at.push_back(debug_string(e));
        entry["at"] = std::move(at);
        entry["detail"] = v.detail;
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

std::string scalar_to_json(const CycScalar& s) { return scalar_to_ojson(s).dump(); }

CycScalar scalar_from_json(const std::string& text) { return scalar_from_ojson(parse_json(text)); }

std::string element_to_text(const Group& g, const GroupElement& e) {
    if (!g.contains(e)) {
        throw std::invalid_argument("element_to_text: element does not belong to the group");
    }
    return element_text(g, e);
}

GroupElement element_from_text(const Group& g, const std::string& text) {
    Cursor cur{text};
    GroupElement e = parse_element(cur, g);
    cur.skip_ws();
    if (cur.pos != text.size()) cur.fail("trailing characters after element");
    return e;
}

std::string group_to_json(const Group& g) { return detail::group_descriptor(g).dump(); }

Group group_from_json(const std::string& text) { return group_from_ojson(parse_json(text)); }

std::string factor_system_to_json(const FactorSystem& fs) { return fs.descriptor(); }

FactorSystem factor_system_from_json(const std::string& text) {
    return factor_system_from_ojson(parse_json(text));
}

std::string ring_element_to_json(const GroupRingElement& f) {
    return ring_element_to_ojson(f).dump();
}

GroupRingElement ring_element_from_json(const std::string& text) {
    return ring_element_from_ojson(parse_json(text));
}

std::string crossed_element_to_json(const CrossedProductElement& x) {
    return crossed_element_to_ojson(x).dump();
}

CrossedProductElement crossed_element_from_json(const std::string& text) {
    return crossed_element_from_ojson(parse_json(text));
}

std::string character_to_json(const Character& chi) { return character_to_ojson(chi).dump(); }

Character character_from_json(const std::string& text) {
    ojson j = parse_json(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("exponents")) {
        throw std::invalid_argument("character descriptor needs \"order\" and \"exponents\"");
    }
    std::vector<Int> exponents = detail::int_vector_from_json(j.at("exponents"));
    const size_t rank = exponents.size();
    return Character(rank, j.at("order").get<unsigned>(), std::move(exponents));
}

std::string cocycle_to_json(const BilinearCocycle& c) {
    ojson out;
    out["rank"] = c.rank();
    out["matrix"] = detail::matrix_to_json(c.matrix());
    return out.dump();
}

BilinearCocycle cocycle_from_json(const std::string& text) {
    ojson j = parse_json(text);
    if (!j.is_object() || !j.contains("matrix")) {
        throw std::invalid_argument("cocycle descriptor needs a \"matrix\" field");
    }
    IntMatrix m = detail::matrix_from_json(j.at("matrix"));
    if (j.contains("rank") && j.at("rank").get<size_t>() != m.rows()) {
        throw std::invalid_argument("cocycle rank does not match its matrix");
    }
    return BilinearCocycle(std::move(m));
}

std::string validation_report_to_json(const ValidationReport& report) {
    ojson out;
    out["passed"] = report.passed();
    out["checks_performed"] = report.checks_performed;
    out["violations"] = violations_to_ojson(report.violations);
    return out.dump();
}

std::string relation_report_to_json(const RelationReport& report) {
    ojson out;
    out["passed"] = report.passed();
    out["checks_performed"] = report.checks_performed;
    ojson violations = ojson::array();
    for (const auto& v : report.violations) {
        ojson entry;
        entry["family"] = v.family;
        entry["at"] = debug_string(v.at);
        entry["expected"] = ring_element_to_ojson(v.expected);
        entry["actual"] = ring_element_to_ojson(v.actual);
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out.dump();
}

std::string search_space_to_json(const SearchSpace& space) {
    ojson out;
    if (space.group) {
        out["group"] = detail::group_descriptor(*space.group);
    } else if (space.crossed) {
        const auto& base = space.crossed->base_factor_system();
        if (!base) {
            throw std::invalid_argument("only lifted crossed systems are serializable");
        }
        out["crossed_system"] = ojson::parse(base->descriptor());
    }
    ojson window = ojson::array();
    for (const auto& e : space.support_window) window.push_back(debug_string(e));
    out["window"] = std::move(window);
    ojson grid = ojson::array();
    for (const auto& c : space.coefficient_grid) grid.push_back(scalar_to_ojson(c));
    out["grid"] = std::move(grid);
    out["max_support"] = space.max_support_size;
    out["seed"] = space.seed;
    return out.dump();
}

std::string search_report_to_json(const SearchReport& report, const SearchSpace& space,
                                  bool include_timing) {
    ojson out;
    out["kind"] = report.kind;
    out["space"] = ojson::parse(search_space_to_json(space));
    out["candidate_count"] = detail::int_to_json(report.candidate_count);
    out["nonzero_candidate_count"] = detail::int_to_json(report.nonzero_candidate_count);
    ojson witnesses = ojson::array();
    for (const auto& w : report.witnesses) {
        ojson entry;
        entry["lhs"] = ojson::parse(w.lhs);
        if (!w.rhs.empty()) entry["rhs"] = ojson::parse(w.rhs);
        entry["recheck"] = ojson::parse(w.recheck);
        if (!w.classification.empty()) entry["classification"] = w.classification;
        witnesses.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(witnesses);
    out["verdict"] = report.verdict;
    if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
    return out.dump();
}

std::string scan_report_to_json(const ScanReport& report) {
    ojson out;
    out["input_idempotent"] = report.input_idempotent;
    ojson entries = ojson::array();
    for (const auto& e : report.entries) {
        ojson entry;
        entry["character"] = character_to_ojson(e.character);
        entry["image_idempotent"] = e.image_idempotent;
        entry["image_trivial"] = e.image_trivial;
        entry["flagged"] = e.flagged;
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    out["any_flagged"] = report.any_flagged();
    return out.dump();
}

std::string matrix_oracle_report_to_json(const MatrixOracleReport& report) {
    ojson out;
    out["words_checked"] = report.words_checked;
    out["seed"] = report.seed;
    out["passed"] = report.passed();
    ojson mismatches = ojson::array();
    for (const auto& m : report.mismatches) {
        ojson entry;
        entry["preset"] = m.preset;
        entry["word"] = m.word;
        mismatches.push_back(std::move(entry));
    }
    out["mismatches"] = std::move(mismatches);
    return out.dump();
}

std::string iso_report_to_json(const IsoReport& report) {
    ojson out;
    out["ball_size"] = report.ball_size;
    out["passed"] = report.passed();
    ojson violations = ojson::array();
    for (const auto& v : report.violations) {
        ojson entry;
        entry["check"] = v.check;
        ojson at = ojson::array();
        for (const auto& e : v.at) at.push_back(debug_string(e));
        entry["at"] = std::move(at);
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out.dump();
}

std::string one_norm_to_json(const OneNorm& norm) {
    ojson out;
    out["term_count"] = norm.term_count;
    out["sum_squared_moduli"] = scalar_to_ojson(norm.sum_squared_moduli);
    if (norm.exact) {
        out["exact"] = to_string(*norm.exact);
    } else {
        out["exact"] = nullptr;
    }
    out["upper_bound"] = to_string(norm.upper_bound);
    out["upper_bound_decimal"] = norm.upper_bound_decimal;
    return out.dump();
}

std::string cohomology_answer_to_json(const CohomologyAnswer& answer) {
    ojson out;
    out["cohomologous"] = answer.cohomologous;
    if (answer.witness) {
        ojson w;
        w["symmetric_difference"] = detail::matrix_to_json(answer.witness->symmetric_difference());
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out.dump();
}

}  // namespace xring
