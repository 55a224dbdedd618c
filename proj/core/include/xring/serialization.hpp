#pragma once

#include "xring/cohomology.hpp"
#include "xring/crossed_product.hpp"
#include "xring/fibers.hpp"
#include "xring/oracles.hpp"

#include <stdexcept>
#include <string>

namespace xring {

/// Malformed input with source position diagnostics.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error(message), line(line_), column(column_) {}
};

// Scalars: {"order": q, "coeffs": [[num, den], ...]}. Numerators and
// denominators are JSON numbers when they fit a signed 64-bit value and
// decimal strings otherwise.
std::string scalar_to_json(const CycScalar& s);
CycScalar scalar_from_json(const std::string& text);

// The element grammar: vectors "[1,-2]", cyclic residues "3 mod 5",
// extension pairs "([1,0];[2])".
std::string element_to_text(const Group& g, const GroupElement& e);
GroupElement element_from_text(const Group& g, const std::string& text);

std::string group_to_json(const Group& g);
Group group_from_json(const std::string& text);

std::string factor_system_to_json(const FactorSystem& fs);
FactorSystem factor_system_from_json(const std::string& text);

// {"group": <descriptor>, "scalar_order": q, "terms": [{"elem": ..., "coeff": ...}]}
std::string ring_element_to_json(const GroupRingElement& f);
GroupRingElement ring_element_from_json(const std::string& text);

// {"crossed_system": <factor-system descriptor>, "terms":
//  [{"h": ..., "coeff_ring_elem": <group-ring element>}]}
std::string crossed_element_to_json(const CrossedProductElement& x);
CrossedProductElement crossed_element_from_json(const std::string& text);

// {"center_rank": k, "order": q, "exponents": [...]}
std::string character_to_json(const Character& chi);
Character character_from_json(const std::string& text);

// {"rank": m, "matrix": [[...]]}
std::string cocycle_to_json(const BilinearCocycle& c);
BilinearCocycle cocycle_from_json(const std::string& text);

// Reports. All report serializations are canonical (deterministic field
// order and content); include_timing appends the elapsed_ms sidecar.
std::string validation_report_to_json(const ValidationReport& report);
std::string relation_report_to_json(const RelationReport& report);
std::string search_space_to_json(const SearchSpace& space);
std::string search_report_to_json(const SearchReport& report, const SearchSpace& space,
                                  bool include_timing);
std::string scan_report_to_json(const ScanReport& report);
std::string matrix_oracle_report_to_json(const MatrixOracleReport& report);
std::string iso_report_to_json(const IsoReport& report);
std::string one_norm_to_json(const OneNorm& norm);
std::string cohomology_answer_to_json(const CohomologyAnswer& answer);

}  // namespace xring
