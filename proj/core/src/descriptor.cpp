#include "descriptor_internal.hpp"

#include <stdexcept>

namespace xring::detail {

ojson int_to_json(const Int& n) {
    if (n.fits_slong_p()) return static_cast<long>(n.get_si());
    return n.get_str();
}

Int int_from_json(const ojson& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int n;
        if (n.set_str(j.get<std::string>(), 10) != 0) {
            throw std::invalid_argument("malformed integer literal: " + j.dump());
        }
        return n;
    }
    throw std::invalid_argument("expected an integer (number or decimal string): " + j.dump());
}

ojson matrix_to_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const ojson& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("expected a non-empty array of rows for a matrix");
    }
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw std::invalid_argument("matrix row must be an array");
        }
        std::vector<Int> r;
        for (const auto& entry : row) r.push_back(int_from_json(entry));
        rows.push_back(std::move(r));
    }
    return IntMatrix(rows);
}

ojson int_vector_to_json(const std::vector<Int>& v) {
    ojson out = ojson::array();
    for (const auto& n : v) out.push_back(int_to_json(n));
    return out;
}

std::vector<Int> int_vector_from_json(const ojson& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of integers");
    }
    std::vector<Int> out;
    for (const auto& entry : j) out.push_back(int_from_json(entry));
    return out;
}

ojson group_descriptor(const Group& g) {
    ojson out;
    switch (g.kind()) {
        case Group::Kind::FreeAbelian:
            out["kind"] = "free_abelian";
            out["rank"] = g.rank();
            break;
        case Group::Kind::Cyclic:
            out["kind"] = "cyclic";
            out["modulus"] = int_to_json(g.modulus());
            break;
        case Group::Kind::Extension:
            out["kind"] = "extension";
            out["factor_system"] = ojson::parse(g.factor_system().descriptor());
            break;
    }
    return out;
}

}  // namespace xring::detail
