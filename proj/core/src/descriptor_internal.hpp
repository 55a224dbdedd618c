#pragma once

// Internal helpers shared by factor_system.cpp and serialization.cpp for
// building the canonical JSON descriptors. Not installed.

#include "json.hpp"
#include "xring/factor_system.hpp"
#include "xring/group.hpp"
#include "xring/int_matrix.hpp"

namespace xring::detail {

using ojson = nlohmann::ordered_json;

ojson int_to_json(const Int& n);
Int int_from_json(const ojson& j);

ojson matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const ojson& j);

ojson int_vector_to_json(const std::vector<Int>& v);
std::vector<Int> int_vector_from_json(const ojson& j);

ojson group_descriptor(const Group& g);

}  // namespace xring::detail
