#pragma once

#include <string>
#include <vector>

#include "lieco/liealg.hpp"

namespace lieco {

// {"dim": 3, "basis": ["e1","e2","e3"],
//  "brackets": [{"i": 0, "j": 1, "coeffs": ["0","0","1"]}]}
// Throws std::invalid_argument on schema errors and JacobiError when the
// brackets violate the Jacobi identity.
LieAlgebra lie_from_json_text(const std::string& text);
LieAlgebra lie_from_json_file(const std::string& path);
std::string lie_to_json_text(const LieAlgebra& lie);

// Basis vectors of length dim written as rationals separated by commas. The
// flat list is cut into consecutive vectors; ';' may also separate vectors.
std::vector<Vec> parse_vector_list(const std::string& spec, std::size_t dim);

// {"rows": [["1","0"], ...]}: row i is alpha(e_i) in L coordinates.
std::vector<Vec> projection_rows_from_json_file(const std::string& path,
                                                std::size_t dim);

std::string vec_to_string(const Vec& v);

}  // namespace lieco
