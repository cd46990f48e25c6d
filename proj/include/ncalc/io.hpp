#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncalc/hochschild.hpp"
#include "ncalc/k_theory.hpp"
#include "ncalc/structure_algebra.hpp"

namespace ncalc {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);   // "p/q"
Rational rational_from_json(const Json& j);
Json vector_json(const CoeffVector& v);

// {"dim", "basis", "unit", "table"}; throws std::invalid_argument on malformed input
StructureAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const StructureAlgebra& a);

// Built-in algebras by name (k, kxk, idempotent, dual, trunc3, mat2, upper2, z3, mat2dual),
// otherwise a JSON file path.
StructureAlgebra load_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();
Json read_json_file(const std::string& path);

// "regular", "enveloping", or {"dim", "left", "right"} with left[a][j][k], right[a][j][k]
// in the original basis of the algebra file.
Bimodule bimodule_from_json(const Json& j, const StructureAlgebra& a);

// {"size": r, "entries": [[...]]}; an entry is an expression over the basis names
// or a coefficient vector in the original basis.
FormMatrix form_matrix_from_json(const Json& j, const BasedAlgebra& a);

Json chain_json(const Bimodule& m, const Chain& c);
Json cochain_json(const Bimodule& m, const Cochain& c);

}  // namespace ncalc
