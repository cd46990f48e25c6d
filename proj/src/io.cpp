#include "ncalc/io.hpp"

#include <fstream>
#include <stdexcept>

#include "ncalc/parser.hpp"

namespace ncalc {

namespace {

using Tensor = std::vector<std::vector<std::vector<Rational>>>;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Tensor tensor_from_json(const Json& j, std::size_t a, std::size_t b, std::size_t c, const std::string& what) {
    require(j.is_array() && j.size() == a, what + ": expected " + std::to_string(a) + " slices");
    Tensor t(a, std::vector<std::vector<Rational>>(b, std::vector<Rational>(c)));
    for (std::size_t i = 0; i < a; ++i) {
        require(j[i].is_array() && j[i].size() == b, what + ": slice " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < b; ++k) {
            require(j[i][k].is_array() && j[i][k].size() == c, what + ": entry has wrong length");
            for (std::size_t l = 0; l < c; ++l) t[i][k][l] = rational_from_json(j[i][k][l]);
        }
    }
    return t;
}

CoeffVector to_rebased(const StructureAlgebra& a, const CoeffVector& orig) {
    auto inv = inverse(a.rebase_matrix());
    const auto m = static_cast<std::size_t>(a.dim());
    CoeffVector out(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out[r] += (*inv)[r][c] * orig[c];
    return out;
}

std::vector<std::string> module_names(const Bimodule& m) {
    if (m.regular()) return m.algebra().basis_names();
    std::vector<std::string> out;
    for (int i = 0; i < m.dim(); ++i) out.push_back("m" + std::to_string(i));
    return out;
}

}  // namespace

Json rational_json(const Rational& q) { return to_pq(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    require(j.is_string(), "rational must be a \"p/q\" string or an integer");
    return parse_rational(j.get<std::string>());
}

Json vector_json(const CoeffVector& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(rational_json(c));
    return out;
}

StructureAlgebra algebra_from_json(const Json& j) {
    require(j.is_object(), "algebra must be a JSON object");
    for (const char* key : {"dim", "basis", "unit", "table"}) require(j.contains(key), std::string("algebra is missing \"") + key + "\"");
    auto m = j["dim"].get<std::size_t>();
    require(m > 0, "algebra dimension must be positive");
    auto names = j["basis"].get<std::vector<std::string>>();
    require(names.size() == m, "basis has wrong length");
    require(j["unit"].is_array() && j["unit"].size() == m, "unit has wrong length");
    CoeffVector unit;
    for (const auto& c : j["unit"]) unit.push_back(rational_from_json(c));
    StructureAlgebra a(names, tensor_from_json(j["table"], m, m, m, "table"), unit);
    if (auto v = structure_validate(a)) throw MathError("algebra fails " + v->kind + ": " + v->detail);
    return a;
}

Json algebra_to_json(const StructureAlgebra& a) {
    Json table = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.dim(); ++j) {
            Json cell = Json::array();
            for (int k = 0; k < a.dim(); ++k) cell.push_back(rational_json(a.c(i, j, k)));
            row.push_back(cell);
        }
        table.push_back(row);
    }
    return Json{{"dim", a.dim()}, {"basis", a.basis_names()}, {"unit", vector_json(a.unit_vector())}, {"table", table}};
}

std::vector<std::string> builtin_algebra_names() {
    return {"k", "kxk", "idempotent", "dual", "trunc3", "mat2", "upper2", "z3", "mat2dual"};
}

StructureAlgebra load_algebra(const std::string& name) {
    if (name == "k") return algebras::ground_field();
    if (name == "kxk") return algebras::product_of_fields(2);
    if (name == "idempotent") return algebras::idempotent();
    if (name == "dual") return algebras::truncated_polynomial(2);
    if (name == "trunc3") return algebras::truncated_polynomial(3);
    if (name == "mat2") return algebras::matrix_algebra(2);
    if (name == "upper2") return algebras::upper_triangular(2);
    if (name == "z3") return algebras::cyclic_group_algebra(3);
    if (name == "mat2dual") return algebras::matrices_over(algebras::truncated_polynomial(2), 2);
    return algebra_from_json(read_json_file(name));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Bimodule bimodule_from_json(const Json& j, const StructureAlgebra& a) {
    if (j.is_string()) {
        if (j == "regular") return Bimodule::regular(a);
        if (j == "enveloping") return Bimodule::enveloping(a);
        throw std::invalid_argument("unknown module " + j.get<std::string>());
    }
    require(j.is_object() && j.contains("dim") && j.contains("left") && j.contains("right"),
            "module needs \"dim\", \"left\" and \"right\"");
    auto m = static_cast<std::size_t>(a.dim());
    auto d = j["dim"].get<std::size_t>();
    Tensor left = tensor_from_json(j["left"], m, d, d, "left"), right = tensor_from_json(j["right"], m, d, d, "right");
    const auto& r = a.rebase_matrix();
    auto rebase = [&](const Tensor& t) {
        Tensor out(m, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
        for (std::size_t nb = 0; nb < m; ++nb)
            for (std::size_t ob = 0; ob < m; ++ob) {
                if (is_zero(r[ob][nb])) continue;
                for (std::size_t x = 0; x < d; ++x)
                    for (std::size_t y = 0; y < d; ++y) out[nb][x][y] += r[ob][nb] * t[ob][x][y];
            }
        return out;
    };
    return Bimodule(a, static_cast<int>(d), rebase(left), rebase(right));
}

FormMatrix form_matrix_from_json(const Json& j, const BasedAlgebra& a) {
    require(j.is_object() && j.contains("size") && j.contains("entries"), "matrix needs \"size\" and \"entries\"");
    int r = j["size"].get<int>();
    require(r > 0, "matrix size must be positive");
    const Json& rows = j["entries"];
    require(rows.is_array() && rows.size() == static_cast<std::size_t>(r), "entries must have size rows");
    Env env = algebra_env(a);
    std::vector<std::vector<Elem>> out;
    for (const auto& row : rows) {
        require(row.is_array() && row.size() == static_cast<std::size_t>(r), "entries must have size columns");
        std::vector<Elem> line;
        for (const auto& entry : row) {
            if (entry.is_string()) {
                line.push_back(to_elem(parse(entry.get<std::string>(), env), a));
            } else {
                require(a.kind() == BasedAlgebra::Kind::FinDim, "coefficient vectors need a finite-dimensional algebra");
                require(entry.is_array() && entry.size() == static_cast<std::size_t>(a.structure().dim()),
                        "coefficient vector has wrong length");
                CoeffVector v;
                for (const auto& c : entry) v.push_back(rational_from_json(c));
                line.push_back(a.from_vector(to_rebased(a.structure(), v)));
            }
        }
        out.push_back(line);
    }
    return FormMatrix::from_elems(out);
}

Json chain_json(const Bimodule& m, const Chain& c) {
    const auto& an = m.algebra().basis_names();
    auto mn = module_names(m);
    Json terms = Json::array();
    for (const auto& [key, v] : c.terms) {
        Json tensor = Json::array();
        tensor.push_back(mn[static_cast<std::size_t>(key[0])]);
        for (std::size_t i = 1; i < key.size(); ++i) tensor.push_back(an[static_cast<std::size_t>(key[i])]);
        terms.push_back(Json{{"coeff", rational_json(v)}, {"tensor", tensor}});
    }
    return terms;
}

Json cochain_json(const Bimodule& m, const Cochain& c) {
    const auto& an = m.algebra().basis_names();
    Json terms = Json::array();
    for (std::size_t t = 0; t < c.tuple_count(); ++t) {
        auto tup = c.tuple(t);
        auto v = c.value(tup);
        bool zero = true;
        for (const auto& x : v) zero = zero && is_zero(x);
        if (zero) continue;
        Json inputs = Json::array();
        for (int i : tup) inputs.push_back(an[static_cast<std::size_t>(i)]);
        terms.push_back(Json{{"inputs", inputs}, {"value", vector_json(v)}});
    }
    return terms;
}

}  // namespace ncalc
