#include "casimir/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "casimir/theorems.hpp"

namespace casimir {

namespace {

const Json& at(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int as_index(const Json& j, int dim, const std::string& where) {
    if (!j.is_number_integer()) fail(ErrorKind::InvalidInput, where + ": index is not an integer");
    int v = j.get<int>();
    if (v < 0 || v >= dim) fail(ErrorKind::InvalidInput, where + ": index " + std::to_string(v) + " out of range");
    return v;
}

Element dense_vector(const Json& j, int len, const CyclotomicField& field, const std::string& key) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        fail(ErrorKind::InvalidInput, "\"" + key + "\" must be an array of " + std::to_string(len) + " scalars");
    Element v;
    for (const auto& x : j) v.push_back(parse_scalar(x, field));
    return v;
}

const CyclotomicField& parse_field(const Json& j) {
    const Json& f = at(j, "field");
    std::string type = at(f, "type").get<std::string>();
    if (type == "rational") return CyclotomicField::rationals();
    if (type != "cyclotomic") fail(ErrorKind::InvalidInput, "unknown field type \"" + type + "\"");
    int n = at(f, "conductor").get<int>();
    if (n < 1) fail(ErrorKind::InvalidInput, "conductor must be positive");
    return CyclotomicField::get(n);
}

Json field_json(const CyclotomicField& f) {
    if (f.conductor() == 1) return Json{{"type", "rational"}};
    return Json{{"type", "cyclotomic"}, {"conductor", f.conductor()}};
}

Json sparse_pairs(const CMatrix& m) {
    Json out = Json::array();
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out.push_back(Json::array({i, j, scalar_string(m(i, j))}));
    return out;
}

}  // namespace

Cyclotomic parse_scalar(const Json& j, const CyclotomicField& field) {
    if (j.is_number_integer()) return Cyclotomic(field, Rational(j.get<long>()));
    if (!j.is_string()) fail(ErrorKind::InvalidInput, "scalar must be a string, got " + j.dump());
    try {
        return Cyclotomic::parse(j.get<std::string>(), field);
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::InvalidInput, "unparsable scalar \"" + j.get<std::string>() + "\"");
    }
}

std::string scalar_string(const Cyclotomic& c) { return c.to_string(); }

Json element_json(const Element& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(scalar_string(c));
    return out;
}

Json matrix_json(const CMatrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) out.push_back(element_json(m.row(i)));
    return out;
}

FiniteGroup parse_group(const Json& g) {
    if (g.is_string()) return named_group(g.get<std::string>());
    const Json& t = at(g, "table");
    std::vector<std::vector<int>> table;
    try {
        table = t.get<std::vector<std::vector<int>>>();
    } catch (const Json::exception&) {
        fail(ErrorKind::InvalidInput, "group table must be a square array of integers");
    }
    return FiniteGroup::from_table(std::move(table));
}

std::optional<Json> group_shorthand(const std::string& text) {
    auto wrap = [&](const std::string& inner, const char* as) -> std::optional<Json> {
        try {
            named_group(inner);
        } catch (const Error&) {
            return std::nullopt;
        }
        return Json{{"group", inner}, {"as", as}};
    };
    if (text.size() > 3 && text.rfind("D(", 0) == 0 && text.back() == ')')
        return wrap(text.substr(2, text.size() - 3), "double");
    if (text.size() > 6 && text.rfind("dual(", 0) == 0 && text.back() == ')')
        return wrap(text.substr(5, text.size() - 6), "dual");
    return wrap(text, "group-algebra");
}

Input parse_input(const Json& j, std::optional<int> conductor) {
    if (!j.is_object()) fail(ErrorKind::InvalidInput, "input must be a JSON object");
    Input in;
    if (j.contains("group")) {
        FiniteGroup G = parse_group(j.at("group"));
        std::string as = j.value("as", "group-algebra");
        int n = conductor.value_or(G.exponent());
        if (n % G.exponent() != 0 && conductor)
            fail(ErrorKind::InvalidInput, "conductor " + std::to_string(n) + " is not a multiple of the exponent " +
                                              std::to_string(G.exponent()));
        if (as == "group-algebra")
            in.hopf = group_algebra(G, n);
        else if (as == "dual")
            in.hopf = dual_hopf(group_algebra(G, n));
        else if (as == "double")
            in.hopf = drinfeld_double(G, n);
        else
            fail(ErrorKind::InvalidInput, "unknown construction \"" + as + "\"");
        in.kind = as;
        in.algebra = in.hopf->algebra;
        in.group = std::move(G);
        if (j.contains("R") && j.at("R").is_string() && j.at("R") == "trivial") in.hopf = with_trivial_R(*in.hopf);
        return in;
    }

    const CyclotomicField& field = parse_field(j);
    const int dim = at(j, "dim").get<int>();
    if (dim < 1) fail(ErrorKind::InvalidInput, "dim must be positive");
    Cyclotomic zero(field);
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (const auto& t : at(j, "structure_constants")) {
        if (!t.is_array() || t.size() != 4) fail(ErrorKind::InvalidInput, "structure constant must be [i, j, k, scalar]");
        entries.emplace_back(as_index(t[0], dim, "structure_constants"), as_index(t[1], dim, "structure_constants"),
                             as_index(t[2], dim, "structure_constants"), parse_scalar(t[3], field));
    }
    Element unit = dense_vector(at(j, "unit"), dim, field, "unit");
    in.algebra = std::make_shared<const Algebra>(Algebra::from_triples(dim, zero, entries, std::move(unit)));
    if (j.contains("lambda")) in.lambda = dense_vector(j.at("lambda"), dim, field, "lambda");

    if (j.contains("comultiplication")) {
        HopfAlgebra H;
        H.algebra = in.algebra;
        H.coproduct.assign(dim, zero_vector(static_cast<std::size_t>(dim * dim), zero));
        for (const auto& t : j.at("comultiplication")) {
            if (!t.is_array() || t.size() != 4) fail(ErrorKind::InvalidInput, "comultiplication entry must be [i, j, k, scalar]");
            int a = as_index(t[0], dim, "comultiplication"), b = as_index(t[1], dim, "comultiplication"),
                k = as_index(t[2], dim, "comultiplication");
            H.coproduct[k][a * dim + b] += parse_scalar(t[3], field);
        }
        H.counit = dense_vector(at(j, "counit"), dim, field, "counit");
        H.antipode = CMatrix(dim, dim, zero);
        for (const auto& t : at(j, "antipode")) {
            if (!t.is_array() || t.size() != 3) fail(ErrorKind::InvalidInput, "antipode entry must be [i, j, scalar]");
            H.antipode(as_index(t[0], dim, "antipode"), as_index(t[1], dim, "antipode")) += parse_scalar(t[2], field);
        }
        if (j.contains("R")) {
            Element R = zero_vector(static_cast<std::size_t>(dim * dim), zero);
            for (const auto& t : j.at("R")) {
                if (!t.is_array() || t.size() != 3) fail(ErrorKind::InvalidInput, "R entry must be [i, j, scalar]");
                R[as_index(t[0], dim, "R") * dim + as_index(t[1], dim, "R")] += parse_scalar(t[2], field);
            }
            H.R = std::move(R);
        }
        in.kind = "hopf";
        in.hopf = std::move(H);
    }

    if (conductor && *conductor != field.conductor()) {
        if (*conductor % field.conductor() != 0)
            fail(ErrorKind::InvalidInput, "conductor " + std::to_string(*conductor) + " does not contain the declared field");
        const CyclotomicField& to = CyclotomicField::get(*conductor);
        if (in.hopf) {
            in.hopf = extend_conductor(*in.hopf, *conductor);
            in.algebra = in.hopf->algebra;
        } else {
            in.algebra = std::make_shared<const Algebra>(
                in.algebra->map_scalars(Cyclotomic(to), [&](const Cyclotomic& c) { return embed(c, to); }));
        }
        if (in.lambda)
            for (auto& c : *in.lambda) c = embed(c, to);
    }
    return in;
}

Input read_input(const std::string& path_or_group, std::optional<int> conductor) {
    if (!std::filesystem::exists(path_or_group)) {
        if (auto j = group_shorthand(path_or_group)) return parse_input(*j, conductor);
        fail(ErrorKind::InvalidInput, "no such file or named group: " + path_or_group);
    }
    std::ifstream f(path_or_group);
    Json j;
    try {
        f >> j;
    } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return parse_input(j, conductor);
}

Json algebra_json(const Algebra& A, const std::optional<Element>& lambda) {
    Json j;
    j["dim"] = A.dim();
    j["field"] = field_json(A.zero().field());
    Json sc = Json::array();
    for (int i = 0; i < A.dim(); ++i)
        for (int k2 = 0; k2 < A.dim(); ++k2)
            for (const auto& [k, c] : A.product(i, k2)) sc.push_back(Json::array({i, k2, k, scalar_string(c)}));
    j["structure_constants"] = std::move(sc);
    j["unit"] = element_json(A.unit());
    if (lambda) j["lambda"] = element_json(*lambda);
    return j;
}

Json hopf_json(const HopfAlgebra& H) {
    Json j = algebra_json(H.A());
    const int n = H.dim();
    Json cm = Json::array();
    for (int k = 0; k < n; ++k)
        for (int ij = 0; ij < n * n; ++ij)
            if (!H.coproduct[k][ij].is_zero())
                cm.push_back(Json::array({ij / n, ij % n, k, scalar_string(H.coproduct[k][ij])}));
    j["comultiplication"] = std::move(cm);
    j["counit"] = element_json(H.counit);
    j["antipode"] = sparse_pairs(H.antipode);
    if (H.R) {
        Json r = Json::array();
        for (int ij = 0; ij < n * n; ++ij)
            if (!(*H.R)[ij].is_zero()) r.push_back(Json::array({ij / n, ij % n, scalar_string((*H.R)[ij])}));
        j["R"] = std::move(r);
    }
    return j;
}

Json input_json(const Input& in) { return in.hopf ? hopf_json(*in.hopf) : algebra_json(*in.algebra, in.lambda); }

std::string digest(const Json& j) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace casimir
