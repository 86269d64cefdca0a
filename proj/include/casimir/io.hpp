#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "casimir/hopf.hpp"

namespace casimir {

using Json = nlohmann::json;

/// A parsed input file: a plain algebra, or a Hopf algebra (possibly with R),
/// optionally produced from a group description.
struct Input {
    AlgebraPtr algebra;
    std::optional<Element> lambda;
    std::optional<HopfAlgebra> hopf;
    std::optional<FiniteGroup> group;
    /// "algebra", "group-algebra", "dual", "double" or "hopf".
    std::string kind = "algebra";
};

Cyclotomic parse_scalar(const Json& j, const CyclotomicField& field);
std::string scalar_string(const Cyclotomic& c);
Json element_json(const Element& v);
Json matrix_json(const CMatrix& m);

/// Ingestion; throws InvalidInput with the offending key. Does not verify axioms.
/// `conductor` overrides the declared field for group inputs and extends it for
/// structure-constant inputs.
Input parse_input(const Json& j, std::optional<int> conductor = std::nullopt);
Input read_input(const std::string& path_or_group, std::optional<int> conductor = std::nullopt);

/// Group description: {"group": "S3"} or {"group": {"table": [[...]]}}, plus "as".
FiniteGroup parse_group(const Json& g);
/// Accepts "S3", "D(S3)", "dual(S3)" as shorthands.
std::optional<Json> group_shorthand(const std::string& text);

Json algebra_json(const Algebra& A, const std::optional<Element>& lambda = std::nullopt);
Json hopf_json(const HopfAlgebra& H);
Json input_json(const Input& in);

/// Hex FNV-1a 64 of the canonical serialization.
std::string digest(const Json& j);

}  // namespace casimir
