#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "gradsw/algebra/algebra.hpp"
#include "gradsw/algebra/grading.hpp"
#include "gradsw/arith/extension_field.hpp"
#include "gradsw/arith/prime_field.hpp"
#include "gradsw/error.hpp"
#include "json.hpp"

namespace gradsw::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"p", "field_degree"} plus "field_modulus" (coefficient residues, constant
/// term first) for proper extensions.
json field_json(const PrimeField& f);
json field_json(const ExtensionField& f);

/// Field elements are decimal residue strings; extension elements are arrays
/// of field_degree residue strings.
json element_json(const PrimeField& f, PrimeField::Element x);
json element_json(const ExtensionField& f, const ExtensionField::Element& x);
PrimeField::Element parse_element(const PrimeField& f, const json& j, const std::string& ptr);
ExtensionField::Element parse_element(const ExtensionField& f, const json& j, const std::string& ptr);

using AnyField = std::variant<PrimeField, ExtensionField>;
/// Reads the field descriptor at the top level of a document.
AnyField parse_field(const json& doc);

json group_json(const AbelianGroup& g);
AbelianGroup parse_group(const json& j, const std::string& ptr);
json group_element_json(const GroupElement& g);
GroupElement parse_group_element(const AbelianGroup& g, const json& j, const std::string& ptr);

/// Throws SchemaError unless doc["schema"] == 1 and doc["kind"] == kind.
void check_header(const json& doc, const std::string& kind);

/// Typed accessors that raise SchemaError with the JSON pointer of the node.
const json& member(const json& obj, const std::string& key, const std::string& ptr);
std::int64_t as_int(const json& j, const std::string& ptr);
std::size_t as_index(const json& j, std::size_t bound, const std::string& ptr);
std::string as_string(const json& j, const std::string& ptr);

template <class F>
json vector_json(const F& f, const Vec<F>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(element_json(f, x));
    return out;
}

template <class F>
Vec<F> parse_vector(const F& f, const json& j, std::size_t dim, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array");
    if (j.size() != dim) throw SchemaError(ptr, "expected " + std::to_string(dim) + " coordinates");
    Vec<F> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) v.push_back(parse_element(f, j[i], ptr + "/" + std::to_string(i)));
    return v;
}

/// Metadata carried alongside an algebra document.
struct AlgebraInfo {
    std::string name;
    json params = json::object();
    std::map<std::string, std::size_t> aliases;
};

/// Canonical algebra document: constants sorted by (i, j, k).
template <class F>
json algebra_json(const Algebra<F>& a, const AlgebraInfo& info) {
    json doc = {{"schema", kSchemaVersion}, {"kind", "algebra"}, {"name", info.name}, {"params", info.params}};
    doc.update(field_json(a.field()));
    doc["dim"] = a.dim();
    doc["basis"] = a.names();
    json aliases = json::object();
    for (const auto& [k, v] : info.aliases) aliases[k] = v;
    doc["aliases"] = aliases;
    json consts = json::array();
    a.for_each_constant([&](std::size_t i, std::size_t j, std::size_t k, const typename F::Element& c) {
        consts.push_back({i, j, k, element_json(a.field(), c)});
    });
    doc["constants"] = std::move(consts);
    return doc;
}

template <class F>
Algebra<F> parse_algebra(const F& f, const json& doc) {
    const auto& basis = member(doc, "basis", "");
    if (!basis.is_array()) throw SchemaError("/basis", "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i) names.push_back(as_string(basis[i], "/basis/" + std::to_string(i)));
    const auto dim = static_cast<std::size_t>(as_int(member(doc, "dim", ""), "/dim"));
    if (dim != names.size()) throw SchemaError("/dim", "does not match the number of basis names");
    Algebra<F> a = [&] {
        try {
            return Algebra<F>(f, names);
        } catch (const InvalidArgument& e) {
            throw SchemaError("/basis", e.what());
        }
    }();
    const auto& consts = member(doc, "constants", "");
    if (!consts.is_array()) throw SchemaError("/constants", "expected an array");
    for (std::size_t t = 0; t < consts.size(); ++t) {
        const auto ptr = "/constants/" + std::to_string(t);
        const auto& c = consts[t];
        if (!c.is_array() || c.size() != 4) throw SchemaError(ptr, "expected [i, j, k, coefficient]");
        a.add_constant(as_index(c[0], dim, ptr + "/0"), as_index(c[1], dim, ptr + "/1"), as_index(c[2], dim, ptr + "/2"),
                       parse_element(f, c[3], ptr + "/3"));
    }
    return a;
}

AlgebraInfo parse_algebra_info(const json& doc);

template <class F>
json grading_json(const Grading<F>& g) {
    json doc = {{"schema", kSchemaVersion}, {"kind", "grading"}};
    doc.update(field_json(g.field()));
    doc["dim"] = g.dim();
    doc["group"] = group_json(g.group());
    json comps = json::array();
    for (const auto& c : g.components()) {
        json basis = json::array();
        for (const auto& v : c.basis) basis.push_back(vector_json(g.field(), v));
        comps.push_back({{"degree", group_element_json(c.degree)}, {"basis", std::move(basis)}});
    }
    doc["components"] = std::move(comps);
    return doc;
}

template <class F>
Grading<F> parse_grading(const F& f, const json& doc) {
    const auto dim = static_cast<std::size_t>(as_int(member(doc, "dim", ""), "/dim"));
    const auto G = parse_group(member(doc, "group", ""), "/group");
    const auto& comps = member(doc, "components", "");
    if (!comps.is_array()) throw SchemaError("/components", "expected an array");
    std::vector<GradingComponent<F>> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto ptr = "/components/" + std::to_string(i);
        GradingComponent<F> c{parse_group_element(G, member(comps[i], "degree", ptr), ptr + "/degree"), {}};
        const auto& basis = member(comps[i], "basis", ptr);
        if (!basis.is_array()) throw SchemaError(ptr + "/basis", "expected an array of vectors");
        for (std::size_t k = 0; k < basis.size(); ++k)
            c.basis.push_back(parse_vector(f, basis[k], dim, ptr + "/basis/" + std::to_string(k)));
        out.push_back(std::move(c));
    }
    try {
        return Grading<F>(f, dim, G, std::move(out));
    } catch (const InvalidArgument& e) {
        throw SchemaError("/components", e.what());
    }
}

}  // namespace gradsw::io
