#include "gradsw/io/json_io.hpp"

#include <charconv>
#include <limits>

namespace gradsw::io {

namespace {

std::uint32_t parse_residue(std::uint32_t p, const json& j, const std::string& ptr) {
    if (!j.is_string()) throw SchemaError(ptr, "expected a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty())
        throw SchemaError(ptr, "not a decimal residue: \"" + s + "\"");
    if (v >= p) throw SchemaError(ptr, "residue " + s + " is not reduced modulo " + std::to_string(p));
    return static_cast<std::uint32_t>(v);
}

std::vector<std::int64_t> int_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], ptr + "/" + std::to_string(i)));
    return out;
}

}  // namespace

const json& member(const json& obj, const std::string& key, const std::string& ptr) {
    if (!obj.is_object()) throw SchemaError(ptr.empty() ? "/" : ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(ptr + "/" + key, "missing");
    return *it;
}

std::int64_t as_int(const json& j, const std::string& ptr) {
    if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
    return j.get<std::int64_t>();
}

std::size_t as_index(const json& j, std::size_t bound, const std::string& ptr) {
    const auto v = as_int(j, ptr);
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
        throw SchemaError(ptr, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

std::string as_string(const json& j, const std::string& ptr) {
    if (!j.is_string()) throw SchemaError(ptr, "expected a string");
    return j.get<std::string>();
}

void check_header(const json& doc, const std::string& kind) {
    if (!doc.is_object()) throw SchemaError("/", "expected an object");
    if (as_int(member(doc, "schema", ""), "/schema") != kSchemaVersion)
        throw SchemaError("/schema", "unsupported schema version");
    const auto k = as_string(member(doc, "kind", ""), "/kind");
    if (k != kind) throw SchemaError("/kind", "expected \"" + kind + "\", found \"" + k + "\"");
}

json field_json(const PrimeField& f) { return {{"p", f.characteristic()}, {"field_degree", 1}}; }

json field_json(const ExtensionField& f) {
    json mod = json::array();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i)
        mod.push_back(std::to_string(f.modulus().coeff(i)));
    return {{"p", f.characteristic()}, {"field_degree", f.degree()}, {"field_modulus", mod}};
}

json element_json(const PrimeField&, PrimeField::Element x) { return std::to_string(x); }

json element_json(const ExtensionField&, const ExtensionField::Element& x) {
    json out = json::array();
    for (auto c : x) out.push_back(std::to_string(c));
    return out;
}

PrimeField::Element parse_element(const PrimeField& f, const json& j, const std::string& ptr) {
    return parse_residue(f.characteristic(), j, ptr);
}

ExtensionField::Element parse_element(const ExtensionField& f, const json& j, const std::string& ptr) {
    if (!j.is_array() || j.size() != f.degree())
        throw SchemaError(ptr, "expected an array of " + std::to_string(f.degree()) + " residues");
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(parse_residue(f.characteristic(), j[i], ptr + "/" + std::to_string(i)));
    return f.from_coeffs(c);
}

AnyField parse_field(const json& doc) {
    const auto p = as_int(member(doc, "p", ""), "/p");
    if (p < 2 || p > std::numeric_limits<std::int32_t>::max()) throw SchemaError("/p", "out of range");
    const auto k = as_int(member(doc, "field_degree", ""), "/field_degree");
    if (k < 1) throw SchemaError("/field_degree", "must be positive");
    try {
        PrimeField base(static_cast<std::uint32_t>(p));
        if (k == 1) return base;
        const auto& mod = member(doc, "field_modulus", "");
        if (!mod.is_array() || mod.size() != static_cast<std::size_t>(k) + 1)
            throw SchemaError("/field_modulus", "expected field_degree + 1 residues");
        std::vector<PrimeField::Element> c;
        for (std::size_t i = 0; i < mod.size(); ++i)
            c.push_back(parse_residue(base.characteristic(), mod[i], "/field_modulus/" + std::to_string(i)));
        return ExtensionField(base, UPoly<PrimeField>(base, std::move(c)));
    } catch (const InvalidArgument& e) {
        throw SchemaError(k == 1 ? "/p" : "/field_modulus", e.what());
    }
}

json group_json(const AbelianGroup& g) { return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}; }

AbelianGroup parse_group(const json& j, const std::string& ptr) {
    const auto f = as_int(member(j, "free_rank", ptr), ptr + "/free_rank");
    if (f < 0) throw SchemaError(ptr + "/free_rank", "must be non-negative");
    auto t = int_array(member(j, "torsion", ptr), ptr + "/torsion");
    try {
        return AbelianGroup(static_cast<std::size_t>(f), std::move(t));
    } catch (const InvalidArgument& e) {
        throw SchemaError(ptr, e.what());
    }
}

json group_element_json(const GroupElement& g) { return {{"free", g.free}, {"torsion", g.torsion}}; }

GroupElement parse_group_element(const AbelianGroup& g, const json& j, const std::string& ptr) {
    auto f = int_array(member(j, "free", ptr), ptr + "/free");
    auto t = int_array(member(j, "torsion", ptr), ptr + "/torsion");
    if (f.size() != g.free_rank() || t.size() != g.torsion().size())
        throw SchemaError(ptr, "shape does not match the group " + g.to_string());
    return g.element(std::move(f), std::move(t));
}

AlgebraInfo parse_algebra_info(const json& doc) {
    AlgebraInfo info;
    if (doc.contains("name")) info.name = as_string(doc["name"], "/name");
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) throw SchemaError("/params", "expected an object");
        info.params = doc["params"];
    }
    if (doc.contains("aliases")) {
        const auto& a = doc["aliases"];
        if (!a.is_object()) throw SchemaError("/aliases", "expected an object");
        const auto dim = static_cast<std::size_t>(as_int(member(doc, "dim", ""), "/dim"));
        for (const auto& [k, v] : a.items()) info.aliases[k] = as_index(v, dim, "/aliases/" + k);
    }
    return info;
}

}  // namespace gradsw::io
