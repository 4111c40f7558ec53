#include "gradsw/switch/switch.hpp"

namespace gradsw {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::truncated: return "truncated";
        case Variant::artin_hasse: return "artin-hasse";
        case Variant::laguerre: return "laguerre";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "truncated") return Variant::truncated;
    if (s == "artin-hasse" || s == "artin_hasse") return Variant::artin_hasse;
    if (s == "laguerre") return Variant::laguerre;
    throw InvalidArgument("unknown switching variant '" + s + "'");
}

namespace detail {

std::int64_t cyclic_modulus(const AbelianGroup& g) {
    if (g.free_rank() > 0)
        throw HypothesisError("grading group " + g.to_string() +
                              " has a free part; coarsen it to Z/mZ with m dividing p*d before switching");
    if (g.torsion().size() > 1) throw HypothesisError("grading group " + g.to_string() + " is not cyclic");
    return g.torsion().empty() ? 1 : g.torsion().front();
}

}  // namespace detail

}  // namespace gradsw
