#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradsw/arith/prime_field.hpp"
#include "gradsw/arith/upoly.hpp"

namespace gradsw {

/// Rabin irreducibility test over F_p.
bool is_irreducible(const UPoly<PrimeField>& f);

/// F_p[t]/(f(t)) for a monic irreducible f of degree k. Elements are
/// coefficient vectors of length k in the basis 1, t, ..., t^{k-1}.
class ExtensionField {
public:
    using Element = std::vector<std::uint32_t>;

    static constexpr std::uint32_t kMaxDegree = 128;

    /// `modulus` is monic of degree >= 1; irreducibility is checked.
    ExtensionField(PrimeField base, const UPoly<PrimeField>& modulus);

    /// F_p[t]/(t^p - t - 1), the field with p^p elements.
    static ExtensionField artin_schreier(std::uint32_t p);
    /// Degree-k extension defined by the lexicographically smallest monic
    /// irreducible polynomial of that degree.
    static ExtensionField of_degree(std::uint32_t p, std::uint32_t k);

    const PrimeField& base() const noexcept { return base_; }
    std::uint32_t characteristic() const noexcept { return base_.characteristic(); }
    std::uint32_t degree() const noexcept { return k_; }
    const UPoly<PrimeField>& modulus() const noexcept { return modulus_; }
    bool is_artin_schreier() const noexcept { return artin_schreier_; }

    Element zero() const { return Element(k_, 0); }
    Element one() const {
        Element e(k_, 0);
        e[0] = 1;
        return e;
    }
    Element from_int(std::int64_t v) const {
        Element e(k_, 0);
        e[0] = base_.from_int(v);
        return e;
    }
    Element from_prime(std::uint32_t v) const { return from_int(v); }
    /// Reduces an arbitrary-length coefficient vector.
    Element from_coeffs(const std::vector<std::uint32_t>& c) const;
    /// The class of t. For the Artin-Schreier field this is gamma, gamma^p - gamma = 1.
    Element generator() const;
    Element gamma() const { return generator(); }

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    void add_mul(Element& acc, const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;
    Element frobenius(const Element& a) const { return pow(a, characteristic()); }

    bool is_zero(const Element& a) const noexcept;
    bool equal(const Element& a, const Element& b) const noexcept { return a == b; }
    /// True when a lies in the prime subfield.
    bool in_prime_field(const Element& a) const noexcept;

    std::string to_string(const Element& a) const;

    friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
        return a.base_ == b.base_ && a.modulus_ == b.modulus_;
    }

private:
    PrimeField base_;
    UPoly<PrimeField> modulus_;
    std::uint32_t k_;
    bool artin_schreier_ = false;
};

}  // namespace gradsw
