#pragma once

#include <cstdint>
#include <string>

namespace gradsw {

/// Largest characteristic accepted anywhere in the library.
inline constexpr std::uint32_t kMaxPrime = 97;

bool is_prime(std::uint64_t n);

/// The prime field F_p. Elements are reduced residues; all operations are
/// performed through the field object, which is a cheap value type.
class PrimeField {
public:
    using Element = std::uint32_t;

    /// Throws InvalidArgument unless p is prime and p <= kMaxPrime.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return 1; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    Element from_int(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }
    /// Embedding of F_p into this field (identity here).
    Element from_prime(std::uint32_t v) const noexcept { return v % p_; }

    Element add(Element a, Element b) const noexcept {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept {
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// acc += a*b
    void add_mul(Element& acc, Element a, Element b) const noexcept { acc = add(acc, mul(a, b)); }
    /// Throws DomainError on zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const noexcept;

    bool is_zero(Element a) const noexcept { return a == 0; }
    bool equal(Element a, Element b) const noexcept { return a == b; }

    std::string to_string(Element a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

}  // namespace gradsw
