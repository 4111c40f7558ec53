#pragma once

#include <cstdint>
#include <string>

#include "gradsw/arith/poly2.hpp"
#include "gradsw/arith/prime_field.hpp"
#include "gradsw/error.hpp"

namespace gradsw {

using BiPoly = Poly2<PrimeField>;

/// Exact quotient a / b in F_p[u, v]; throws DomainError when b does not divide a.
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);
/// gcd in F_p[u, v], normalized monic under graded-lex order with u > v.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Leading coefficient under graded-lex order with u > v.
PrimeField::Element grlex_leading_coeff(const BiPoly& a);

/// Element of F_p(alpha, beta), alpha = u and beta = v. The fraction is kept
/// reduced with a grlex-monic denominator, so the representation is canonical.
class RatFunc {
public:
    explicit RatFunc(PrimeField field) : num_(field), den_(BiPoly::constant(field, 1)) {}
    RatFunc(BiPoly num, BiPoly den);

    static RatFunc constant(const PrimeField& field, std::int64_t c);
    static RatFunc alpha(const PrimeField& field) { return RatFunc(BiPoly::u(field), BiPoly::constant(field, 1)); }
    static RatFunc beta(const PrimeField& field) { return RatFunc(BiPoly::v(field), BiPoly::constant(field, 1)); }

    const PrimeField& field() const noexcept { return num_.field(); }
    const BiPoly& num() const noexcept { return num_; }
    const BiPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.total_degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc inverse() const;
    RatFunc pow(std::uint64_t e) const;

    /// a/b == c/d  iff  ad == bc.
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Value at (alpha, beta) = (a, b) in a field K containing F_p. Throws
    /// BadSpecialization when the denominator vanishes there.
    template <class K>
    typename K::Element evaluate(const K& field, const typename K::Element& a, const typename K::Element& b) const {
        auto d = eval_in(field, den_, a, b);
        if (field.is_zero(d)) throw BadSpecialization("denominator " + den_.to_string("alpha", "beta") + " vanishes");
        return field.div(eval_in(field, num_, a, b), d);
    }

    std::string to_string() const;

private:
    template <class K>
    static typename K::Element eval_in(const K& field, const BiPoly& p, const typename K::Element& a,
                                       const typename K::Element& b) {
        auto acc = field.zero();
        for (std::size_t i = static_cast<std::size_t>(p.degree_u() + 1); i-- > 0;) {
            auto inner = field.zero();
            const auto row = p.row(i);
            for (std::size_t j = row.coeffs().size(); j-- > 0;)
                inner = field.add(field.mul(inner, b), field.from_prime(row.coeffs()[j]));
            acc = field.add(field.mul(acc, a), inner);
        }
        return acc;
    }

    BiPoly num_, den_;
};

/// F_p(alpha, beta) packaged with the field interface used by the generic
/// polynomial and matrix code.
class RationalFunctionField {
public:
    using Element = RatFunc;

    explicit RationalFunctionField(PrimeField base) : base_(base) {}

    const PrimeField& base() const noexcept { return base_; }
    std::uint32_t characteristic() const noexcept { return base_.characteristic(); }

    Element zero() const { return RatFunc(base_); }
    Element one() const { return RatFunc::constant(base_, 1); }
    Element from_int(std::int64_t v) const { return RatFunc::constant(base_, v); }
    Element from_prime(std::uint32_t v) const { return RatFunc::constant(base_, v); }
    Element alpha() const { return RatFunc::alpha(base_); }
    Element beta() const { return RatFunc::beta(base_); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    void add_mul(Element& acc, const Element& a, const Element& b) const {
        if (a.is_zero() || b.is_zero()) return;
        acc = acc + a * b;
    }
    Element inv(const Element& a) const { return a.inverse(); }
    Element div(const Element& a, const Element& b) const { return a / b; }
    Element pow(const Element& a, std::uint64_t e) const { return a.pow(e); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string to_string(const Element& a) const { return a.to_string(); }

    friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) {
        return a.base_ == b.base_;
    }

private:
    PrimeField base_;
};

}  // namespace gradsw
