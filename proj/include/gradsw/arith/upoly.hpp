#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gradsw/error.hpp"

namespace gradsw {

/// Dense univariate polynomial over a field F. Trailing zero coefficients are
/// always trimmed, so the zero polynomial has an empty coefficient vector and
/// degree -1.
template <class F>
class UPoly {
public:
    using Field = F;
    using Element = typename F::Element;

    explicit UPoly(F field) : field_(std::move(field)) {}
    UPoly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const F& field, Element c) { return UPoly(field, {std::move(c)}); }
    static UPoly monomial(const F& field, Element c, std::size_t deg) {
        std::vector<Element> v(deg + 1, field.zero());
        v[deg] = std::move(c);
        return UPoly(field, std::move(v));
    }
    /// The variable itself.
    static UPoly x(const F& field) { return monomial(field, field.one(), 1); }

    const F& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Element>& coeffs() const noexcept { return c_; }

    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Element leading() const { return c_.empty() ? field_.zero() : c_.back(); }
    void set_coeff(std::size_t i, Element v) {
        if (i >= c_.size()) c_.resize(i + 1, field_.zero());
        c_[i] = std::move(v);
        trim();
    }

    Element eval(const Element& x) const {
        Element acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
        return acc;
    }

    UPoly operator-() const {
        UPoly r(*this);
        for (auto& v : r.c_) v = field_.neg(v);
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        const F& f = a.field_;
        if (a.is_zero() || b.is_zero()) return UPoly(f);
        std::vector<Element> r(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) f.add_mul(r[i + j], a.c_[i], b.c_[j]);
        }
        return UPoly(f, std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly scaled(const Element& s) const {
        UPoly r(*this);
        for (auto& v : r.c_) v = field_.mul(v, s);
        r.trim();
        return r;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly(field_);
        std::vector<Element> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]);
        return UPoly(field_, std::move(r));
    }

    /// Monic multiple (zero stays zero).
    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading()));
    }

    UPoly pow(std::uint64_t e) const {
        UPoly result = constant(field_, field_.one());
        UPoly base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Composition this(inner).
    UPoly compose(const UPoly& inner) const {
        UPoly acc(field_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(field_, *it);
        return acc;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << field_.to_string(c_[i]);
            if (i > 0) os << "*" << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Element> c_;
};

/// Quotient and remainder of a by b (b nonzero).
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
    const F& f = a.field();
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    auto r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly<F>(f), a};
    std::vector<typename F::Element> q(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
    const auto lead_inv = f.inv(b.leading());
    for (int d = a.degree(); d >= db; --d) {
        auto c = f.mul(r[static_cast<std::size_t>(d)], lead_inv);
        q[static_cast<std::size_t>(d - db)] = c;
        if (f.is_zero(c)) continue;
        for (int i = 0; i <= db; ++i) {
            auto& slot = r[static_cast<std::size_t>(d - db + i)];
            slot = f.sub(slot, f.mul(c, b.coeff(static_cast<std::size_t>(i))));
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly<F>(f, std::move(q)), UPoly<F>(f, std::move(r))};
}

template <class F>
UPoly<F> operator%(const UPoly<F>& a, const UPoly<F>& b) {
    return divmod(a, b).second;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> ext_gcd(const UPoly<F>& a, const UPoly<F>& b) {
    const F& f = a.field();
    UPoly<F> r0 = a, r1 = b;
    UPoly<F> s0 = UPoly<F>::constant(f, f.one()), s1(f);
    UPoly<F> t0(f), t1 = UPoly<F>::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto li = f.inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

/// base^e mod m.
template <class F>
UPoly<F> powmod(UPoly<F> base, std::uint64_t e, const UPoly<F>& m) {
    const F& f = base.field();
    UPoly<F> result = UPoly<F>::constant(f, f.one()) % m;
    base = base % m;
    while (e) {
        if (e & 1) result = (result * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return result;
}

}  // namespace gradsw
