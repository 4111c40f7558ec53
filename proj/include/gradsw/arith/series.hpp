#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gradsw/arith/upoly.hpp"
#include "gradsw/error.hpp"

namespace gradsw {

/// Power series c_0 + c_1 X + ... known modulo X^N. Binary operations take
/// the smaller of the two truncation orders.
template <class F>
class TruncSeries {
public:
    using Field = F;
    using Element = typename F::Element;

    TruncSeries(F field, std::size_t order) : field_(std::move(field)), c_(order, field_.zero()) {}
    TruncSeries(F field, std::size_t order, const std::vector<Element>& coeffs)
        : field_(std::move(field)), c_(order, field_.zero()) {
        for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) c_[i] = coeffs[i];
    }
    static TruncSeries from_poly(const UPoly<F>& p, std::size_t order) {
        return TruncSeries(p.field(), order, p.coeffs());
    }
    static TruncSeries one(const F& field, std::size_t order) {
        TruncSeries s(field, order);
        if (order) s.c_[0] = field.one();
        return s;
    }

    const F& field() const noexcept { return field_; }
    std::size_t order() const noexcept { return c_.size(); }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Element& operator[](std::size_t i) { return c_.at(i); }
    const Element& operator[](std::size_t i) const { return c_.at(i); }

    UPoly<F> to_poly() const { return UPoly<F>(field_, c_); }

    TruncSeries truncated(std::size_t order) const {
        return TruncSeries(field_, std::min(order, c_.size()), c_);
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.field_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.field_.add(a.c_[i], b.c_[i]);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.field_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.field_.sub(a.c_[i], b.c_[i]);
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const F& f = a.field_;
        const std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(f, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) f.add_mul(r.c_[i + j], a.c_[i], b.c_[j]);
        }
        return r;
    }

    TruncSeries scaled(const Element& s) const {
        TruncSeries r(*this);
        for (auto& v : r.c_) v = field_.mul(v, s);
        return r;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    TruncSeries inverse() const {
        const std::size_t n = order();
        if (n == 0) return *this;
        if (field_.is_zero(c_[0])) throw DomainError("series with zero constant term is not invertible");
        TruncSeries r(field_, n);
        const auto c0inv = field_.inv(c_[0]);
        r.c_[0] = c0inv;
        for (std::size_t k = 1; k < n; ++k) {
            Element acc = field_.zero();
            for (std::size_t i = 1; i <= k; ++i) field_.add_mul(acc, c_[i], r.c_[k - i]);
            r.c_[k] = field_.neg(field_.mul(acc, c0inv));
        }
        return r;
    }

    /// this(inner); inner must have zero constant term. Result order is the
    /// smaller of the two orders.
    TruncSeries compose(const TruncSeries& inner) const {
        if (inner.order() && !field_.is_zero(inner.c_[0]))
            throw DomainError("composition requires an inner series with zero constant term");
        const std::size_t n = std::min(order(), inner.order());
        TruncSeries acc(field_, n);
        for (std::size_t k = n; k-- > 0;) {
            acc = acc * inner.truncated(n);
            acc.c_[0] = field_.add(acc.c_[0], c_[k]);
        }
        return acc;
    }

    /// Formal derivative; the order drops by one.
    TruncSeries derivative() const {
        const std::size_t n = order() ? order() - 1 : 0;
        TruncSeries r(field_, n);
        for (std::size_t i = 0; i < n; ++i)
            r.c_[i] = field_.mul(field_.from_int(static_cast<std::int64_t>(i + 1)), c_[i + 1]);
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) return false;
        for (std::size_t i = 0; i < a.order(); ++i)
            if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    F field_;
    std::vector<Element> c_;
};

}  // namespace gradsw
