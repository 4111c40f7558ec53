#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gradsw/arith/upoly.hpp"
#include "gradsw/error.hpp"

namespace gradsw {

/// Dense polynomial in two variables (u, v) over a field F. Coefficients are
/// stored row-major by u-exponent; the table is trimmed so that the last row
/// and last column are nonzero. The zero polynomial has degree -1 in both
/// variables.
template <class F>
class Poly2 {
public:
    using Field = F;
    using Element = typename F::Element;

    explicit Poly2(F field) : field_(std::move(field)) {}

    static Poly2 constant(const F& field, Element c) {
        Poly2 r(field);
        r.set(0, 0, std::move(c));
        return r;
    }
    static Poly2 monomial(const F& field, Element c, std::size_t i, std::size_t j) {
        Poly2 r(field);
        r.set(i, j, std::move(c));
        return r;
    }
    static Poly2 u(const F& field) { return monomial(field, field.one(), 1, 0); }
    static Poly2 v(const F& field) { return monomial(field, field.one(), 0, 1); }
    /// p(u) viewed as a polynomial in (u, v).
    static Poly2 from_u(const UPoly<F>& p) {
        Poly2 r(p.field());
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.set(i, 0, p.coeffs()[i]);
        return r;
    }
    static Poly2 from_v(const UPoly<F>& p) {
        Poly2 r(p.field());
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) r.set(0, j, p.coeffs()[j]);
        return r;
    }

    const F& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return rows_ == 0; }
    int degree_u() const noexcept { return static_cast<int>(rows_) - 1; }
    int degree_v() const noexcept { return static_cast<int>(cols_) - 1; }
    int total_degree() const {
        int best = -1;
        for_each([&](std::size_t i, std::size_t j, const Element&) { best = std::max(best, static_cast<int>(i + j)); });
        return best;
    }

    Element coeff(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) return field_.zero();
        return c_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, Element val) {
        if (i >= rows_ || j >= cols_) {
            if (field_.is_zero(val)) return;
            reshape(std::max(rows_, i + 1), std::max(cols_, j + 1));
        }
        c_[i * cols_ + j] = std::move(val);
        trim();
    }
    void add_to(std::size_t i, std::size_t j, const Element& val) {
        if (field_.is_zero(val)) return;
        if (i >= rows_ || j >= cols_) reshape(std::max(rows_, i + 1), std::max(cols_, j + 1));
        auto& slot = c_[i * cols_ + j];
        slot = field_.add(slot, val);
        trim();
    }

    /// Visits every nonzero coefficient as (i, j, c).
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const auto& c = c_[i * cols_ + j];
                if (!field_.is_zero(c)) fn(i, j, c);
            }
    }

    /// Coefficient of u^i as a polynomial in v.
    UPoly<F> row(std::size_t i) const {
        std::vector<Element> r;
        if (i < rows_) r.assign(c_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                c_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
        return UPoly<F>(field_, std::move(r));
    }
    /// Coefficient of v^j as a polynomial in u.
    UPoly<F> column(std::size_t j) const {
        std::vector<Element> r(rows_, field_.zero());
        if (j < cols_)
            for (std::size_t i = 0; i < rows_; ++i) r[i] = c_[i * cols_ + j];
        return UPoly<F>(field_, std::move(r));
    }

    Poly2 operator-() const {
        Poly2 r(*this);
        for (auto& x : r.c_) x = field_.neg(x);
        return r;
    }
    Poly2& operator+=(const Poly2& o) {
        o.for_each([&](std::size_t i, std::size_t j, const Element& c) { add_raw(i, j, c); });
        trim();
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        o.for_each([&](std::size_t i, std::size_t j, const Element& c) { add_raw(i, j, field_.neg(c)); });
        trim();
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        const F& f = a.field_;
        Poly2 r(f);
        if (a.is_zero() || b.is_zero()) return r;
        r.reshape(a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
        a.for_each([&](std::size_t i, std::size_t j, const Element& x) {
            b.for_each([&](std::size_t k, std::size_t l, const Element& y) {
                f.add_mul(r.c_[(i + k) * r.cols_ + (j + l)], x, y);
            });
        });
        r.trim();
        return r;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    Poly2 scaled(const Element& s) const {
        Poly2 r(*this);
        for (auto& x : r.c_) x = field_.mul(x, s);
        r.trim();
        return r;
    }

    Poly2 pow(std::uint64_t e) const {
        Poly2 result = constant(field_, field_.one());
        Poly2 base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Drops every monomial of total degree >= n.
    Poly2 truncated_total(std::size_t n) const {
        Poly2 r(field_);
        for_each([&](std::size_t i, std::size_t j, const Element& c) {
            if (i + j < n) r.add_raw(i, j, c);
        });
        r.trim();
        return r;
    }

    /// Partial derivative with respect to v.
    Poly2 derivative_v() const {
        Poly2 r(field_);
        for_each([&](std::size_t i, std::size_t j, const Element& c) {
            if (j > 0) r.add_raw(i, j - 1, field_.mul(field_.from_int(static_cast<std::int64_t>(j)), c));
        });
        r.trim();
        return r;
    }
    Poly2 derivative_u() const {
        Poly2 r(field_);
        for_each([&](std::size_t i, std::size_t j, const Element& c) {
            if (i > 0) r.add_raw(i - 1, j, field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c));
        });
        r.trim();
        return r;
    }

    /// Substitutes u = a, leaving a polynomial in v.
    UPoly<F> eval_u(const Element& a) const {
        UPoly<F> acc(field_);
        for (std::size_t i = rows_; i-- > 0;) acc = acc.scaled(a) + row(i);
        return acc;
    }
    /// Substitutes v = b, leaving a polynomial in u.
    UPoly<F> eval_v(const Element& b) const {
        UPoly<F> acc(field_);
        for (std::size_t j = cols_; j-- > 0;) acc = acc.scaled(b) + column(j);
        return acc;
    }
    Element eval(const Element& a, const Element& b) const { return eval_u(a).eval(b); }

    /// Swaps the roles of u and v.
    Poly2 swapped() const {
        Poly2 r(field_);
        for_each([&](std::size_t i, std::size_t j, const Element& c) { r.add_raw(j, i, c); });
        r.trim();
        return r;
    }

    friend bool operator==(const Poly2& a, const Poly2& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!a.field_.equal(a.c_[k], b.c_[k])) return false;
        return true;
    }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    std::string to_string(const std::string& uname = "u", const std::string& vname = "v") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for_each([&](std::size_t i, std::size_t j, const Element& c) {
            if (!first) os << " + ";
            first = false;
            os << field_.to_string(c);
            if (i) os << "*" << uname << (i > 1 ? "^" + std::to_string(i) : "");
            if (j) os << "*" << vname << (j > 1 ? "^" + std::to_string(j) : "");
        });
        return os.str();
    }

private:
    void reshape(std::size_t rows, std::size_t cols) {
        if (rows == rows_ && cols == cols_) return;
        std::vector<Element> n(rows * cols, field_.zero());
        for (std::size_t i = 0; i < std::min(rows, rows_); ++i)
            for (std::size_t j = 0; j < std::min(cols, cols_); ++j) n[i * cols + j] = std::move(c_[i * cols_ + j]);
        c_ = std::move(n);
        rows_ = rows;
        cols_ = cols;
    }
    // Adds without trimming; callers trim once at the end.
    void add_raw(std::size_t i, std::size_t j, const Element& val) {
        if (field_.is_zero(val)) return;
        if (i >= rows_ || j >= cols_) reshape(std::max(rows_, i + 1), std::max(cols_, j + 1));
        auto& slot = c_[i * cols_ + j];
        slot = field_.add(slot, val);
    }
    void trim() {
        std::size_t rows = rows_, cols = cols_;
        auto row_zero = [&](std::size_t i) {
            for (std::size_t j = 0; j < cols; ++j)
                if (!field_.is_zero(c_[i * cols_ + j])) return false;
            return true;
        };
        auto col_zero = [&](std::size_t j) {
            for (std::size_t i = 0; i < rows; ++i)
                if (!field_.is_zero(c_[i * cols_ + j])) return false;
            return true;
        };
        while (rows > 0 && row_zero(rows - 1)) --rows;
        while (cols > 0 && col_zero(cols - 1)) --cols;
        if (rows == 0 || cols == 0) {
            rows_ = cols_ = 0;
            c_.clear();
            return;
        }
        reshape(rows, cols);
    }

    F field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Element> c_;
};

/// Maps coefficients through `embed` into another field.
template <class K, class F, class Embed>
Poly2<K> change_ring(const Poly2<F>& p, const K& target, Embed&& embed) {
    Poly2<K> r(target);
    p.for_each([&](std::size_t i, std::size_t j, const typename F::Element& c) { r.add_to(i, j, embed(c)); });
    return r;
}

/// p(a(u, v) ... ) style substitution: returns sum c_k * s^k for a univariate
/// p and a bivariate s, all truncated to total degree < n when n > 0.
template <class F>
Poly2<F> substitute(const UPoly<F>& p, const Poly2<F>& s, std::size_t n = 0) {
    const F& f = p.field();
    Poly2<F> acc(f);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = acc * s + Poly2<F>::constant(f, p.coeffs()[k]);
        if (n) acc = acc.truncated_total(n);
    }
    return acc;
}

/// Rewrites every u^i (i >= pu) via u^pu = a and every v^j (j >= pv) via
/// v^pv = b, where a and b are constants of F. The result has degree < pu in u
/// and < pv in v; the map is idempotent.
template <class F>
Poly2<F> reduce_mod_relations(const Poly2<F>& p, std::size_t pu, const typename F::Element& a, std::size_t pv,
                              const typename F::Element& b) {
    const F& f = p.field();
    Poly2<F> r(f);
    p.for_each([&](std::size_t i, std::size_t j, const typename F::Element& c) {
        auto coef = c;
        coef = f.mul(coef, f.pow(a, i / pu));
        coef = f.mul(coef, f.pow(b, j / pv));
        r.add_to(i % pu, j % pv, coef);
    });
    return r;
}

}  // namespace gradsw
