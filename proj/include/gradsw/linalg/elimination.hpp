#pragma once

#include <optional>
#include <vector>

#include "gradsw/error.hpp"
#include "gradsw/linalg/matrix.hpp"

namespace gradsw {

/// Reduced row echelon form of a matrix together with its pivot columns.
template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const auto s = f.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!f.is_zero(m(r, j))) f.add_mul(m(i, j), s, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class F>
std::vector<Vec<F>> kernel(const Matrix<F>& m) {
    const F& f = m.field();
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        auto v = unit_vector(f, m.cols(), free);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    if (e.rank() + basis.size() != m.cols()) throw InternalInconsistency("rank-nullity violated");
    return basis;
}

/// Throws DomainError if m is singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    const F& f = m.field();
    const std::size_t n = m.dim();
    Matrix<F> aug(f, n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<F>::identity(f, n));
    auto e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    return e.reduced.block(0, n, n, n);
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    const F& f = m.field();
    if (b.size() != m.rows()) throw InvalidArgument("right-hand side length mismatch");
    Matrix<F> aug(f, m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    auto x = zero_vector(f, m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

/// A subspace of F^n held as a reduced echelon basis, so that membership and
/// coordinates are a single reduction pass.
template <class F>
class Subspace {
public:
    Subspace(F field, std::size_t ambient) : field_(std::move(field)), n_(ambient) {}
    Subspace(const F& field, std::size_t ambient, const std::vector<Vec<F>>& spanning)
        : field_(field), n_(ambient) {
        if (spanning.empty()) return;
        auto e = rref(Matrix<F>::from_rows(field, ambient, spanning));
        for (std::size_t i = 0; i < e.rank(); ++i) rows_.push_back(e.reduced.row(i));
        pivots_ = std::move(e.pivots);
    }

    const F& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vec<F>>& basis() const noexcept { return rows_; }

    /// v minus its projection along the echelon basis; zero iff v is in the span.
    Vec<F> residual(Vec<F> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (field_.is_zero(c)) continue;
            axpy(field_, v, field_.neg(c), rows_[i]);
        }
        return v;
    }
    bool contains(const Vec<F>& v) const {
        if (v.size() != n_) throw InvalidArgument("vector length does not match subspace");
        return is_zero_vector(field_, residual(v));
    }
    bool contains(const Subspace& o) const {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.dim() == b.dim() && a.contains(b);
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    Subspace intersect(const Subspace& o) const {
        // x in both iff x = sum a_i u_i = sum b_j w_j; solve [U | -W] (a, b) = 0
        if (rows_.empty() || o.rows_.empty()) return Subspace(field_, n_);
        const std::size_t k = rows_.size(), l = o.rows_.size();
        Matrix<F> m(field_, n_, k + l);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t r = 0; r < n_; ++r) m(r, i) = rows_[i][r];
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t r = 0; r < n_; ++r) m(r, k + j) = field_.neg(o.rows_[j][r]);
        std::vector<Vec<F>> vecs;
        for (const auto& z : kernel(m)) {
            auto x = zero_vector(field_, n_);
            for (std::size_t i = 0; i < k; ++i) axpy(field_, x, z[i], rows_[i]);
            vecs.push_back(std::move(x));
        }
        return Subspace(field_, n_, vecs);
    }

    Subspace sum(const Subspace& o) const {
        auto all = rows_;
        all.insert(all.end(), o.rows_.begin(), o.rows_.end());
        return Subspace(field_, n_, all);
    }

private:
    F field_;
    std::size_t n_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Image of a subspace spanned by `basis` under m.
template <class F>
std::vector<Vec<F>> apply_all(const Matrix<F>& m, const std::vector<Vec<F>>& basis) {
    std::vector<Vec<F>> out;
    out.reserve(basis.size());
    for (const auto& v : basis) out.push_back(m.apply(v));
    return out;
}

}  // namespace gradsw
