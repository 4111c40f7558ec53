#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gradsw/error.hpp"

namespace gradsw {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
Vec<F> zero_vector(const F& f, std::size_t n) {
    return Vec<F>(n, f.zero());
}

template <class F>
Vec<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
    auto v = zero_vector(f, n);
    v.at(i) = f.one();
    return v;
}

template <class F>
bool is_zero_vector(const F& f, const Vec<F>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <class F>
bool vectors_equal(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.equal(a[i], b[i])) return false;
    return true;
}

/// y += s * x
template <class F>
void axpy(const F& f, Vec<F>& y, const typename F::Element& s, const Vec<F>& x) {
    if (f.is_zero(s)) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!f.is_zero(x[i])) f.add_mul(y[i], s, x[i]);
}

template <class F>
Vec<F> scaled(const F& f, const Vec<F>& x, const typename F::Element& s) {
    Vec<F> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(x[i], s);
    return r;
}

template <class F>
Vec<F> add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

template <class F>
Vec<F> sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

template <class F>
std::vector<std::size_t> support(const F& f, const Vec<F>& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!f.is_zero(v[i])) s.push_back(i);
    return s;
}

/// Dense matrix over a field F, row-major. Square instances represent linear
/// maps acting on column vectors.
template <class F>
class Matrix {
public:
    using Field = F;
    using Element = typename F::Element;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }
    static Matrix scalar(const F& f, std::size_t n, const Element& s) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix diagonal(const F& f, const Vec<F>& d) {
        Matrix m(f, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const F& f, std::size_t rows, const std::vector<Vec<F>>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw InvalidArgument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(const F& f, std::size_t cols, const std::vector<Vec<F>>& rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::size_t dim() const {
        if (!is_square()) throw InvalidArgument("matrix is not square");
        return rows_;
    }

    Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec<F> row(std::size_t i) const {
        return Vec<F>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    Vec<F> column(std::size_t j) const {
        Vec<F> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const Vec<F>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Vec<F> apply(const Vec<F>& x) const {
        if (x.size() != cols_) throw InvalidArgument("vector length does not match matrix");
        Vec<F> y(rows_, field_.zero());
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_zero(x[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const auto& m = (*this)(i, j);
                if (!field_.is_zero(m)) field_.add_mul(y[i], m, x[j]);
            }
        }
        return y;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = field_.add(a_[k], o.a_[k]);
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = field_.sub(a_[k], o.a_[k]);
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
        const F& f = a.field_;
        Matrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                if (f.is_zero(x)) continue;
                const auto* brow = &b.a_[k * b.cols_];
                auto* crow = &c.a_[i * c.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!f.is_zero(brow[j])) f.add_mul(crow[j], x, brow[j]);
            }
        return c;
    }
    Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

    Matrix scaled(const Element& s) const {
        Matrix r(*this);
        for (auto& x : r.a_) x = field_.mul(x, s);
        return r;
    }

    Matrix pow(std::uint64_t e) const {
        Matrix result = identity(field_, dim());
        Matrix base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!a.field_.equal(a.a_[k], b.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << field_.to_string((*this)(i, j));
            os << "]\n";
        }
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch");
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<Element> a_;
};

/// Applies a univariate polynomial (given by coefficients in F) to a square matrix.
template <class F>
Matrix<F> eval_poly(const std::vector<typename F::Element>& coeffs, const Matrix<F>& m) {
    const F& f = m.field();
    Matrix<F> acc(f, m.dim(), m.dim());
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < m.dim(); ++i) acc(i, i) = f.add(acc(i, i), coeffs[k]);
    }
    return acc;
}

/// Smallest k with m^k = 0, or 0 if m is not nilpotent.
template <class F>
std::size_t nilpotency_index(const Matrix<F>& m) {
    const std::size_t n = m.dim();
    if (m.is_zero()) return 1;
    Matrix<F> p = m;
    for (std::size_t k = 2; k <= n; ++k) {
        p = p * m;
        if (p.is_zero()) return k;
    }
    return 0;
}

}  // namespace gradsw
