#include "gradsw/linalg/snf.hpp"

#include <utility>

#include "gradsw/error.hpp"

namespace gradsw {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InvalidArgument("ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("integer matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss
    IntMatrix m = *this;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SNFResult::torsion() const {
    std::vector<BigInt> t;
    for (const auto& d : invariant_factors)
        if (d > 1) t.push_back(d);
    return t;
}

namespace {

struct Work {
    IntMatrix m, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
    }
    // row a += q * row b
    void add_row(std::size_t a, std::size_t b, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(b, j) != 0) m(a, j) += q * m(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (u(b, j) != 0) u(a, j) += q * u(b, j);
    }
    // col a += q * col b
    void add_col(std::size_t a, std::size_t b, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, b) != 0) m(i, a) += q * m(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i)
            if (v(i, b) != 0) v(i, a) += q * v(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    Work w{input, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        while (true) {
            // smallest nonzero |entry| in the trailing block
            bool found = false;
            std::size_t pi = t, pj = t;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const auto& x = w.m(i, j);
                    if (x == 0) continue;
                    BigInt ax = abs(x);
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.m(i, t) == 0) continue;
                w.add_row(i, t, -(w.m(i, t) / w.m(t, t)));
                if (w.m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.m(t, j) == 0) continue;
                w.add_col(j, t, -(w.m(t, j) / w.m(t, t)));
                if (w.m(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing block by the pivot
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (w.m(i, j) % w.m(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows) break;
            w.add_row(t, bad_row, 1);
        }
        if (w.m(t, t) < 0) w.negate_row(t);
    }
done:
    SNFResult res;
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.invariant_factors.push_back(w.m(i, i));
    res.free_rank = rows - t;
    res.U = std::move(w.u);
    res.V = std::move(w.v);
    res.diagonal = std::move(w.m);
    return res;
}

void LatticeBasis::insert(std::vector<BigInt> v) {
    if (v.size() != n_) throw InvalidArgument("lattice vector length mismatch");
    for (std::size_t c = 0; c < n_; ++c) {
        if (v[c] == 0) continue;
        auto& b = rows_[c];
        if (b.empty()) {
            if (v[c] < 0)
                for (auto& x : v) x = -x;
            b = std::move(v);
            return;
        }
        // Replace (b, v) by (s b + t v, (v_c/g) b - (b_c/g) v), a unimodular change.
        BigInt a0 = b[c], b0 = v[c];
        BigInt s = 1, t = 0, s1 = 0, t1 = 1;
        BigInt x = a0, y = b0;
        while (y != 0) {
            BigInt q = x / y;
            BigInt tmp = x - q * y;
            x = y;
            y = tmp;
            tmp = s - q * s1;
            s = s1;
            s1 = tmp;
            tmp = t - q * t1;
            t = t1;
            t1 = tmp;
        }
        if (x < 0) {
            x = -x;
            s = -s;
            t = -t;
        }
        const BigInt fa = b0 / x, fb = a0 / x;
        std::vector<BigInt> nb(n_), nv(n_);
        for (std::size_t k = c; k < n_; ++k) {
            nb[k] = s * b[k] + t * v[k];
            nv[k] = fa * b[k] - fb * v[k];
        }
        b = std::move(nb);
        v = std::move(nv);
    }
}

IntMatrix LatticeBasis::as_columns() const {
    std::vector<const std::vector<BigInt>*> gens;
    for (const auto& r : rows_)
        if (!r.empty()) gens.push_back(&r);
    IntMatrix m(n_, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n_; ++i) m(i, j) = (*gens[j])[i];
    return m;
}

}  // namespace gradsw
