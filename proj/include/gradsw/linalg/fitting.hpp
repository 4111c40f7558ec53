#pragma once

#include <cstdint>
#include <vector>

#include "gradsw/arith/poly2.hpp"
#include "gradsw/arith/prime_field.hpp"
#include "gradsw/error.hpp"
#include "gradsw/linalg/elimination.hpp"
#include "gradsw/linalg/matrix.hpp"

namespace gradsw {

/// Generalized eigenspaces of an operator whose eigenvalues lie in F_p.
template <class F>
struct FittingDecomposition {
    std::vector<typename F::Element> eigenvalues;
    std::vector<std::uint32_t> eigenvalue_residues;
    std::vector<std::vector<Vec<F>>> spaces;
    /// Minimal r with D^{p^{r+1}} = D^{p^r}.
    std::uint32_t r = 0;
    /// Columns are the concatenated eigenspace bases.
    Matrix<F> change_of_basis;
    std::vector<std::size_t> offsets;
};

/// Smallest r with D^{p^{r+1}} = D^{p^r}, searching up to `bound`; returns
/// -1 if there is none.
template <class F>
int stability_exponent(const Matrix<F>& d, std::uint32_t bound) {
    const auto p = d.field().characteristic();
    Matrix<F> cur = d;
    for (std::uint32_t r = 0; r <= bound; ++r) {
        Matrix<F> next = cur.pow(p);
        if (next == cur) return static_cast<int>(r);
        cur = std::move(next);
    }
    return -1;
}

/// ceil(log_p n) + 1.
inline std::uint32_t stability_bound(std::uint32_t p, std::size_t n) {
    std::uint32_t k = 0;
    std::uint64_t q = 1;
    while (q < n) {
        q *= p;
        ++k;
    }
    return k + 1;
}

template <class F>
FittingDecomposition<F> fitting_decomposition(const Matrix<F>& d) {
    const F& f = d.field();
    const std::size_t n = d.dim();
    const auto p = f.characteristic();
    const int r = stability_exponent(d, stability_bound(p, n));
    if (r < 0) throw HypothesisError("eigenvalues not in prime field: D^{p^{r+1}} != D^{p^r} for every admissible r");

    FittingDecomposition<F> out{{}, {}, {}, static_cast<std::uint32_t>(r), Matrix<F>(f, n, n), {}};
    std::size_t total = 0;
    for (std::uint32_t a = 0; a < p; ++a) {
        auto shifted = d - Matrix<F>::scalar(f, n, f.from_prime(a));
        auto space = kernel(shifted.pow(n));
        if (space.empty()) continue;
        out.offsets.push_back(total);
        for (const auto& v : space) out.change_of_basis.set_column(total++, v);
        out.eigenvalues.push_back(f.from_prime(a));
        out.eigenvalue_residues.push_back(a);
        out.spaces.push_back(std::move(space));
    }
    if (total != n) throw HypothesisError("eigenvalues not in prime field: generalized eigenspaces do not span");
    if (rank(out.change_of_basis) != n) throw InternalInconsistency("generalized eigenspaces are not independent");
    return out;
}

/// Coordinates of D in the Fitting-adapted basis, block diagonal.
template <class F>
Matrix<F> to_fitting_basis(const FittingDecomposition<F>& fd, const Matrix<F>& d) {
    return inverse(fd.change_of_basis) * d * fd.change_of_basis;
}

/// Embeds a matrix over F_p into a field K of the same characteristic.
template <class K>
Matrix<K> extend_scalars(const Matrix<PrimeField>& m, const K& target) {
    if (target.characteristic() != m.field().characteristic())
        throw InvalidArgument("scalar extension requires equal characteristic");
    Matrix<K> out(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = target.from_prime(m(i, j));
    return out;
}

/// P(A, B) for P in F_p[u, v] and commuting operators A, B over K.
template <class K>
Matrix<K> eval_bivariate_at_commuting_pair(const Poly2<PrimeField>& poly, const Matrix<K>& a, const Matrix<K>& b) {
    const K& f = a.field();
    if (a.dim() != b.dim()) throw InvalidArgument("operators of different dimension");
    if (a * b != b * a) throw InvalidArgument("operators do not commute; substitution is ill-defined");
    const std::size_t n = a.dim();
    Matrix<K> acc(f, n, n);
    for (int i = poly.degree_u(); i >= 0; --i) {
        const auto row = poly.row(static_cast<std::size_t>(i));
        std::vector<typename K::Element> coeffs;
        for (auto c : row.coeffs()) coeffs.push_back(f.from_prime(c));
        acc = acc * a + eval_poly(coeffs, b);
    }
    return acc;
}

}  // namespace gradsw
