#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gradsw/arith/prime_field.hpp"
#include "gradsw/error.hpp"
#include "gradsw/linalg/matrix.hpp"

namespace gradsw {

/// Finite-dimensional algebra over F given by structure constants
/// e_i e_j = sum_k c_{ij}^k e_k. Nothing beyond bilinearity is assumed.
template <class F>
class Algebra {
public:
    using Field = F;
    using Element = typename F::Element;
    struct Term {
        std::size_t k;
        Element c;
    };

    Algebra(F field, std::vector<std::string> names)
        : field_(std::move(field)), names_(std::move(names)), table_(names_.size() * names_.size()) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (!index_.emplace(names_[i], i).second) throw InvalidArgument("duplicate basis name " + names_[i]);
    }

    const F& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Adds c to c_{ij}^k; zero results are dropped.
    void add_constant(std::size_t i, std::size_t j, std::size_t k, const Element& c) {
        const std::size_t n = dim();
        if (i >= n || j >= n || k >= n) throw InvalidArgument("structure constant index out of range");
        if (field_.is_zero(c)) return;
        auto& terms = table_[i * n + j];
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->k != k) continue;
            it->c = field_.add(it->c, c);
            if (field_.is_zero(it->c)) terms.erase(it);
            return;
        }
        terms.push_back({k, c});
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    }

    const std::vector<Term>& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    Vec<F> basis_product_vector(std::size_t i, std::size_t j) const {
        auto out = zero_vector(field_, dim());
        for (const auto& t : basis_product(i, j)) out[t.k] = t.c;
        return out;
    }

    Vec<F> product(const Vec<F>& u, const Vec<F>& v) const {
        const std::size_t n = dim();
        if (u.size() != n || v.size() != n) throw InvalidArgument("vector length does not match algebra dimension");
        auto out = zero_vector(field_, n);
        const auto su = support(field_, u), sv = support(field_, v);
        for (auto i : su)
            for (auto j : sv) {
                const auto& terms = table_[i * n + j];
                if (terms.empty()) continue;
                const auto uv = field_.mul(u[i], v[j]);
                for (const auto& t : terms) field_.add_mul(out[t.k], uv, t.c);
            }
        return out;
    }

    /// Visits (i, j, k, c) for every nonzero structure constant, in (i, j, k) order.
    template <class Fn>
    void for_each_constant(Fn&& fn) const {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& t : table_[i * n + j]) fn(i, j, t.k, t.c);
    }

    std::size_t nonzero_constants() const {
        std::size_t c = 0;
        for (const auto& t : table_) c += t.size();
        return c;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        if (a.names_ != b.names_) return false;
        for (std::size_t s = 0; s < a.table_.size(); ++s) {
            const auto &x = a.table_[s], &y = b.table_[s];
            if (x.size() != y.size()) return false;
            for (std::size_t t = 0; t < x.size(); ++t)
                if (x[t].k != y[t].k || !a.field_.equal(x[t].c, y[t].c)) return false;
        }
        return true;
    }

private:
    F field_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Term>> table_;
};

/// The same structure constants viewed over an extension field K.
template <class K>
Algebra<K> extend_scalars(const Algebra<PrimeField>& a, const K& target) {
    if (target.characteristic() != a.field().characteristic())
        throw InvalidArgument("scalar extension requires equal characteristic");
    Algebra<K> out(target, a.names());
    a.for_each_constant([&](std::size_t i, std::size_t j, std::size_t k, std::uint32_t c) {
        out.add_constant(i, j, k, target.from_prime(c));
    });
    return out;
}

/// Matrix of u -> z u.
template <class F>
Matrix<F> ad(const Algebra<F>& a, const Vec<F>& z) {
    const F& f = a.field();
    const std::size_t n = a.dim();
    if (z.size() != n) throw InvalidArgument("vector length does not match algebra dimension");
    Matrix<F> m(f, n, n);
    for (auto i : support(f, z))
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : a.basis_product(i, j)) f.add_mul(m(t.k, j), z[i], t.c);
    return m;
}

template <class F>
Matrix<F> ad_basis(const Algebra<F>& a, std::size_t i) {
    return ad(a, unit_vector(a.field(), a.dim(), i));
}

struct DerivationCheck {
    bool ok = true;
    /// First basis pair (i, j) violating D(e_i e_j) = D(e_i) e_j + e_i D(e_j).
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

template <class F>
DerivationCheck is_derivation(const Algebra<F>& a, const Matrix<F>& d) {
    const F& f = a.field();
    const std::size_t n = a.dim();
    if (d.dim() != n) throw InvalidArgument("derivation dimension does not match algebra");
    std::vector<Vec<F>> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = d.column(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = zero_vector(f, n);
            for (const auto& t : a.basis_product(i, j)) axpy(f, lhs, t.c, col[t.k]);
            auto rhs = a.product(col[i], unit_vector(f, n, j));
            auto r2 = a.product(unit_vector(f, n, i), col[j]);
            if (!vectors_equal(f, lhs, add(f, rhs, r2))) return {false, std::make_pair(i, j)};
        }
    return {};
}

/// First basis triple violating the Jacobi identity, if any.
template <class F>
std::optional<std::array<std::size_t, 3>> jacobi_violation(const Algebra<F>& a) {
    const F& f = a.field();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                auto acc = zero_vector(f, n);
                // [[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]
                for (const auto& t : ij)
                    for (const auto& s : a.basis_product(t.k, k)) f.add_mul(acc[s.k], t.c, s.c);
                for (const auto& t : a.basis_product(j, k))
                    for (const auto& s : a.basis_product(t.k, i)) f.add_mul(acc[s.k], t.c, s.c);
                for (const auto& t : a.basis_product(k, i))
                    for (const auto& s : a.basis_product(t.k, j)) f.add_mul(acc[s.k], t.c, s.c);
                if (!is_zero_vector(f, acc)) return std::array<std::size_t, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

/// First basis pair with e_i e_j != -e_j e_i, if any.
template <class F>
std::optional<std::pair<std::size_t, std::size_t>> anticommutativity_violation(const Algebra<F>& a) {
    const F& f = a.field();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) {
            auto s = add(f, a.basis_product_vector(i, j), a.basis_product_vector(j, i));
            if (!is_zero_vector(f, s)) return std::make_pair(i, j);
        }
    return std::nullopt;
}

}  // namespace gradsw
