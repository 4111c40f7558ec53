#include "doctest.h"

#include <cmath>
#include <random>

#include "gradsw/arith/extension_field.hpp"
#include "gradsw/arith/special.hpp"
#include "gradsw/linalg/elimination.hpp"
#include "gradsw/linalg/fitting.hpp"
#include "gradsw/linalg/snf.hpp"

using namespace gradsw;
using M = Matrix<PrimeField>;
using BiPoly = Poly2<PrimeField>;

namespace {

M random_matrix(const PrimeField& F, std::size_t n, std::mt19937& rng) {
    M m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % F.characteristic();
    return m;
}

// Random S + N with S diagonal over F_p and N nilpotent commuting with S:
// conjugate a block-diagonal Jordan-type matrix by a random invertible P.
M random_fitting_matrix(const PrimeField& F, std::size_t n, std::mt19937& rng) {
    M j(F, n, n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t len = 1 + rng() % 3;
        if (i + len > n) len = n - i;
        const auto a = rng() % F.characteristic();
        for (std::size_t k = 0; k < len; ++k) {
            j(i + k, i + k) = a;
            if (k + 1 < len) j(i + k, i + k + 1) = 1;
        }
        i += len;
    }
    while (true) {
        auto p = random_matrix(F, n, rng);
        if (rank(p) == n) return p * j * inverse(p);
    }
}

BigInt brute_det(const IntMatrix& m) {
    // Laplace expansion along the first row.
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    BigInt d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        d += (c % 2 ? -1 : 1) * m(0, c) * brute_det(minor);
    }
    return d;
}

}  // namespace

TEST_CASE("kernel") {
    PrimeField F(5);
    CHECK(kernel(M::identity(F, 4)).empty());
    CHECK(kernel(M(F, 3, 3)).size() == 3);
    M j2(F, 2, 2);
    j2(0, 1) = 1;
    auto k = kernel(j2);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec<PrimeField>{1, 0});
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        M a(F, 4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t jj = 0; jj < 6; ++jj) a(i, jj) = rng() % 5;
        for (const auto& v : kernel(a)) CHECK(is_zero_vector(F, a.apply(v)));
        CHECK(kernel(a).size() + rank(a) == 6);
    }
}

TEST_CASE("inverse and solve") {
    PrimeField F(7);
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto a = random_matrix(F, 5, rng);
        if (rank(a) < 5) {
            CHECK_THROWS_AS(inverse(a), DomainError);
            continue;
        }
        CHECK(a * inverse(a) == M::identity(F, 5));
        Vec<PrimeField> b{1, 2, 3, 4, 5};
        auto x = solve(a, b);
        REQUIRE(x);
        CHECK(a.apply(*x) == b);
    }
    M z(F, 2, 2);
    CHECK_FALSE(solve(z, Vec<PrimeField>{1, 0}));
}

TEST_CASE("subspaces") {
    PrimeField F(5);
    Subspace<PrimeField> a(F, 3, {{1, 0, 0}, {0, 1, 0}});
    Subspace<PrimeField> b(F, 3, {{0, 1, 0}, {0, 0, 1}});
    auto c = a.intersect(b);
    CHECK(c.dim() == 1);
    CHECK(c.contains(Vec<PrimeField>{0, 3, 0}));
    CHECK(a.sum(b).dim() == 3);
    CHECK(a == Subspace<PrimeField>(F, 3, {{1, 1, 0}, {1, 4, 0}, {2, 2, 0}}));
    CHECK_FALSE(a.contains(Vec<PrimeField>{0, 0, 1}));
}

TEST_CASE("Fitting decomposition") {
    PrimeField F(5);
    M n(F, 4, 4);
    n(0, 1) = 1;
    n(1, 2) = 1;
    auto fd = fitting_decomposition(n);
    CHECK(fd.eigenvalue_residues == std::vector<std::uint32_t>{0});
    CHECK(fd.spaces[0].size() == 4);

    auto d = M::diagonal(F, {0, 1, 2});
    auto fd2 = fitting_decomposition(d);
    CHECK(fd2.eigenvalue_residues == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(fd2.r == 0);
    for (const auto& s : fd2.spaces) CHECK(s.size() == 1);

    // characteristic polynomial t^2 - 2 is irreducible over F_5
    M rot(F, 2, 2);
    rot(0, 1) = 2;
    rot(1, 0) = 1;
    CHECK_THROWS_AS(fitting_decomposition(rot), HypothesisError);

    std::mt19937 rng(5);
    for (int t = 0; t < 8; ++t) {
        auto m = random_fitting_matrix(F, 8, rng);
        auto f = fitting_decomposition(m);
        // block-diagonal reconstruction reproduces m
        auto blocks = to_fitting_basis(f, m);
        for (std::size_t k = 0; k < f.spaces.size(); ++k) {
            const auto o = f.offsets[k], len = f.spaces[k].size();
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = o; j < o + len; ++j)
                    if (i < o || i >= o + len) CHECK(blocks(i, j) == 0);
        }
        CHECK(f.change_of_basis * blocks * inverse(f.change_of_basis) == m);
        // D^{p^{r+1}} = D^{p^r} iff (D^p - D)^{p^r} = 0, and r is minimal
        const auto q = static_cast<std::uint64_t>(std::pow(5, f.r));
        CHECK(m.pow(q * 5) == m.pow(q));
        CHECK((m.pow(5) - m).pow(q).is_zero());
        if (f.r > 0) CHECK_FALSE((m.pow(5) - m).pow(q / 5).is_zero());
    }
}

TEST_CASE("evaluation at commuting operators") {
    PrimeField F(7);
    // alpha + X at (Id, 0)
    auto P = BiPoly::u(F) + BiPoly::v(F);
    CHECK(eval_bivariate_at_commuting_pair(P, M::identity(F, 3), M(F, 3, 3)) == M::identity(F, 3));
    auto Q = BiPoly::u(F) * BiPoly::v(F);
    CHECK(eval_bivariate_at_commuting_pair(Q, M::diagonal(F, {1, 2}), M::diagonal(F, {3, 4})) == M::diagonal(F, {3, 1}));
    M a(F, 2, 2), b(F, 2, 2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    CHECK_THROWS_AS(eval_bivariate_at_commuting_pair(P, a, b), InvalidArgument);

    // L^{(alpha)}_{p-1} at alpha = 0, X = B nilpotent is E(B)
    PrimeField F5(5);
    M nil(F5, 4, 4);
    nil(0, 1) = 1;
    nil(1, 2) = 3;
    nil(2, 3) = 2;
    auto E = truncated_exponential(5);
    CHECK(eval_bivariate_at_commuting_pair(laguerre_bivariate(5), M(F5, 4, 4), nil) == eval_poly(E.coeffs(), nil));

    // multiplicativity on commuting pairs generated from one seed matrix
    std::mt19937 rng(2);
    for (int t = 0; t < 5; ++t) {
        auto s = random_matrix(F, 4, rng);
        auto A = s * s + s, B = s.pow(3) + M::identity(F, 4);
        BiPoly p1(F), p2(F);
        for (int k = 0; k < 4; ++k) {
            p1.add_to(rng() % 3, rng() % 3, rng() % 7);
            p2.add_to(rng() % 3, rng() % 3, rng() % 7);
        }
        CHECK(eval_bivariate_at_commuting_pair(p1 * p2, A, B) ==
              eval_bivariate_at_commuting_pair(p1, A, B) * eval_bivariate_at_commuting_pair(p2, A, B));
    }
}

TEST_CASE("scalar extension preserves rank") {
    PrimeField F(5);
    auto K = ExtensionField::artin_schreier(5);
    CHECK(extend_scalars(M::identity(F, 3), K) == Matrix<ExtensionField>::identity(K, 3));
    std::mt19937 rng(9);
    for (int t = 0; t < 5; ++t) {
        auto m = random_matrix(F, 6, rng);
        m.set_column(5, m.column(0));
        CHECK(rank(extend_scalars(m, K)) == rank(m));
    }
}

TEST_CASE("Smith normal form") {
    auto r = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(r.invariant_factors == std::vector<BigInt>{1, 6});
    CHECK(r.free_rank == 0);
    auto z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.invariant_factors.empty());
    CHECK(z.free_rank == 2);
    auto id = smith_normal_form(IntMatrix::identity(4));
    CHECK(id.invariant_factors == std::vector<BigInt>(4, 1));
    CHECK(id.free_rank == 0);

    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<int>(rng() % 19) - 9;
        auto s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.diagonal);
        CHECK(abs(brute_det(s.U)) == 1);
        CHECK(abs(brute_det(s.V)) == 1);
        CHECK(s.U.determinant() == brute_det(s.U));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.diagonal(i, j) == 0);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        for (const auto& d : s.invariant_factors) CHECK(d > 0);
    }
}

TEST_CASE("lattice basis matches direct SNF") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + rng() % 4, k = 1 + rng() % 8;
        IntMatrix m(n, k);
        LatticeBasis lb(n);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<BigInt> v(n);
            for (std::size_t i = 0; i < n; ++i) m(i, j) = v[i] = static_cast<int>(rng() % 11) - 5;
            lb.insert(v);
        }
        auto a = smith_normal_form(m), b = smith_normal_form(lb.as_columns());
        CHECK(a.torsion() == b.torsion());
        CHECK(a.free_rank == b.free_rank);
    }
}
