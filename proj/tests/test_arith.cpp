#include "doctest.h"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "gradsw/arith/extension_field.hpp"
#include "gradsw/arith/ratfunc.hpp"
#include "gradsw/arith/series.hpp"
#include "gradsw/arith/special.hpp"

using namespace gradsw;

namespace {

// Inverse mod p by brute search; independent of the field implementation.
std::uint32_t naive_inverse(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    return 0;
}

std::uint64_t naive_factorial(std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint32_t naive_binom_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    if (b > a) return 0;
    boost::multiprecision::cpp_int r = 1;
    for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return static_cast<std::uint32_t>(r % p);
}

}  // namespace

TEST_CASE("prime field basics") {
    CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(101), InvalidArgument);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 97u}) {
        PrimeField F(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.inv(a) == naive_inverse(a, p));
        }
        CHECK_THROWS_AS(F.inv(0), DomainError);
    }
}

TEST_CASE("truncated exponential") {
    CHECK(truncated_exponential(2).coeffs() == std::vector<std::uint32_t>{1, 1});
    CHECK(truncated_exponential(3).coeffs() == std::vector<std::uint32_t>{1, 1, naive_inverse(2, 3)});
    CHECK(truncated_exponential(5).coeff(4) == naive_inverse(24 % 5, 5));
    CHECK_THROWS(truncated_exponential(9));
}

TEST_CASE("binomials mod p") {
    PrimeField F3(3);
    CHECK(binom_mod_p(F3, 4, 2) == 0);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField F(p);
        for (std::uint64_t k = p; k <= 2 * p - 2; ++k) CHECK(binom_mod_p(F, k, p) == 1);
        for (std::uint64_t a = 0; a < 40; ++a) {
            CHECK(binom_mod_p(F, a, 0) == 1);
            for (std::uint64_t b = 0; b <= a + 1; ++b)
                CHECK(binom_mod_p(F, a, b) == naive_binom_mod(a, b, p));
        }
    }
    PrimeField F5(5);
    CHECK(binom_mod_p_signed(F5, 3, -1) == 0);
    CHECK(binom_mod_p_signed(F5, -1, 0) == 0);
}

TEST_CASE("Wilson factorial identity") {
    for (std::uint32_t p = 2; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        PrimeField F(p);
        for (std::uint32_t i = 1; i < p; ++i) {
            auto lhs = F.mul(factorial_mod_p(F, i), factorial_mod_p(F, p - i));
            auto rhs = F.from_int((i % 2 ? -1 : 1) * static_cast<std::int64_t>(i));
            CHECK(lhs == rhs);
        }
    }
    CHECK(factorial_mod_p(PrimeField(7), 5) == naive_factorial(5) % 7);
}

TEST_CASE("Artin-Hasse series") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        auto e = truncated_exponential(p);
        auto ah = artin_hasse(p, 4 * p);
        for (std::uint32_t i = 0; i < p; ++i) CHECK(ah[i] == e.coeff(i));
    }
    // exp(X + X^2/2) = 1 + X + X^2 + ...
    CHECK(artin_hasse(2, 3)[2] == 1);
    auto one = artin_hasse(7, 1);
    CHECK(one.order() == 1);
    CHECK(one[0] == 1);
}

TEST_CASE("Laguerre polynomial") {
    auto L2 = laguerre_bivariate(2);
    // (alpha + 1) - X, stored with u = alpha and v = X
    CHECK(L2.coeff(0, 0) == 1);
    CHECK(L2.coeff(1, 0) == 1);
    CHECK(L2.coeff(0, 1) == 1);
    CHECK(L2.total_degree() == 1);
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        auto L = laguerre_bivariate(p);
        CHECK(L.degree_v() == static_cast<int>(p - 1));
        for (std::uint32_t k = 0; k < p; ++k) CHECK(L.column(k).degree() == static_cast<int>(p - 1 - k));
        CHECK(L.eval_u(0) == truncated_exponential(p));
    }
}

TEST_CASE("Laguerre differential equation") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        auto L = laguerre_bivariate(p);
        auto g = BiPoly::u(F);
        auto X = BiPoly::v(F);
        auto residual = X * L.derivative_v() - (X - g) * L - X.pow(p) + (g.pow(p) - g);
        CHECK(residual.is_zero());
        auto E = truncated_exponential(p);
        auto x = UPoly<PrimeField>::x(F);
        CHECK((x * E.derivative() - x * E - x.pow(p)).is_zero());
    }
}

TEST_CASE("series operations") {
    PrimeField F(5);
    auto s = TruncSeries<PrimeField>(F, 4, {1, 1});
    CHECK(s.inverse().coeffs() == std::vector<std::uint32_t>{1, 4, 1, 4});
    CHECK(s * s.inverse() == TruncSeries<PrimeField>::one(F, 4));
    CHECK_THROWS_AS(TruncSeries<PrimeField>(F, 4, {0, 1}).inverse(), DomainError);
    CHECK_THROWS_AS(s.compose(s), DomainError);
    auto x5 = TruncSeries<PrimeField>::from_poly(UPoly<PrimeField>::monomial(F, 1, 5), 8);
    CHECK(x5.derivative() == TruncSeries<PrimeField>(F, 7));
    auto a = TruncSeries<PrimeField>(F, 6, {1, 2, 3});
    auto b = TruncSeries<PrimeField>(F, 4, {4, 0, 1, 1});
    CHECK((a * b).order() == 4);
    // compose with X: identity
    auto X = TruncSeries<PrimeField>(F, 6, {0, 1});
    CHECK(a.compose(X) == a);
}

TEST_CASE("quotient by power relations") {
    PrimeField F(5);
    // X^5 -> c, Y^5 -> d with c, d constants
    auto X = BiPoly::u(F);
    auto r = reduce_mod_relations(X.pow(5), 5, 3u, 5, 2u);
    CHECK(r == BiPoly::constant(F, 3));
    auto q = reduce_mod_relations(X.pow(7) * BiPoly::v(F).pow(11), 5, 3u, 5, 2u);
    CHECK(q == BiPoly::monomial(F, 3 * 4 % 5, 2, 1));
    CHECK(reduce_mod_relations(q, 5, 3u, 5, 2u) == q);
}

TEST_CASE("bivariate polynomials distribute") {
    PrimeField F(7);
    std::mt19937 rng(1);
    auto rand_poly = [&] {
        BiPoly r(F);
        for (int k = 0; k < 6; ++k) r.add_to(rng() % 4, rng() % 4, rng() % 7);
        return r;
    };
    for (int t = 0; t < 20; ++t) {
        auto f = rand_poly(), g = rand_poly(), h = rand_poly();
        CHECK((f + g) * h == f * h + g * h);
    }
}

TEST_CASE("rational functions") {
    PrimeField F(5);
    RationalFunctionField K(F);
    auto a = K.alpha(), b = K.beta();
    auto q = (a * a - b * b) / (a - b);
    CHECK(q == a + b);
    CHECK(q.is_polynomial());
    CHECK(q.num() == BiPoly::u(F) + BiPoly::v(F));
    auto r = K.inv((a + b).pow(4) - K.one());
    CHECK(r.evaluate(F, 2u, 3u) == F.neg(1));
    CHECK_THROWS_AS(r.evaluate(F, 1u, 0u), BadSpecialization);
    CHECK_THROWS_AS(K.inv(K.zero()), DomainError);

    std::mt19937 rng(7);
    auto rand_rf = [&] {
        BiPoly n(F), d(F);
        for (int k = 0; k < 3; ++k) n.add_to(rng() % 3, rng() % 3, rng() % 5);
        d.add_to(0, 0, 1 + rng() % 4);
        for (int k = 0; k < 2; ++k) d.add_to(rng() % 3, rng() % 3, rng() % 5);
        if (d.is_zero()) d = BiPoly::constant(F, 1);
        return RatFunc(n, d);
    };
    for (int t = 0; t < 15; ++t) {
        auto x = rand_rf(), y = rand_rf(), z = rand_rf();
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) * z == x * z + y * z);
        // canonical form: equal values have equal representations
        auto s = (x + y) - y;
        CHECK(s.num() == x.num());
        CHECK(s.den() == x.den());
    }
}

TEST_CASE("extension fields") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto K = ExtensionField::artin_schreier(p);
        CHECK(K.degree() == p);
        auto g = K.gamma();
        CHECK(K.sub(K.pow(g, p), g) == K.one());
        std::mt19937 rng(p);
        for (int t = 0; t < 10; ++t) {
            ExtensionField::Element x(p);
            for (auto& c : x) c = rng() % p;
            if (K.is_zero(x)) continue;
            CHECK(K.mul(x, K.inv(x)) == K.one());
            // Frobenius fixes x iff x is in F_p
            CHECK((K.frobenius(x) == x) == K.in_prime_field(x));
        }
        for (std::uint32_t c = 0; c < p; ++c) CHECK(K.frobenius(K.from_int(c)) == K.from_int(c));
    }
    auto K4 = ExtensionField::of_degree(5, 4);
    CHECK(K4.degree() == 4);
    auto t = K4.generator();
    CHECK(K4.pow(t, 624) == K4.one());
    PrimeField F(3);
    CHECK_NOTHROW(ExtensionField(F, UPoly<PrimeField>(F, {1, 0, 1})));
    CHECK_THROWS_AS(ExtensionField(F, UPoly<PrimeField>(F, {2, 0, 1})), InvalidArgument);
}
