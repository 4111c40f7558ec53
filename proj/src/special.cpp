#include "gradsw/arith/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "gradsw/error.hpp"

namespace gradsw {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

PrimeField::Element binom_mod_p(const PrimeField& F, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = F.characteristic();
    PrimeField::Element r = 1;
    while (a || b) {
        const auto ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        // small binomial via factorials
        r = F.mul(r, F.div(factorial_mod_p(F, ad), F.mul(factorial_mod_p(F, bd), factorial_mod_p(F, ad - bd))));
        a /= p;
        b /= p;
    }
    return r;
}

PrimeField::Element binom_mod_p_signed(const PrimeField& F, std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) return 0;
    return binom_mod_p(F, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

PrimeField::Element factorial_mod_p(const PrimeField& F, std::uint64_t n) {
    if (n >= F.characteristic()) return 0;
    PrimeField::Element r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r = F.mul(r, F.from_int(static_cast<std::int64_t>(i)));
    return r;
}

UPoly<PrimeField> truncated_exponential(std::uint32_t p) {
    PrimeField F(p);
    std::vector<PrimeField::Element> c(p);
    for (std::uint32_t i = 0; i < p; ++i) c[i] = F.inv(factorial_mod_p(F, i));
    return UPoly<PrimeField>(F, std::move(c));
}

TruncSeries<PrimeField> artin_hasse(std::uint32_t p, std::size_t order) {
    PrimeField F(p);
    if (order == 0) throw InvalidArgument("artin_hasse: order must be >= 1");
    // s = sum_{p^i < order} X^{p^i} / p^i ; f = exp(s) via n f_n = sum_k k s_k f_{n-k}
    std::vector<cpp_rational> s(order), f(order);
    for (std::uint64_t q = 1; q < order; q *= p) s[q] = cpp_rational(1, static_cast<long long>(q));
    f[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        cpp_rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (s[k] != 0) acc += cpp_rational(static_cast<long long>(k)) * s[k] * f[n - k];
        f[n] = acc / static_cast<long long>(n);
    }
    TruncSeries<PrimeField> out(F, order);
    const cpp_int P = p;
    for (std::size_t n = 0; n < order; ++n) {
        const cpp_int num = boost::multiprecision::numerator(f[n]);
        const cpp_int den = boost::multiprecision::denominator(f[n]);
        if (den % P == 0)
            throw InternalInconsistency("Artin-Hasse coefficient " + std::to_string(n) +
                                        " has a denominator divisible by p");
        cpp_int nr = num % P;
        if (nr < 0) nr += P;
        const cpp_int dr = den % P;
        out[n] = F.div(static_cast<PrimeField::Element>(nr), static_cast<PrimeField::Element>(dr));
    }
    return out;
}

Poly2<PrimeField> laguerre_bivariate(std::uint32_t p) {
    PrimeField F(p);
    using BP = Poly2<PrimeField>;
    BP result(F);
    const auto alpha = BP::u(F);
    for (std::uint32_t k = 0; k < p; ++k) {
        BP prod = BP::constant(F, 1);
        for (std::uint32_t j = k + 1; j <= p - 1; ++j) prod *= alpha + BP::constant(F, F.from_int(j));
        auto scalar = F.inv(F.mul(factorial_mod_p(F, p - 1 - k), factorial_mod_p(F, k)));
        if (k % 2) scalar = F.neg(scalar);
        result += prod.scaled(scalar) * BP::monomial(F, 1, 0, k);
    }
    return result;
}

}  // namespace gradsw
