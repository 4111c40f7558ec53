#pragma once

#include <cstdint>

#include "gradsw/arith/poly2.hpp"
#include "gradsw/arith/prime_field.hpp"
#include "gradsw/arith/series.hpp"
#include "gradsw/arith/upoly.hpp"

namespace gradsw {

/// binom(a, b) mod p by Lucas' theorem; 0 when b > a.
PrimeField::Element binom_mod_p(const PrimeField& F, std::uint64_t a, std::uint64_t b);

/// binom(a, b) mod p extended by binom(a, b) = 0 for b < 0 or a < 0.
PrimeField::Element binom_mod_p_signed(const PrimeField& F, std::int64_t a, std::int64_t b);

/// n! mod p.
PrimeField::Element factorial_mod_p(const PrimeField& F, std::uint64_t n);

/// E(X) = sum_{i<p} X^i / i!.
UPoly<PrimeField> truncated_exponential(std::uint32_t p);

/// Reduction mod p of the Artin-Hasse series exp(sum_i X^{p^i}/p^i), known
/// modulo X^order. Coefficients are computed exactly over Q and then reduced;
/// a denominator divisible by p raises InternalInconsistency.
TruncSeries<PrimeField> artin_hasse(std::uint32_t p, std::size_t order);

/// L_{p-1}^{(alpha)}(X) mod p as a polynomial in (alpha, X): the coefficient
/// of X^k is (-1)^k prod_{j=k+1}^{p-1}(alpha + j) / ((p-1-k)! k!).
Poly2<PrimeField> laguerre_bivariate(std::uint32_t p);

}  // namespace gradsw
