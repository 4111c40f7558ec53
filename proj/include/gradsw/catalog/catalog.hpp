#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gradsw/algebra/algebra.hpp"
#include "gradsw/algebra/grading.hpp"
#include "gradsw/arith/prime_field.hpp"

namespace gradsw {

/// A named algebra with its canonical grading and a table of short names
/// ("d" for the derivation of W(1;n), "y" for y^{(1)}, ...).
struct CatalogAlgebra {
    std::string name;
    std::map<std::string, std::int64_t> params;
    Algebra<PrimeField> algebra;
    Grading<PrimeField> grading;
    std::map<std::string, std::size_t> aliases;

    /// Basis index of a name or alias; throws InvalidArgument if unknown.
    std::size_t index(const std::string& name_or_alias) const;
};

std::uint64_t ipow(std::uint64_t b, std::uint32_t e);

/// N(i,j,k,l) of the Poisson bracket, with binom(a, b) = 0 for b < 0 or a < 0.
PrimeField::Element poisson_coefficient(const PrimeField& F, std::int64_t i, std::int64_t j, std::int64_t k,
                                        std::int64_t l);

/// O(1;n): divided powers x^{(i)}, i < p^n, Z-graded by i.
CatalogAlgebra divided_power_algebra(std::uint32_t p, std::uint32_t n);
/// O(2;(n,m)): x^{(i)}y^{(j)} in lexicographic (i, j) order, Z^2-graded by (i, j).
CatalogAlgebra divided_power_algebra2(std::uint32_t p, std::uint32_t n, std::uint32_t m);
/// W(1;n) on x^{(k)}d, k < p^n, with the standard Z-grading (degree k - 1).
CatalogAlgebra zassenhaus(std::uint32_t p, std::uint32_t n);
/// H(2;(n,m);Phi(1)) on x^{(i)}y^{(j)} with the Z/p^n x Z grading that gives
/// x^{(i+1)}y^{(j+1)} degree (i mod p^n, j). Rejects p = 2.
CatalogAlgebra albert_zassenhaus(std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// Dispatch by catalog string: "W(1;n)", "H(2;(n,m);Phi(1))", "O(1;n)", "O(2;(n,m))".
CatalogAlgebra build_catalog(const std::string& name, std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// D^e for e a power of p. Throws InvalidArgument otherwise.
template <class F>
Matrix<F> power_derivation(const Matrix<F>& d, std::uint64_t e) {
    const auto p = d.field().characteristic();
    std::uint64_t q = 1;
    while (q < e) q *= p;
    if (e == 0 || q != e)
        throw InvalidArgument("exponent " + std::to_string(e) + " is not a power of " + std::to_string(p));
    return d.pow(e);
}

/// Z/p^n x Z grading of H(2;(n,m);Phi(1)) coarsened to Z/p^{s+1} through the
/// x-degree.
Grading<PrimeField> az_x_grading(const CatalogAlgebra& h, std::uint32_t s);
/// Z-grading of H(2;(n,m);Phi(1)) by the y-degree alone.
Grading<PrimeField> az_y_grading(const CatalogAlgebra& h);

}  // namespace gradsw
