#include "gradsw/arith/extension_field.hpp"

#include <array>
#include <sstream>

#include "gradsw/error.hpp"

namespace gradsw {

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^{p^j} mod f, by j successive Frobenius steps.
UPoly<PrimeField> x_pow_p_pow(const UPoly<PrimeField>& f, std::uint32_t j) {
    const auto& F = f.field();
    auto r = UPoly<PrimeField>::x(F) % f;
    for (std::uint32_t i = 0; i < j; ++i) r = powmod(r, F.characteristic(), f);
    return r;
}

}  // namespace

bool is_irreducible(const UPoly<PrimeField>& f) {
    if (f.degree() < 1) return false;
    const auto& F = f.field();
    const auto g = f.monic();
    const auto k = static_cast<std::uint32_t>(g.degree());
    const auto x = UPoly<PrimeField>::x(F);
    if (x_pow_p_pow(g, k) != x % g) return false;
    for (auto q : prime_factors(k)) {
        auto h = x_pow_p_pow(g, k / q) - x;
        if (gcd(h, g).degree() != 0) return false;
    }
    return true;
}

ExtensionField::ExtensionField(PrimeField base, const UPoly<PrimeField>& modulus)
    : base_(base), modulus_(modulus), k_(0) {
    if (modulus.degree() < 1) throw InvalidArgument("extension modulus must have degree >= 1");
    if (modulus.leading() != 1) throw InvalidArgument("extension modulus must be monic");
    if (static_cast<std::uint32_t>(modulus.degree()) > kMaxDegree)
        throw InvalidArgument("extension degree exceeds " + std::to_string(kMaxDegree));
    if (!is_irreducible(modulus)) throw InvalidArgument("extension modulus " + modulus.to_string("t") + " is reducible");
    k_ = static_cast<std::uint32_t>(modulus.degree());
}

ExtensionField ExtensionField::artin_schreier(std::uint32_t p) {
    PrimeField F(p);
    std::vector<std::uint32_t> c(p + 1, 0);
    c[0] = F.neg(1);
    c[1] = F.neg(1);
    c[p] = 1;
    ExtensionField K(F, UPoly<PrimeField>(F, std::move(c)));
    K.artin_schreier_ = true;
    return K;
}

ExtensionField ExtensionField::of_degree(std::uint32_t p, std::uint32_t k) {
    PrimeField F(p);
    if (k < 1 || k > kMaxDegree) throw InvalidArgument("bad extension degree " + std::to_string(k));
    // enumerate monic polynomials of degree k by their lower coefficients in base p
    std::vector<std::uint32_t> c(k + 1, 0);
    c[k] = 1;
    while (true) {
        UPoly<PrimeField> f(F, c);
        if (is_irreducible(f)) return ExtensionField(F, f);
        std::size_t i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) break;
    }
    throw InternalInconsistency("no irreducible polynomial of degree " + std::to_string(k));
}

ExtensionField::Element ExtensionField::from_coeffs(const std::vector<std::uint32_t>& c) const {
    std::vector<std::uint32_t> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i] % characteristic();
    auto rem = UPoly<PrimeField>(base_, std::move(r)) % modulus_;
    Element e(k_, 0);
    for (std::size_t i = 0; i < rem.coeffs().size(); ++i) e[i] = rem.coeffs()[i];
    return e;
}

ExtensionField::Element ExtensionField::generator() const {
    if (k_ == 1) return from_coeffs({0, 1});
    Element e(k_, 0);
    e[1] = 1;
    return e;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const {
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
    return r;
}

namespace {

// Schoolbook product followed by reduction modulo the monic modulus; the
// result is accumulated into `out`.
void mul_into(const PrimeField& F, const std::vector<std::uint32_t>& mod, std::uint32_t k,
              const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              std::vector<std::uint32_t>& out) {
    const std::uint64_t p = F.characteristic();
    std::array<std::uint64_t, 2 * ExtensionField::kMaxDegree> t{};
    bool any = false;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (!a[i]) continue;
        any = true;
        for (std::uint32_t j = 0; j < k; ++j) t[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
    if (!any) return;
    for (std::uint32_t d = 2 * k - 2; d >= k; --d) {
        const std::uint64_t c = t[d] % p;
        if (c) {
            // t^d = t^{d-k} * t^k = -t^{d-k} * sum_{i<k} mod_i t^i
            for (std::uint32_t i = 0; i < k; ++i)
                if (mod[i]) t[d - k + i] += c * (p - mod[i]);
        }
        if (d == k) break;
    }
    for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>((out[i] + t[i]) % p);
}

}  // namespace

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
    Element r(k_, 0);
    mul_into(base_, modulus_.coeffs(), k_, a, b, r);
    return r;
}

void ExtensionField::add_mul(Element& acc, const Element& a, const Element& b) const {
    mul_into(base_, modulus_.coeffs(), k_, a, b, acc);
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero in extension field");
    UPoly<PrimeField> pa(base_, a);
    auto [g, s, t] = ext_gcd(pa, modulus_);
    if (g.degree() != 0) throw InternalInconsistency("extension modulus is not irreducible");
    return from_coeffs(s.coeffs());
}

ExtensionField::Element ExtensionField::pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e) {
        if (e & 1) result = mul(result, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return result;
}

bool ExtensionField::is_zero(const Element& a) const noexcept {
    for (auto v : a)
        if (v) return false;
    return true;
}

bool ExtensionField::in_prime_field(const Element& a) const noexcept {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

std::string ExtensionField::to_string(const Element& a) const {
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < k_; ++i) os << (i ? "," : "") << a[i];
    os << "]";
    return os.str();
}

}  // namespace gradsw
