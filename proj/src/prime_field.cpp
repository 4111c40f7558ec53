#include "gradsw/arith/prime_field.hpp"

#include "gradsw/error.hpp"

namespace gradsw {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (p > kMaxPrime)
        throw InvalidArgument("characteristic " + std::to_string(p) + " exceeds the supported bound " +
                              std::to_string(kMaxPrime));
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return from_int(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
    Element result = 1;
    Element base = a % p_;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace gradsw
