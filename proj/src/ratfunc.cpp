#include "gradsw/arith/ratfunc.hpp"

#include <sstream>

namespace gradsw {

namespace {

using UP = UPoly<PrimeField>;

// Lex-leading term with u > v: (highest u power, highest v power in that row).
std::pair<std::size_t, std::size_t> lex_leading(const BiPoly& a) {
    const auto i = static_cast<std::size_t>(a.degree_u());
    const auto row = a.row(i);
    return {i, static_cast<std::size_t>(row.degree())};
}

// Content of a as a polynomial in u over F_p[v].
UP content(const BiPoly& a) {
    UP g(a.field());
    for (int i = 0; i <= a.degree_u(); ++i) g = gcd(g, a.row(static_cast<std::size_t>(i)));
    return g;
}

BiPoly divide_rows(const BiPoly& a, const UP& c) {
    BiPoly r(a.field());
    for (int i = 0; i <= a.degree_u(); ++i) {
        auto [q, rem] = divmod(a.row(static_cast<std::size_t>(i)), c);
        if (!rem.is_zero()) throw InternalInconsistency("content does not divide row");
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) r.add_to(static_cast<std::size_t>(i), j, q.coeffs()[j]);
    }
    return r;
}

BiPoly primitive_part(const BiPoly& a) {
    if (a.is_zero()) return a;
    return divide_rows(a, content(a));
}

// Pseudo-remainder of a by b in F_p[v][u].
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
    const int db = b.degree_u();
    const auto lcb = BiPoly::from_v(b.row(static_cast<std::size_t>(db)));
    while (!a.is_zero() && a.degree_u() >= db) {
        const auto d = static_cast<std::size_t>(a.degree_u() - db);
        const auto lca = BiPoly::from_v(a.row(static_cast<std::size_t>(a.degree_u())));
        a = lcb * a - lca * BiPoly::monomial(a.field(), 1, d, 0) * b;
    }
    return a;
}

}  // namespace

PrimeField::Element grlex_leading_coeff(const BiPoly& a) {
    int best_deg = -1, best_i = -1;
    PrimeField::Element c = 0;
    a.for_each([&](std::size_t i, std::size_t j, const PrimeField::Element& v) {
        const int d = static_cast<int>(i + j);
        if (d > best_deg || (d == best_deg && static_cast<int>(i) > best_i)) {
            best_deg = d;
            best_i = static_cast<int>(i);
            c = v;
        }
    });
    return c;
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const auto& F = a.field();
    const auto [ib, jb] = lex_leading(b);
    const auto cb_inv = F.inv(b.coeff(ib, jb));
    BiPoly rem = a, q(F);
    while (!rem.is_zero()) {
        const auto [i, j] = lex_leading(rem);
        if (i < ib || j < jb) throw DomainError("polynomial is not divisible");
        auto t = BiPoly::monomial(F, F.mul(rem.coeff(i, j), cb_inv), i - ib, j - jb);
        q += t;
        rem -= t * b;
    }
    return q;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    const auto& F = a.field();
    auto normalize = [&](const BiPoly& g) {
        if (g.is_zero()) return g;
        return g.scaled(F.inv(grlex_leading_coeff(g)));
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    const UP c = gcd(content(a), content(b));
    BiPoly A = primitive_part(a), B = primitive_part(b);
    if (A.degree_u() < B.degree_u()) std::swap(A, B);
    while (!B.is_zero()) {
        auto R = pseudo_remainder(A, B);
        A = std::move(B);
        B = primitive_part(R);
    }
    return normalize(primitive_part(A) * BiPoly::from_v(c));
}

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    const auto& F = num_.field();
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = BiPoly::constant(F, 1);
        return;
    }
    const auto g = gcd(num_, den_);
    if (g.total_degree() > 0) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    const auto lc_inv = F.inv(grlex_leading_coeff(den_));
    num_ = num_.scaled(lc_inv);
    den_ = den_.scaled(lc_inv);
}

RatFunc RatFunc::constant(const PrimeField& field, std::int64_t c) {
    return RatFunc(BiPoly::constant(field, field.from_int(c)), BiPoly::constant(field, 1));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::uint64_t e) const {
    RatFunc result = constant(field(), 1);
    RatFunc base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string("alpha", "beta");
    std::ostringstream os;
    os << "(" << num_.to_string("alpha", "beta") << ")/(" << den_.to_string("alpha", "beta") << ")";
    return os.str();
}

}  // namespace gradsw
