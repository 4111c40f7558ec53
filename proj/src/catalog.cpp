#include "gradsw/catalog/catalog.hpp"

#include "gradsw/arith/special.hpp"

namespace gradsw {

namespace {

// Divided-power product in one variable of height n: x^{(a)} x^{(b)}.
struct DividedPowers {
    PrimeField F;
    std::uint64_t size;  // p^n

    bool mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out, PrimeField::Element& c) const {
        if (a + b >= size) return false;
        c = binom_mod_p(F, a + b, a);
        out = a + b;
        return c != 0;
    }
};

std::string dp_name(std::uint64_t i, const char* var = "x") { return std::string(var) + "^(" + std::to_string(i) + ")"; }

void check_height(std::uint32_t h, const char* what) {
    if (h < 1) throw InvalidArgument(std::string(what) + " must be at least 1");
}

}  // namespace

std::size_t CatalogAlgebra::index(const std::string& key) const {
    if (auto it = aliases.find(key); it != aliases.end()) return it->second;
    if (auto i = algebra.index_of(key)) return *i;
    throw InvalidArgument("unknown basis element '" + key + "' in " + name);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

PrimeField::Element poisson_coefficient(const PrimeField& F, std::int64_t i, std::int64_t j, std::int64_t k,
                                        std::int64_t l) {
    const auto t1 = F.mul(binom_mod_p_signed(F, i + k - 1, i), binom_mod_p_signed(F, j + l - 1, j - 1));
    const auto t2 = F.mul(binom_mod_p_signed(F, i + k - 1, i - 1), binom_mod_p_signed(F, j + l - 1, j));
    return F.sub(t1, t2);
}

CatalogAlgebra divided_power_algebra(std::uint32_t p, std::uint32_t n) {
    PrimeField F(p);
    check_height(n, "n");
    const auto N = ipow(p, n);
    if (N > 4096) throw InvalidArgument("algebra dimension too large");
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < N; ++i) names.push_back(dp_name(i));
    Algebra<PrimeField> a(F, names);
    DividedPowers dp{F, N};
    for (std::uint64_t i = 0; i < N; ++i)
        for (std::uint64_t j = 0; j < N; ++j) {
            std::uint64_t k;
            PrimeField::Element c;
            if (dp.mul(i, j, k, c)) a.add_constant(i, j, k, c);
        }
    auto g = Grading<PrimeField>::from_basis_degrees(F, N, AbelianGroup::integers(), [](std::size_t i) {
        return GroupElement{{static_cast<std::int64_t>(i)}, {}};
    });
    return {"O(1;n)", {{"p", p}, {"n", n}}, std::move(a), std::move(g), {{"1", 0}, {"x", 1}}};
}

CatalogAlgebra divided_power_algebra2(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
    PrimeField F(p);
    check_height(n, "n");
    check_height(m, "m");
    const auto Nx = ipow(p, n), Ny = ipow(p, m);
    if (Nx * Ny > 4096) throw InvalidArgument("algebra dimension too large");
    auto idx = [Ny](std::uint64_t i, std::uint64_t j) { return i * Ny + j; };
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < Nx; ++i)
        for (std::uint64_t j = 0; j < Ny; ++j) names.push_back(dp_name(i) + dp_name(j, "y"));
    Algebra<PrimeField> a(F, names);
    DividedPowers dx{F, Nx}, dy{F, Ny};
    for (std::uint64_t i = 0; i < Nx; ++i)
        for (std::uint64_t j = 0; j < Ny; ++j)
            for (std::uint64_t k = 0; k < Nx; ++k)
                for (std::uint64_t l = 0; l < Ny; ++l) {
                    std::uint64_t r, s;
                    PrimeField::Element c1, c2;
                    if (dx.mul(i, k, r, c1) && dy.mul(j, l, s, c2)) a.add_constant(idx(i, j), idx(k, l), idx(r, s), F.mul(c1, c2));
                }
    auto g = Grading<PrimeField>::from_basis_degrees(F, Nx * Ny, AbelianGroup(2, {}), [Ny](std::size_t t) {
        return GroupElement{{static_cast<std::int64_t>(t / Ny), static_cast<std::int64_t>(t % Ny)}, {}};
    });
    std::map<std::string, std::size_t> aliases{{"1", 0}};
    if (Nx > 1) aliases["x"] = idx(1, 0);
    if (Ny > 1) aliases["y"] = idx(0, 1);
    return {"O(2;(n,m))", {{"p", p}, {"n", n}, {"m", m}}, std::move(a), std::move(g), aliases};
}

CatalogAlgebra zassenhaus(std::uint32_t p, std::uint32_t n) {
    PrimeField F(p);
    check_height(n, "n");
    const auto N = ipow(p, n);
    if (N > 4096) throw InvalidArgument("algebra dimension too large");
    std::vector<std::string> names;
    for (std::uint64_t k = 0; k < N; ++k) names.push_back(k == 0 ? "d" : dp_name(k) + "d");
    Algebra<PrimeField> a(F, names);
    DividedPowers dp{F, N};
    // [f d, g d] = (f d(g) - g d(f)) d with d x^{(k)} = x^{(k-1)}
    auto f_dg = [&](std::uint64_t fa, std::uint64_t gb, std::uint64_t& out, PrimeField::Element& c) {
        if (gb == 0) return false;
        return dp.mul(fa, gb - 1, out, c);
    };
    for (std::uint64_t i = 0; i < N; ++i)
        for (std::uint64_t j = 0; j < N; ++j) {
            std::uint64_t k;
            PrimeField::Element c;
            if (f_dg(i, j, k, c)) a.add_constant(i, j, k, c);
            if (f_dg(j, i, k, c)) a.add_constant(i, j, k, F.neg(c));
        }
    auto g = Grading<PrimeField>::from_basis_degrees(F, N, AbelianGroup::integers(), [](std::size_t k) {
        return GroupElement{{static_cast<std::int64_t>(k) - 1}, {}};
    });
    return {"W(1;n)", {{"p", p}, {"n", n}}, std::move(a), std::move(g), {{"d", 0}}};
}

CatalogAlgebra albert_zassenhaus(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
    if (p == 2) throw InvalidArgument("H(2;(n,m);Phi(1)) requires p > 2");
    PrimeField F(p);
    check_height(n, "n");
    check_height(m, "m");
    const auto Nx = ipow(p, n), Ny = ipow(p, m);
    if (Nx * Ny > 4096) throw InvalidArgument("algebra dimension too large");
    auto idx = [Ny](std::uint64_t i, std::uint64_t j) { return i * Ny + j; };
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < Nx; ++i)
        for (std::uint64_t j = 0; j < Ny; ++j) names.push_back(dp_name(i) + dp_name(j, "y"));
    Algebra<PrimeField> a(F, names);
    const auto sNx = static_cast<std::int64_t>(Nx), sNy = static_cast<std::int64_t>(Ny);
    auto in_range = [&](std::int64_t r, std::int64_t s) { return r >= 0 && r < sNx && s >= 0 && s < sNy; };
    for (std::int64_t i = 0; i < sNx; ++i)
        for (std::int64_t j = 0; j < sNy; ++j)
            for (std::int64_t k = 0; k < sNx; ++k)
                for (std::int64_t l = 0; l < sNy; ++l) {
                    const auto src = idx(i, j), dst = idx(k, l);
                    if (i + k > 0) {
                        const std::int64_t r = i + k - 1, s = j + l - 1;
                        if (!in_range(r, s)) continue;
                        a.add_constant(src, dst, idx(r, s), poisson_coefficient(F, i, j, k, l));
                    } else {
                        const std::int64_t s = j + l - 1;
                        if (!in_range(sNx - 1, s)) continue;
                        const auto c = F.sub(binom_mod_p_signed(F, j + l - 1, l), binom_mod_p_signed(F, j + l - 1, j));
                        a.add_constant(src, dst, idx(Nx - 1, s), c);
                    }
                }
    AbelianGroup G(1, {sNx});
    auto g = Grading<PrimeField>::from_basis_degrees(F, Nx * Ny, G, [&](std::size_t t) {
        const auto i = static_cast<std::int64_t>(t / Ny), j = static_cast<std::int64_t>(t % Ny);
        return G.element({j - 1}, {i - 1});
    });
    std::map<std::string, std::size_t> aliases{{"1", idx(0, 0)}, {"xbar", idx(Nx - 1, 0)}};
    aliases["x"] = idx(1, 0);
    aliases["y"] = idx(0, 1);
    return {"H(2;(n,m);Phi(1))", {{"p", p}, {"n", n}, {"m", m}}, std::move(a), std::move(g), aliases};
}

CatalogAlgebra build_catalog(const std::string& name, std::uint32_t p, std::uint32_t n, std::uint32_t m) {
    if (name == "W(1;n)") return zassenhaus(p, n);
    if (name == "H(2;(n,m);Phi(1))") return albert_zassenhaus(p, n, m);
    if (name == "O(1;n)") return divided_power_algebra(p, n);
    if (name == "O(2;(n,m))") return divided_power_algebra2(p, n, m);
    throw InvalidArgument("unknown catalog algebra '" + name + "'");
}

Grading<PrimeField> az_x_grading(const CatalogAlgebra& h, std::uint32_t s) {
    const auto p = static_cast<std::uint32_t>(h.params.at("p"));
    const auto n = static_cast<std::uint32_t>(h.params.at("n"));
    if (s >= n) throw InvalidArgument("s must be below n");
    const auto& G = h.grading.group();
    // generator 0 is the free (y) factor, generator 1 the Z/p^n (x) factor
    return coarsen(h.grading, GroupHom::project_to_cyclic(G, 1, static_cast<std::int64_t>(ipow(p, s + 1))));
}

Grading<PrimeField> az_y_grading(const CatalogAlgebra& h) {
    return coarsen(h.grading, GroupHom::project_to_cyclic(h.grading.group(), 0, 0));
}

}  // namespace gradsw
