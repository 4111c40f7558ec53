// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gradsw/algebra/universal.hpp"
#include "gradsw/catalog/catalog.hpp"
#include "gradsw/identities/identities.hpp"
#include "gradsw/switch/switch.hpp"

using namespace gradsw;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<bool(std::string&)> body;
};

Grading<PrimeField> mod(const CatalogAlgebra& c, std::size_t gen, std::int64_t m) {
    return coarsen(c.grading, GroupHom::project_to_cyclic(c.grading.group(), gen, m));
}

Matrix<PrimeField> adpow(const CatalogAlgebra& c, const std::string& name, std::uint64_t e) {
    return power_derivation(ad_basis(c.algebra, c.index(name)), e);
}

template <class K>
bool same_subspaces(const Grading<K>& a, const Grading<K>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.components()[i].degree != b.components()[i].degree || !(a.subspace(i) == b.subspace(i))) return false;
    return true;
}

bool all_pass(const std::vector<CongruenceReport>& rs, std::string& why) {
    for (const auto& r : rs)
        if (!r.pass) {
            why = r.identity + " " + r.parameters.dump() + ": " + r.detail;
            return false;
        }
    return true;
}

// (-1)^i / i in F_p by Fermat inversion, independent of the field class.
std::string alt_reciprocal(std::uint32_t p, std::uint32_t i) {
    std::uint64_t inv = 1, b = i % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) inv = inv * b % p;
    return std::to_string(i % 2 ? (p - inv) % p : inv);
}

bool prop1(std::string& why) {
    std::vector<CongruenceReport> rs;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) rs.push_back(check_prop1(p));
    return all_pass(rs, why);
}

bool prop2(std::string& why) {
    std::vector<CongruenceReport> rs;
    for (std::uint32_t p : {2u, 3u, 5u}) rs.push_back(check_prop2(p, 4 * p));
    return all_pass(rs, why);
}

bool eq3(std::string& why) {
    std::vector<CongruenceReport> rs;
    for (std::uint32_t p : {3u, 5u, 7u}) rs.push_back(check_eq3(p));
    return all_pass(rs, why);
}

bool lmodp(std::string& why) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        auto r = check_lmodp(p);
        if (!all_pass({r}, why)) return false;
        if (r.witness["wilson"] != std::to_string(p - 1)) {
            why = "Wilson slice differs from -1 at p = " + std::to_string(p);
            return false;
        }
    }
    return true;
}

bool prop5(std::string& why) {
    auto ex = check_prop5(3, Prop5Mode::exact);
    if (!all_pass({ex}, why)) return false;
    if (ex.witness["c"].size() != 3) {
        why = "exact mode did not return c_0, c_1, c_2";
        return false;
    }
    for (std::uint32_t p : {5u, 7u}) {
        auto r = check_prop5(p, Prop5Mode::randomized, 20, 0);
        if (!all_pass({r}, why)) return false;
        if (r.witness["consistent_trials"] != 20) {
            why = "fewer than 20 consistent specializations at p = " + std::to_string(p);
            return false;
        }
        const auto& c = r.witness["c_at_zero"];
        if (c.size() != p || c[0] != "1") {
            why = "bad alpha = beta = 0 specialization at p = " + std::to_string(p);
            return false;
        }
        for (std::uint32_t i = 1; i < p; ++i)
            if (c[i] != alt_reciprocal(p, i)) {
                why = "c_" + std::to_string(i) + " at alpha = beta = 0 is not (-1)^i/i for p = " + std::to_string(p);
                return false;
            }
    }
    return true;
}

bool prop6(std::string& why) {
    for (std::uint32_t p : {3u, 5u}) {
        auto r = check_prop6(p, 3 * p);
        if (!all_pass({r}, why)) return false;
        if (r.witness["G"].empty() || r.witness["G"][0] != "1") {
            why = "constant term of S/E_p is not 1";
            return false;
        }
    }
    return true;
}

bool truncated_engine(std::string& why) {
    auto w = zassenhaus(5, 1);
    const auto& F = w.algebra.field();
    const auto D = ad_basis(w.algebra, w.index("d"));
    if (!D.pow(5).is_zero()) {
        why = "(ad d)^5 != 0";
        return false;
    }
    auto res = switch_truncated(w.algebra, mod(w, 0, 5), D);
    if (!res.report().ok) {
        why = res.report().reason;
        return false;
    }
    bool nonzero = false;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            auto [lhs, rhs] = obstruction(w.algebra, D, unit_vector(F, 5, i), unit_vector(F, 5, j));
            if (lhs != rhs) {
                why = "obstruction forms differ at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                return false;
            }
            nonzero = nonzero || !is_zero_vector(F, lhs);
        }
    if (!nonzero) why = "obstruction vanishes on every pair";
    return nonzero;
}

bool artin_hasse_engine(std::string& why) {
    auto w = zassenhaus(5, 2);
    for (std::uint32_t s : {0u, 1u}) {
        const auto q = ipow(5, s);
        auto res = switch_artin_hasse(w.algebra, mod(w, 0, static_cast<std::int64_t>(5 * q)), adpow(w, "d", q));
        if (!res.report().ok || res.grading().group() != AbelianGroup::cyclic(static_cast<std::int64_t>(5 * q))) {
            why = "switched grading for s = " + std::to_string(s) + " failed verification";
            return false;
        }
        if (!all_pass({check_example1(5, 2, s)}, why)) return false;
        if (s == 1) {
            auto u = universal_group(w.algebra, res.grading());
            if (u.group != AbelianGroup(0, {25})) {
                why = "universal group " + u.group.to_string() + ", expected Z/25";
                return false;
            }
        }
    }
    return all_pass({check_example1(5, 1, 0)}, why);
}

bool laguerre_engine(std::string& why) {
    auto h = albert_zassenhaus(5, 2, 1);
    auto D = adpow(h, "y", 5);
    if (D.pow(25) != D.pow(5)) {
        why = "D^25 != D^5";
        return false;
    }
    if (!all_pass({check_example2(5, 2, 1, 1)}, why)) return false;
    auto res = switch_laguerre(h.algebra, az_x_grading(h, 1), D);
    const auto& K = res.op().field();
    if (K.degree() != 5 || !K.is_artin_schreier() || !res.report().ok ||
        res.grading().group() != AbelianGroup::cyclic(25)) {
        why = "Laguerre-switched grading over F_{5^5} failed";
        return false;
    }
    auto both = intersect(res.grading(), detail::to_extension(az_y_grading(h), K));
    auto hk = extend_scalars(h.algebra, K);
    auto rep = verify_grading(hk, both);
    if (!rep.ok) {
        why = "intersection is not a grading: " + rep.reason;
        return false;
    }
    auto u = universal_group(hk, both);
    if (u.group != AbelianGroup(1, {25})) {
        why = "universal group " + u.group.to_string() + ", expected Z x Z/25";
        return false;
    }
    return true;
}

bool consistency(std::string& why) {
    auto w = zassenhaus(5, 2);
    auto D = ad_basis(w.algebra, w.index("d"));
    auto gr = mod(w, 0, 5);
    auto lag = switch_laguerre(w.algebra, gr, D);
    auto ah = switch_artin_hasse(w.algebra, gr, D);
    if (lag.plan().eigenvalues != std::vector<std::uint32_t>{0} || lag.plan().block_sizes != std::vector<std::size_t>{25}) {
        why = "nilpotent D should give a single eigenvalue-0 block";
        return false;
    }
    if (!same_subspaces(lag.grading(), detail::to_extension(ah.grading(), lag.op().field()))) {
        why = "Laguerre and Artin-Hasse images differ";
        return false;
    }
    return true;
}

bool structural(std::string& why) {
    auto w1 = zassenhaus(5, 1), w2 = zassenhaus(5, 2);
    auto h1 = albert_zassenhaus(5, 1, 1), h2 = albert_zassenhaus(5, 2, 1);
    for (const auto* c : {&w1, &h1})
        if (auto v = jacobi_violation(c->algebra)) {
            why = "Jacobi fails in " + c->name;
            return false;
        }
    std::vector<std::pair<std::string, DerivationCheck>> checks;
    for (const auto* c : {&w1, &w2, &h1})
        for (std::size_t i = 0; i < c->algebra.dim(); ++i)
            checks.emplace_back(c->name + " ad " + c->algebra.name(i), is_derivation(c->algebra, ad_basis(c->algebra, i)));
    checks.emplace_back("(ad d)^5 on W(1;2)", is_derivation(w2.algebra, adpow(w2, "d", 5)));
    checks.emplace_back("(ad y)^5 on H(2;(2,1))", is_derivation(h2.algebra, adpow(h2, "y", 5)));
    // d/dx on O(1;2): x^{(i)} -> x^{(i-1)}
    auto o = divided_power_algebra(5, 2);
    Matrix<PrimeField> dx(o.algebra.field(), 25, 25);
    for (std::size_t i = 1; i < 25; ++i) dx(i - 1, i) = 1;
    checks.emplace_back("d/dx on O(1;2)", is_derivation(o.algebra, dx));
    for (const auto& [name, chk] : checks)
        if (!chk.ok) {
            why = name + " is not a derivation";
            return false;
        }
    return true;
}

bool baselines(std::string& why) {
    auto w = zassenhaus(5, 2);
    auto uw = universal_group(w.algebra, w.grading);
    if (uw.group != AbelianGroup(1, {})) {
        why = "W(1;2): " + uw.group.to_string();
        return false;
    }
    auto h = albert_zassenhaus(5, 2, 1);
    auto uh = universal_group(h.algebra, h.grading);
    if (uh.group != AbelianGroup(1, {25})) {
        why = "H(2;(2,1)): " + uh.group.to_string();
        return false;
    }
    return true;
}

bool mutations(std::string& why) {
    const auto m = Mutation::perturb;
    std::vector<CongruenceReport> rs;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        rs.push_back(check_prop1(p, m));
        rs.push_back(check_prop2(p, 4 * p, m));
        rs.push_back(check_lmodp(p, m));
        rs.push_back(check_eq3(p, m));
        rs.push_back(check_prop6(p, 3 * p, m));
    }
    rs.push_back(check_prop5(3, Prop5Mode::exact, 0, 0, m));
    rs.push_back(check_prop5(5, Prop5Mode::randomized, 5, 0, m));
    rs.push_back(check_example1(5, 2, 1, m));
    rs.push_back(check_example2(5, 2, 1, 1, m));
    for (const auto& r : rs)
        if (r.pass) {
            why = r.identity + " " + r.parameters.dump() + " passes under its perturbation";
            return false;
        }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exponential product congruence, p in {2,3,5,7,11}", 1, prop1},
        {2, "Artin-Hasse quotient support, p in {2,3,5}, N = 4p", 5, prop2},
        {3, "Laguerre differential equation, p in {3,5,7}", 1, eq3},
        {4, "Laguerre congruence mod p and Wilson slice, p in {3,5,7}", 1, lmodp},
        {5, "Laguerre product correction, exact (p = 3) and randomized (p = 5, 7)", 60, prop5},
        {6, "Laguerre series over E_p, p in {3,5}, N = 3p", 5, prop6},
        {7, "truncated switching and obstruction on W(1;1)", 1, truncated_engine},
        {8, "Artin-Hasse switching on W(1;2), s in {0,1}", 10, artin_hasse_engine},
        {9, "Laguerre switching on H(2;(2,1);Phi(1))", 120, laguerre_engine},
        {10, "Laguerre and Artin-Hasse agree for nilpotent D", 10, consistency},
        {11, "Jacobi identity and catalog derivations", 60, structural},
        {12, "universal group baselines", 5, baselines},
        {13, "identity checkers fail on their perturbations", 5, mutations},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::string why;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > c.limit_s) {
            ok = false;
            why = "over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
        }
        std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    why.empty() ? "" : " -- ", why.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
