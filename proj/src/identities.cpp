#include "gradsw/identities/identities.hpp"

#include <random>
#include <set>

#include "gradsw/arith/extension_field.hpp"
#include "gradsw/arith/poly2.hpp"
#include "gradsw/arith/ratfunc.hpp"
#include "gradsw/arith/special.hpp"
#include "gradsw/catalog/catalog.hpp"
#include "gradsw/linalg/elimination.hpp"
#include "gradsw/switch/switch.hpp"

namespace gradsw {

using json = nlohmann::json;

namespace {

using P2 = Poly2<PrimeField>;
using UP = UPoly<PrimeField>;

PrimeField::Element signed_reciprocal(const PrimeField& F, std::int64_t sign_exp, std::int64_t d) {
    auto c = F.inv(F.from_int(d));
    return sign_exp % 2 ? F.neg(c) : c;
}

template <class F>
json terms_json(const Poly2<F>& q, std::size_t limit = 64) {
    json out = json::array();
    q.for_each([&](std::size_t i, std::size_t j, const typename F::Element& c) {
        if (out.size() < limit) out.push_back({i, j, q.field().to_string(c)});
    });
    return out;
}

json upoly_json(const UP& q) {
    json out = json::array();
    for (auto c : q.coeffs()) out.push_back(std::to_string(c));
    return out;
}

void fail(CongruenceReport& r, const std::string& why) {
    if (r.pass) r.detail = why;
    r.pass = false;
}

CongruenceReport start(const std::string& name, json params, Mutation m) {
    CongruenceReport r;
    r.identity = name;
    r.parameters = std::move(params);
    if (m == Mutation::perturb) r.parameters["mutation"] = true;
    r.pass = true;
    return r;
}

void check_prime(std::uint32_t p) { PrimeField F(p); }

// L_{p-1}^{(t)}(X) for t in K.
template <class K>
UPoly<K> laguerre_at(const K& f, const P2& lag, const typename K::Element& t) {
    std::vector<typename K::Element> c;
    for (int k = 0; k <= lag.degree_v(); ++k) {
        const auto col = lag.column(static_cast<std::size_t>(k));
        auto acc = f.zero();
        for (std::size_t i = col.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, t), f.from_prime(col.coeffs()[i]));
        c.push_back(acc);
    }
    return UPoly<K>(f, std::move(c));
}

template <class K>
struct Prop5Solution {
    bool solvable = false;
    bool verified = false;
    std::size_t solution_dim = 0;
    std::vector<typename K::Element> c;
};

template <class K>
Prop5Solution<K> prop5_solve(const K& f, const typename K::Element& a, const typename K::Element& b, std::uint32_t p,
                             bool drop_last) {
    using Q = Poly2<K>;
    const auto lag = laguerre_bivariate(p);
    const auto ra = f.sub(f.pow(a, p), a), rb = f.sub(f.pow(b, p), b);
    auto red = [&](const Q& q) { return reduce_mod_relations(q, p, ra, p, rb); };

    const Q lhs = red(Q::from_u(laguerre_at(f, lag, a)) * Q::from_v(laguerre_at(f, lag, b)));
    const Q s = red(substitute(laguerre_at(f, lag, f.add(a, b)), Q::u(f) + Q::v(f)));
    std::vector<Q> cand{s};
    const std::uint32_t last = drop_last ? p - 2 : p - 1;
    for (std::uint32_t i = 1; i <= last; ++i) cand.push_back(red(s * Q::monomial(f, f.one(), i, p - i)));

    const std::size_t rows = static_cast<std::size_t>(p) * p;
    Matrix<K> m(f, rows, cand.size());
    for (std::size_t c = 0; c < cand.size(); ++c)
        cand[c].for_each([&](std::size_t i, std::size_t j, const typename K::Element& x) { m(i * p + j, c) = x; });
    Vec<K> rhs = zero_vector(f, rows);
    lhs.for_each([&](std::size_t i, std::size_t j, const typename K::Element& x) { rhs[i * p + j] = x; });

    Prop5Solution<K> out;
    out.solution_dim = cand.size() - rank(m);
    auto sol = solve(m, rhs);
    if (!sol) return out;
    out.solvable = true;
    out.c = *sol;
    Q acc(f);
    for (std::size_t i = 0; i < cand.size(); ++i) acc += cand[i].scaled(out.c[i]);
    out.verified = red(acc - lhs).is_zero();
    return out;
}

template <class K>
json elements_json(const K& f, const std::vector<typename K::Element>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(f.to_string(x));
    return out;
}

}  // namespace

json CongruenceReport::to_json() const {
    return {{"identity", identity},
            {"parameters", parameters},
            {"verdict", pass ? "pass" : "fail"},
            {"detail", detail},
            {"witness", witness}};
}

CongruenceReport check_prop1(std::uint32_t p, Mutation m) {
    PrimeField F(p);
    auto r = start("prop1", {{"p", p}}, m);
    const auto E = truncated_exponential(p);
    P2 corr = P2::constant(F, F.one());
    for (std::uint32_t i = 1; i < p; ++i) {
        PrimeField::Element c;
        if (m == Mutation::perturb)
            c = (i + 1) % p ? signed_reciprocal(F, i, i + 1) : F.zero();
        else
            c = signed_reciprocal(F, i, i);
        corr.add_to(i, p - i, c);
    }
    const P2 res = P2::from_u(E) * P2::from_v(E) - substitute(E, P2::u(F) + P2::v(F)) * corr;
    P2 outside(F);
    res.for_each([&](std::size_t i, std::size_t j, const PrimeField::Element& c) {
        if (i < p && j < p) outside.add_to(i, j, c);
    });
    r.witness["correction"] = terms_json(corr);
    if (!outside.is_zero()) {
        fail(r, "residual has monomials outside (X^p, Y^p)");
        r.witness["residual"] = terms_json(outside);
    }
    return r;
}

CongruenceReport check_prop2(std::uint32_t p, std::uint32_t N, Mutation m) {
    PrimeField F(p);
    if (N < 2 * p) throw InvalidArgument("N must be at least 2p");
    auto r = start("prop2", {{"p", p}, {"N", N}}, m);
    const auto Ep = m == Mutation::perturb ? TruncSeries<PrimeField>::from_poly(truncated_exponential(p), N)
                                           : artin_hasse(p, N);
    const auto inv = Ep.inverse();
    const P2 num = (P2::from_u(Ep.to_poly()) * P2::from_v(Ep.to_poly())).truncated_total(N);
    const P2 q = (num * substitute(inv.to_poly(), P2::u(F) + P2::v(F), N)).truncated_total(N);

    json table = json::array(), bad = json::array();
    q.for_each([&](std::size_t i, std::size_t j, const PrimeField::Element& c) {
        table.push_back({i, j, std::to_string(c)});
        if ((i + j) % p != 0 && bad.size() < 16) bad.push_back({i, j, std::to_string(c)});
    });
    r.witness["a"] = table;
    if (q.coeff(0, 0) != F.one()) fail(r, "constant term is not 1");
    if (!bad.empty()) {
        fail(r, "coefficient a_ij != 0 with p not dividing i+j");
        r.witness["violations"] = bad;
    }
    if (q != q.swapped()) fail(r, "a_ij != a_ji");
    return r;
}

CongruenceReport check_lmodp(std::uint32_t p, Mutation m) {
    PrimeField F(p);
    auto r = start("lmodp", {{"p", p}}, m);
    const auto lag = laguerre_bivariate(p);
    auto alpha_plus = [&](std::uint32_t j) { return UP(F, {F.from_int(j), F.one()}); };
    const UP alpha_pm1 = UP::monomial(F, F.one(), p - 1);
    const UP target = UP::constant(F, F.one()) - alpha_pm1;

    json bad = json::array();
    for (std::uint32_t k = 0; k < p; ++k) {
        UP denom = UP::constant(F, F.one());
        const std::uint32_t top = m == Mutation::perturb ? k + 1 : k;
        for (std::uint32_t j = 1; j <= top; ++j) denom = denom * alpha_plus(j);
        const UP lhs = lag.column(k) * denom;
        if (!(lhs == target)) bad.push_back({{"k", k}, {"cleared", upoly_json(lhs)}});
    }
    if (!bad.empty()) {
        fail(r, "X^k coefficient times (alpha+k)...(alpha+1) differs from 1 - alpha^(p-1)");
        r.witness["violations"] = bad;
    }

    UP prod = UP::constant(F, F.one());
    for (std::uint32_t j = 1; j < p; ++j) prod = prod * alpha_plus(j);
    if (!(prod == alpha_pm1 - UP::constant(F, F.one())))
        fail(r, "(alpha+p-1)...(alpha+1) != alpha^(p-1) - 1");
    r.witness["wilson"] = std::to_string(prod.eval(F.zero()));
    if (factorial_mod_p(F, p - 1) != F.neg(F.one()) || prod.eval(F.zero()) != F.neg(F.one()))
        fail(r, "Wilson's theorem fails at alpha = 0");

    // At alpha = a in F_p^x the prefactor vanishes; the X^k coefficient is zero
    // exactly when (alpha+k)...(alpha+1) stays a unit, i.e. k < p - a.
    for (std::uint32_t a = 1; a < p; ++a) {
        const auto la = lag.eval_u(F.from_int(a));
        for (std::uint32_t k = 0; k < p; ++k)
            if ((la.coeff(k) == 0) != (k < p - a))
                fail(r, "X^" + std::to_string(k) + " coefficient of L^{(" + std::to_string(a) + ")} has the wrong support");
    }
    return r;
}

CongruenceReport check_eq3(std::uint32_t p, Mutation m) {
    PrimeField F(p);
    auto r = start("eq3", {{"p", p}}, m);
    const auto L = laguerre_bivariate(p);  // u = gamma, v = X
    const P2 X = P2::v(F), g = P2::u(F);
    P2 res = X * L.derivative_v() - (X - g) * L + P2::monomial(F, F.one(), p, 0) - g;
    if (m == Mutation::none) res -= P2::monomial(F, F.one(), 0, p);
    if (!res.is_zero()) {
        fail(r, "differential equation residual is nonzero");
        r.witness["residual"] = terms_json(res);
    }
    if (!res.eval_v(F.zero()).is_zero()) fail(r, "residual at X = 0 is nonzero");

    const UP E = truncated_exponential(p);
    const UP x = UP::x(F);
    if (!(L.eval_u(F.zero()) == E)) fail(r, "L^{(0)} is not the truncated exponential");
    const UP ediff = x * E.derivative() - x * E - UP::monomial(F, F.one(), p);
    if (!ediff.is_zero()) fail(r, "XE' != XE + X^p");
    return r;
}

CongruenceReport check_prop5(std::uint32_t p, Prop5Mode mode, std::uint32_t trials, std::uint64_t seed, Mutation m) {
    PrimeField F(p);
    const bool drop = m == Mutation::perturb;
    auto r = start("prop5",
                   {{"p", p}, {"mode", mode == Prop5Mode::exact ? "exact" : "randomized"}, {"trials", trials},
                    {"seed", seed}},
                   m);
    if (mode == Prop5Mode::exact && p > 7) throw InvalidArgument("exact mode is limited to p <= 7");

    // alpha = beta = 0
    const auto z = prop5_solve(F, F.zero(), F.zero(), p, drop);
    r.witness["c_at_zero"] = elements_json(F, z.c);
    if (!z.solvable || !z.verified) {
        fail(r, "system at alpha = beta = 0 is not solvable");
    } else {
        for (std::uint32_t i = 0; i < p; ++i) {
            const auto want = i == 0 ? F.one() : signed_reciprocal(F, i, i);
            if (z.c.at(i) != want) fail(r, "c_i at alpha = beta = 0 differs from (-1)^i / i");
        }
    }

    if (mode == Prop5Mode::exact) {
        RationalFunctionField R(F);
        const auto s = prop5_solve(R, R.alpha(), R.beta(), p, drop);
        r.witness["c"] = elements_json(R, s.c);
        r.witness["solution_dim"] = s.solution_dim;
        if (!s.solvable) fail(r, "linear system over F_p(alpha, beta) is inconsistent");
        else if (!s.verified) fail(r, "solved identity does not hold in the quotient");
        return r;
    }

    const auto K = ExtensionField::of_degree(p, 4);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    auto draw = [&] {
        std::vector<std::uint32_t> c(4);
        for (auto& x : c) x = dist(rng);
        return K.from_coeffs(c);
    };
    std::set<std::size_t> dims;
    std::uint32_t resampled = 0, ok = 0;
    json first;
    for (std::uint32_t t = 0; t < trials; ++t) {
        auto a = draw(), b = draw();
        while (K.equal(K.pow(K.add(a, b), p - 1), K.one())) {
            ++resampled;
            a = draw();
            b = draw();
        }
        const auto s = prop5_solve(K, a, b, p, drop);
        dims.insert(s.solution_dim);
        if (t == 0) first = {{"alpha", K.to_string(a)}, {"beta", K.to_string(b)}, {"c", elements_json(K, s.c)}};
        if (!s.solvable) {
            fail(r, "trial " + std::to_string(t) + ": linear system is inconsistent");
            continue;
        }
        if (!s.verified) {
            fail(r, "trial " + std::to_string(t) + ": solved identity does not hold in the quotient");
            continue;
        }
        ++ok;
    }
    r.witness["field"] = "F_" + std::to_string(p) + "^4";
    r.witness["consistent_trials"] = ok;
    r.witness["resampled"] = resampled;
    r.witness["solution_dims"] = std::vector<std::size_t>(dims.begin(), dims.end());
    r.witness["first_trial"] = first;
    if (dims.size() > 1) fail(r, "solution space dimension varies across trials");
    return r;
}

CongruenceReport check_prop6(std::uint32_t p, std::uint32_t N, Mutation m) {
    PrimeField F(p);
    if (N < 3 * p) throw InvalidArgument("N must be at least 3p");
    auto r = start("prop6", {{"p", p}, {"N", N}}, m);
    const auto lag = laguerre_bivariate(p);
    UP alpha(F);
    for (std::uint64_t q = p; q < N; q *= p) alpha = alpha - UP::monomial(F, F.one(), q);
    if (m == Mutation::perturb) alpha = alpha - UP::x(F);
    UP S(F);
    for (int k = 0; k <= lag.degree_v(); ++k) {
        const auto ck = lag.column(static_cast<std::size_t>(k)).compose(alpha);
        S = S + ck * UP::monomial(F, F.one(), static_cast<std::size_t>(k));
    }
    const auto q = TruncSeries<PrimeField>::from_poly(S, N) * artin_hasse(p, N).inverse();
    json G = json::array(), bad = json::array();
    for (std::size_t i = 0; i < N; ++i) {
        if (i % p == 0) G.push_back(std::to_string(q[i]));
        else if (q[i] != 0) bad.push_back({i, std::to_string(q[i])});
    }
    r.witness["G"] = G;
    if (q[0] != 1) fail(r, "constant term of S/E_p is not 1");
    if (!bad.empty()) {
        fail(r, "S/E_p has a coefficient at an exponent not divisible by p");
        r.witness["violations"] = bad;
    }
    return r;
}

CongruenceReport check_example1(std::uint32_t p, std::uint32_t n, std::uint32_t s, Mutation m) {
    if (p <= 3) throw HypothesisError("the W(1;n) example needs p > 3");
    if (s >= n) throw HypothesisError("the W(1;n) example needs s < n");
    auto r = start("example1", {{"p", p}, {"n", n}, {"s", s}}, m);
    const auto w = zassenhaus(p, n);
    const auto& A = w.algebra;
    const auto& F = A.field();
    const auto q = ipow(p, s), top = q * p;
    const auto E = artin_hasse_operator(power_derivation(ad_basis(A, 0), q));
    // E_p(D)(b_t d), b_t = (t / q)! x^{(t)}; b_{-1} = 0
    auto Eb = [&](std::int64_t t) {
        if (t < 0) return zero_vector(F, A.dim());
        const auto idx = static_cast<std::size_t>(t);
        return E.apply(scaled(F, unit_vector(F, A.dim(), idx), factorial_mod_p(F, idx / q)));
    };
    const auto Ed = Eb(0);
    json bad = json::array();
    for (std::uint64_t t = 0; t < top; ++t) {
        const auto lhs = A.product(Ed, Eb(static_cast<std::int64_t>(t)));
        auto c = F.one();
        if (t % q == 0) {
            c = F.from_int(static_cast<std::int64_t>(t / q));
            if (m == Mutation::perturb) c = F.add(c, F.one());
        }
        const auto rhs = scaled(F, Eb(static_cast<std::int64_t>(t) - 1), c);
        if (!vectors_equal(F, lhs, rhs) && bad.size() < 8) bad.push_back(static_cast<std::int64_t>(t) - 1);
    }
    r.witness["checked"] = top;
    if (!bad.empty()) {
        fail(r, "bracket with E_p(D)d differs from the stated action");
        r.witness["failing_i"] = bad;
    }
    const auto lhs = A.product(Eb(static_cast<std::int64_t>(2 * q)), Eb(static_cast<std::int64_t>((p - 1) * q)));
    const auto rhs = scaled(F, Eb(static_cast<std::int64_t>(q) - 1), F.from_int(static_cast<std::int64_t>(p) - 3));
    if (!vectors_equal(F, lhs, rhs)) fail(r, "[E_p(D)b_{2p^s}d, E_p(D)b_{(p-1)p^s}d] != (p-3) E_p(D)b_{p^s-1}d");
    return r;
}

CongruenceReport check_example2(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t s, Mutation mu) {
    if (p <= 3) throw HypothesisError("the H(2;(n,m);Phi(1)) example needs p > 3");
    if (s >= n) throw HypothesisError("the H(2;(n,m);Phi(1)) example needs s < n");
    auto r = start("example2", {{"p", p}, {"n", n}, {"m", m}, {"s", s}}, mu);
    const auto h = albert_zassenhaus(p, n, m);
    const auto& A = h.algebra;
    const auto& F = A.field();
    const auto Nx = ipow(p, n), Ny = ipow(p, m), q = ipow(p, s);
    const auto D = power_derivation(ad_basis(A, h.index("y")), q);
    const auto Dn = D.pow(ipow(p, n - s));
    auto e = [&](std::uint64_t i, std::uint64_t jj) { return unit_vector(F, A.dim(), i * Ny + jj); };

    json bad = json::array();
    for (std::uint64_t i = 0; i < Nx; ++i)
        for (std::uint64_t jj = 0; jj < Ny; ++jj) {
            // the monomial x^{(i)} y^{(j+1)} with j = jj - 1
            auto minus_j = F.from_int(1 - static_cast<std::int64_t>(jj));
            if (mu == Mutation::perturb) minus_j = F.neg(minus_j);
            const auto want = i >= q ? e(i - q, jj) : scaled(F, e(Nx - q + i, jj), minus_j);
            const auto x = e(i, jj);
            if (!vectors_equal(F, D.apply(x), want) && bad.size() < 8) bad.push_back({{"i", i}, {"j+1", jj}, {"map", "D"}});
            if (!vectors_equal(F, Dn.apply(x), scaled(F, x, minus_j)) && bad.size() < 8)
                bad.push_back({{"i", i}, {"j+1", jj}, {"map", "D^(p^(n-s))"}});
        }
    r.witness["checked"] = Nx * Ny;
    if (!bad.empty()) {
        fail(r, "D differs from the stated action");
        r.witness["failing"] = bad;
    }
    if (Dn.pow(p) != Dn) fail(r, "D^(p^(n-s+1)) != D^(p^(n-s))");
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",  "prop1", "prop2",    "lmodp",   "eq3",
                                                "prop5", "prop6", "example1", "example2"};
    return names;
}

std::vector<CongruenceReport> run_suite(std::uint32_t p, const std::string& suite, const SuiteOptions& opt) {
    check_prime(p);
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw InvalidArgument("unknown identity suite '" + suite + "'");
    const bool all = suite == "all";
    std::vector<CongruenceReport> out;
    if (all || suite == "prop1") out.push_back(check_prop1(p));
    if (all || suite == "prop2") out.push_back(check_prop2(p, 4 * p));
    if (all || suite == "lmodp") out.push_back(check_lmodp(p));
    if (all || suite == "eq3") out.push_back(check_eq3(p));
    if (all || suite == "prop5") {
        const auto mode = p <= opt.prop5_exact_max_p ? Prop5Mode::exact : Prop5Mode::randomized;
        out.push_back(check_prop5(p, mode, opt.trials, opt.seed));
    }
    if (all || suite == "prop6") out.push_back(check_prop6(p, 3 * p));
    if (p > 3 && (all || suite == "example1"))
        for (auto [n, s] : {std::pair{1u, 0u}, {2u, 0u}, {2u, 1u}}) out.push_back(check_example1(p, n, s));
    if (p > 3 && (all || suite == "example2"))
        for (auto [n, m, s] : {std::tuple{1u, 1u, 0u}, {2u, 1u, 1u}}) out.push_back(check_example2(p, n, m, s));
    if (!all && p <= 3 && (suite == "example1" || suite == "example2"))
        throw HypothesisError("the " + suite + " checks need p > 3");
    return out;
}

}  // namespace gradsw
