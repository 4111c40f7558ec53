#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace gradsw {

/// Result of one identity check. `witness` holds the computed tables
/// (coefficients, residuals, first failing case) and is reproducible from
/// `parameters`.
struct CongruenceReport {
    std::string identity;
    nlohmann::json parameters = nlohmann::json::object();
    bool pass = false;
    std::string detail;
    nlohmann::json witness = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// Each checker has one fixed perturbation that must make it fail; see the
/// comment on each function.
enum class Mutation { none, perturb };

/// E(X)E(Y) - E(X+Y)(1 + sum_{i=1}^{p-1} (-1)^i X^i Y^{p-i} / i) lies in (X^p, Y^p).
/// Perturbation: (-1)^i / (i+1) in place of (-1)^i / i, and 0 where i+1 = p.
CongruenceReport check_prop1(std::uint32_t p, Mutation m = Mutation::none);

/// Every coefficient a_ij of E_p(X)E_p(Y)/E_p(X+Y) below total degree N has
/// p | i+j. Perturbation: the truncated exponential E in place of E_p.
CongruenceReport check_prop2(std::uint32_t p, std::uint32_t N, Mutation m = Mutation::none);

/// L_{p-1}^{(alpha)}(X) = (1 - alpha^{p-1}) sum_k X^k / ((alpha+k)...(alpha+1)), checked
/// coefficientwise after clearing denominators, with (alpha+p-1)...(alpha+1) = alpha^{p-1} - 1,
/// Wilson's theorem, and for a in F_p^x the vanishing of the X^k coefficient of
/// L^{(a)} exactly for k < p - a.
/// Perturbation: the denominator (alpha+k+1)...(alpha+1).
CongruenceReport check_lmodp(std::uint32_t p, Mutation m = Mutation::none);

/// X dL/dX - (X - gamma) L - X^p + (gamma^p - gamma) = 0 in F_p[gamma, X] for
/// L = L_{p-1}^{(gamma)}(X), and XE' = XE + X^p at gamma = 0.
/// Perturbation: the X^p term is dropped.
CongruenceReport check_eq3(std::uint32_t p, Mutation m = Mutation::none);

enum class Prop5Mode { exact, randomized };

/// Solves L^{(alpha)}(X) L^{(beta)}(Y) = L^{(alpha+beta)}(X+Y)(c_0 + sum_{i=1}^{p-1} c_i X^i Y^{p-i})
/// modulo X^p - (alpha^p - alpha), Y^p - (beta^p - beta), over F_p(alpha, beta)
/// (exact) or at random points of F_{p^4} off (alpha+beta)^{p-1} = 1
/// (randomized), and verifies each solution. Also checks that alpha = beta = 0
/// gives c_0 = 1, c_i = (-1)^i / i.
/// Perturbation: the X^{p-1}Y candidate is dropped.
CongruenceReport check_prop5(std::uint32_t p, Prop5Mode mode, std::uint32_t trials = 20, std::uint64_t seed = 0,
                             Mutation m = Mutation::none);

/// S(X) = L_{p-1}^{(alpha)}(X) at alpha = -sum_{i>=1} X^{p^i} satisfies S/E_p in
/// 1 + X^p F_p[[X^p]] below degree N. Perturbation: alpha = -X - sum X^{p^i}.
CongruenceReport check_prop6(std::uint32_t p, std::uint32_t N, Mutation m = Mutation::none);

/// Bracket actions of E_p(D)-images, D = (ad d)^{p^s} on W(1;n), in the basis
/// b_{ap^s+k} = (x^{(p^s)})^a x^{(k)} = a! x^{(ap^s+k)} of the subalgebra W(1;s+1):
/// [E_p(D)d, E_p(D)(b_{i+1}d)] is ((i+1)/p^s) E_p(D)(b_i d) when p^s | i+1 and
/// E_p(D)(b_i d) otherwise, and
/// [E_p(D)(b_{2p^s}d), E_p(D)(b_{(p-1)p^s}d)] = (p-3) E_p(D)(b_{p^s-1}d).
/// Needs p > 3 and s < n. Perturbation: (i+1)/p^s + 1 in the divisible case.
CongruenceReport check_example1(std::uint32_t p, std::uint32_t n, std::uint32_t s, Mutation m = Mutation::none);

/// D = (ad y)^{p^s} on H(2;(n,m);Phi(1)) sends x^{(i)}y^{(j+1)} to x^{(i-p^s)}y^{(j+1)}
/// when i >= p^s and to -j x^{(p^n-p^s+i)}y^{(j+1)} otherwise; D^{p^{n-s}} acts
/// as -j; D^{p^{n-s+1}} = D^{p^{n-s}}. Needs p > 3 and s < n.
/// Perturbation: +j in place of -j.
CongruenceReport check_example2(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t s,
                                Mutation mu = Mutation::none);

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::uint32_t trials = 20;
    /// Exact check_prop5 up to this p, randomized above.
    std::uint32_t prop5_exact_max_p = 3;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named checker (or "all") with default parameters. The W(1;n) and
/// H(2;(n,m);Phi(1)) examples need p > 3 and are left out of "all" below that.
std::vector<CongruenceReport> run_suite(std::uint32_t p, const std::string& suite, const SuiteOptions& opt = {});

}  // namespace gradsw
