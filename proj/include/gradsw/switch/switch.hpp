#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gradsw/algebra/algebra.hpp"
#include "gradsw/algebra/grading.hpp"
#include "gradsw/arith/extension_field.hpp"
#include "gradsw/arith/special.hpp"
#include "gradsw/error.hpp"
#include "gradsw/linalg/fitting.hpp"

namespace gradsw {

enum class Variant { truncated, artin_hasse, laguerre };

std::string to_string(Variant v);
/// Accepts "truncated", "artin-hasse", "artin_hasse", "laguerre".
Variant parse_variant(const std::string& s);

/// Hypothesis data certified before an operator is built.
struct SwitchPlan {
    Variant variant = Variant::truncated;
    /// Degree of D in the input grading group.
    GroupElement degree;
    /// Order m of the cyclic grading group.
    std::int64_t modulus = 1;
    /// Smallest k with D^k = 0 (truncated and artin_hasse).
    std::size_t nilpotency_index = 0;
    /// Laguerre only: minimal r with D^{p^{r+1}} = D^{p^r}, the exponents p^i
    /// of h(t) = sum t^{p^i} for 1 <= i < r, and the Fitting blocks.
    std::uint32_t r = 0;
    std::vector<std::uint64_t> h_exponents;
    std::vector<std::uint32_t> eigenvalues;
    std::vector<std::size_t> block_sizes;
};

/// Output of a switching engine. The constructor runs verify_grading on the
/// new grading and throws VerificationFailure if it fails, so every value of
/// this type carries a passing report.
template <class K>
class SwitchResult {
public:
    SwitchResult(SwitchPlan plan, Matrix<K> op, const Algebra<K>& a, Grading<K> gr)
        : plan_(std::move(plan)), op_(std::move(op)), grading_(std::move(gr)) {
        report_ = verify_grading(a, grading_);
        if (!report_.ok) throw VerificationFailure("switched decomposition is not a grading: " + report_.reason);
    }

    const SwitchPlan& plan() const noexcept { return plan_; }
    const Matrix<K>& op() const noexcept { return op_; }
    const Grading<K>& grading() const noexcept { return grading_; }
    const GradingReport& report() const noexcept { return report_; }

private:
    SwitchPlan plan_;
    Matrix<K> op_;
    Grading<K> grading_;
    GradingReport report_;
};

namespace detail {

/// m for a grading by Z/mZ (m = 1 for the trivial group). Free gradings are
/// refused.
std::int64_t cyclic_modulus(const AbelianGroup& g);

template <class F>
std::vector<typename F::Element> lift_coeffs(const F& f, const std::vector<std::uint32_t>& c) {
    std::vector<typename F::Element> out;
    out.reserve(c.size());
    for (auto x : c) out.push_back(f.from_prime(x));
    return out;
}

/// Certifies that D is a derivation, homogeneous for gr, with p*d = 0.
template <class F>
SwitchPlan certify(Variant v, const Algebra<F>& a, const Grading<F>& gr, const Matrix<F>& d) {
    if (d.dim() != a.dim() || gr.dim() != a.dim()) throw InvalidArgument("algebra, grading and derivation dimensions differ");
    SwitchPlan plan;
    plan.variant = v;
    plan.modulus = cyclic_modulus(gr.group());
    if (!is_derivation(a, d).ok) throw HypothesisError("D is not a derivation of the algebra");
    const auto deg = graded_derivation_degree(gr, d);
    if (!deg.p_torsion)
        throw HypothesisError("p*d != 0 in Z/" + std::to_string(plan.modulus) + " for d = " +
                              gr.group().to_string(deg.degree) + "; the modulus must divide p*d");
    plan.degree = deg.degree;
    return plan;
}

template <class K>
Grading<K> image_grading(const Matrix<K>& op, const Grading<K>& gr) {
    std::vector<GradingComponent<K>> comps;
    for (const auto& c : gr.components()) {
        GradingComponent<K> img{c.degree, {}};
        for (const auto& v : c.basis) img.basis.push_back(op.apply(v));
        comps.push_back(std::move(img));
    }
    return Grading<K>(gr.field(), gr.dim(), gr.group(), std::move(comps));
}

template <class K>
void require_invertible(const Matrix<K>& op, const char* what) {
    if (rank(op) != op.dim()) throw InternalInconsistency(std::string(what) + " is not invertible");
}

template <class K>
void require_still_graded(const Grading<K>& gr, const Matrix<K>& d, const GroupElement& deg) {
    if (homogeneity_violation(gr, d, deg))
        throw InternalInconsistency("D is not homogeneous of its original degree for the switched grading");
}

inline Matrix<ExtensionField> to_extension(const Matrix<PrimeField>& m, const ExtensionField& k) {
    return extend_scalars(m, k);
}
inline Matrix<ExtensionField> to_extension(const Matrix<ExtensionField>& m, const ExtensionField& k) {
    if (!(m.field() == k)) throw InvalidArgument("matrix is over a different extension field");
    return m;
}
inline Algebra<ExtensionField> to_extension(const Algebra<PrimeField>& a, const ExtensionField& k) {
    return extend_scalars(a, k);
}
inline Algebra<ExtensionField> to_extension(const Algebra<ExtensionField>& a, const ExtensionField& k) {
    if (!(a.field() == k)) throw InvalidArgument("algebra is over a different extension field");
    return a;
}
inline Grading<ExtensionField> to_extension(const Grading<PrimeField>& g, const ExtensionField& k) {
    return extend_scalars(g, k);
}
inline Grading<ExtensionField> to_extension(const Grading<ExtensionField>& g, const ExtensionField& k) {
    if (!(g.field() == k)) throw InvalidArgument("grading is over a different extension field");
    return g;
}

inline ExtensionField artin_schreier_for(const PrimeField& f) { return ExtensionField::artin_schreier(f.characteristic()); }
inline ExtensionField artin_schreier_for(const ExtensionField& f) {
    if (!f.is_artin_schreier()) throw InvalidArgument("Laguerre switching needs F_p or the field F_p[t]/(t^p - t - 1)");
    return f;
}

}  // namespace detail

/// E(D) = sum_{i<p} D^i / i!.
template <class F>
Matrix<F> truncated_exp_operator(const Matrix<F>& d) {
    const auto& f = d.field();
    return eval_poly(detail::lift_coeffs(f, truncated_exponential(f.characteristic()).coeffs()), d);
}

/// E_p(D) for nilpotent D, truncated at the nilpotency index.
template <class F>
Matrix<F> artin_hasse_operator(const Matrix<F>& d) {
    const auto& f = d.field();
    const auto k = nilpotency_index(d);
    if (k == 0) throw HypothesisError("D is not nilpotent; Artin-Hasse switching needs a nilpotent derivation");
    return eval_poly(detail::lift_coeffs(f, artin_hasse(f.characteristic(), k).coeffs()), d);
}

/// Grading {E(D) A_i}. Needs D^p = 0, a cyclic grading group Z/mZ and p*d = 0.
template <class F>
SwitchResult<F> switch_truncated(const Algebra<F>& a, const Grading<F>& gr, const Matrix<F>& d) {
    auto plan = detail::certify(Variant::truncated, a, gr, d);
    const auto p = a.field().characteristic();
    if (!d.pow(p).is_zero()) throw HypothesisError("truncated switching requires D^p = 0");
    plan.nilpotency_index = nilpotency_index(d);
    auto op = truncated_exp_operator(d);
    detail::require_invertible(op, "E(D)");
    auto ng = detail::image_grading(op, gr);
    return SwitchResult<F>(std::move(plan), std::move(op), a, std::move(ng));
}

/// Grading {E_p(D) A_i}. Needs D nilpotent, a cyclic grading group Z/mZ and
/// p*d = 0. D is checked to remain homogeneous of degree d.
template <class F>
SwitchResult<F> switch_artin_hasse(const Algebra<F>& a, const Grading<F>& gr, const Matrix<F>& d) {
    auto plan = detail::certify(Variant::artin_hasse, a, gr, d);
    plan.nilpotency_index = nilpotency_index(d);
    auto op = artin_hasse_operator(d);
    detail::require_invertible(op, "E_p(D)");
    auto ng = detail::image_grading(op, gr);
    detail::require_still_graded(ng, d, plan.degree);
    return SwitchResult<F>(std::move(plan), std::move(op), a, std::move(ng));
}

/// L_D over the field F_p[t]/(t^p - t - 1) with gamma = t: on the generalized
/// eigenspace A^{(a)} it is L_{p-1}^{(a gamma - h(D))}(D). The Fitting
/// decomposition is computed over the field of d.
template <class F>
std::pair<Matrix<ExtensionField>, SwitchPlan> laguerre_operator(const Matrix<F>& d) {
    const ExtensionField K = detail::artin_schreier_for(d.field());
    const auto p = K.characteristic();
    const auto fd = fitting_decomposition(d);
    const auto dfit = to_fitting_basis(fd, d);
    const auto lag = laguerre_bivariate(p);
    const auto gamma = K.gamma();
    const std::size_t n = d.dim();

    SwitchPlan plan;
    plan.variant = Variant::laguerre;
    plan.r = fd.r;
    std::uint64_t q = 1;
    for (std::uint32_t i = 1; i < fd.r; ++i) plan.h_exponents.push_back(q *= p);
    plan.eigenvalues = fd.eigenvalue_residues;

    Matrix<ExtensionField> blk(K, n, n);
    for (std::size_t b = 0; b < fd.spaces.size(); ++b) {
        const auto off = fd.offsets[b];
        const auto k = fd.spaces[b].size();
        plan.block_sizes.push_back(k);
        const auto db = detail::to_extension(dfit.block(off, off, k, k), K);
        Matrix<ExtensionField> h(K, k, k);
        for (auto e : plan.h_exponents) h = h + db.pow(e);
        const auto a_gamma = K.mul(K.from_prime(fd.eigenvalue_residues[b]), gamma);
        const auto alpha = Matrix<ExtensionField>::scalar(K, k, a_gamma) - h;
        auto lb = eval_bivariate_at_commuting_pair(lag, alpha, db);
        if (rank(lb) != k) throw InternalInconsistency("Laguerre block is not invertible");
        blk.set_block(off, off, lb);
    }
    const auto B = detail::to_extension(fd.change_of_basis, K);
    auto op = B * blk * inverse(B);
    if (op * B != B * blk) throw InternalInconsistency("block assembly does not match the change of basis");
    return {std::move(op), std::move(plan)};
}

/// Grading {L_D A_k} over F_p[t]/(t^p - t - 1). Needs the eigenvalues of D
/// in F_p, a cyclic grading group Z/mZ and p*d = 0. Inputs over F_p are
/// extended internally.
template <class F>
SwitchResult<ExtensionField> switch_laguerre(const Algebra<F>& a, const Grading<F>& gr, const Matrix<F>& d) {
    auto certified = detail::certify(Variant::laguerre, a, gr, d);
    auto [op, plan] = laguerre_operator(d);
    plan.degree = certified.degree;
    plan.modulus = certified.modulus;
    const auto& K = op.field();
    const auto ak = detail::to_extension(a, K);
    const auto gk = detail::to_extension(gr, K);
    auto ng = detail::image_grading(op, gk);
    detail::require_still_graded(ng, detail::to_extension(d, K), plan.degree);
    return SwitchResult<ExtensionField>(std::move(plan), std::move(op), ak, std::move(ng));
}

/// E(D)x E(D)y - E(D)(xy), always computable.
template <class F>
Vec<F> obstruction_eq1(const Algebra<F>& a, const Matrix<F>& d, const Vec<F>& x, const Vec<F>& y) {
    const auto e = truncated_exp_operator(d);
    return sub(a.field(), a.product(e.apply(x), e.apply(y)), e.apply(a.product(x, y)));
}

/// E(D) sum_{i=1}^{p-1} (-1)^i / i D^i x D^{p-i} y, equal to the Eq1 form when D^p = 0.
template <class F>
Vec<F> obstruction_eq2(const Algebra<F>& a, const Matrix<F>& d, const Vec<F>& x, const Vec<F>& y) {
    const auto& f = a.field();
    const auto p = f.characteristic();
    if (!d.pow(p).is_zero()) throw HypothesisError("the closed obstruction form requires D^p = 0");
    std::vector<Vec<F>> dx{x}, dy{y};
    for (std::uint32_t i = 1; i < p; ++i) {
        dx.push_back(d.apply(dx.back()));
        dy.push_back(d.apply(dy.back()));
    }
    auto acc = zero_vector(f, a.dim());
    for (std::uint32_t i = 1; i < p; ++i) {
        auto c = f.inv(f.from_int(i));
        if (i % 2) c = f.neg(c);
        axpy(f, acc, c, a.product(dx[i], dy[p - i]));
    }
    return truncated_exp_operator(d).apply(acc);
}

template <class F>
std::pair<Vec<F>, Vec<F>> obstruction(const Algebra<F>& a, const Matrix<F>& d, const Vec<F>& x, const Vec<F>& y) {
    return {obstruction_eq1(a, d, x, y), obstruction_eq2(a, d, x, y)};
}

}  // namespace gradsw
