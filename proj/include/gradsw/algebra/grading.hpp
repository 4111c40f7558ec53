#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradsw/algebra/algebra.hpp"
#include "gradsw/algebra/group.hpp"
#include "gradsw/error.hpp"
#include "gradsw/linalg/elimination.hpp"

namespace gradsw {

template <class F>
struct GradingComponent {
    GroupElement degree;
    std::vector<Vec<F>> basis;
};

/// A decomposition A = sum of A_g over the degrees of a group. Components are
/// stored sorted by degree, with distinct degrees and nonzero dimension.
/// Construction does not check the grading axiom; see verify_grading.
template <class F>
class Grading {
public:
    Grading(F field, std::size_t dim, AbelianGroup group, std::vector<GradingComponent<F>> components)
        : field_(std::move(field)), dim_(dim), group_(std::move(group)) {
        for (auto& c : components) {
            group_.check(c.degree);
            if (c.basis.empty()) continue;
            for (const auto& v : c.basis)
                if (v.size() != dim_) throw InvalidArgument("component vector length does not match dimension");
            components_.push_back(std::move(c));
        }
        std::sort(components_.begin(), components_.end(),
                  [](const auto& a, const auto& b) { return a.degree < b.degree; });
        for (std::size_t i = 0; i + 1 < components_.size(); ++i)
            if (components_[i].degree == components_[i + 1].degree)
                throw InvalidArgument("repeated degree " + group_.to_string(components_[i].degree));
    }

    /// One component per basis vector e_i, of degree degree_of(i).
    template <class DegreeFn>
    static Grading from_basis_degrees(const F& field, std::size_t dim, const AbelianGroup& group, DegreeFn&& degree_of) {
        std::map<GroupElement, std::vector<Vec<F>>> parts;
        for (std::size_t i = 0; i < dim; ++i) parts[degree_of(i)].push_back(unit_vector(field, dim, i));
        std::vector<GradingComponent<F>> comps;
        for (auto& [g, b] : parts) comps.push_back({g, std::move(b)});
        return Grading(field, dim, group, std::move(comps));
    }

    const F& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<GradingComponent<F>>& components() const noexcept { return components_; }
    std::size_t size() const noexcept { return components_.size(); }

    std::optional<std::size_t> find(const GroupElement& g) const {
        auto it = std::lower_bound(components_.begin(), components_.end(), g,
                                   [](const auto& c, const GroupElement& x) { return c.degree < x; });
        if (it == components_.end() || it->degree != g) return std::nullopt;
        return static_cast<std::size_t>(it - components_.begin());
    }

    std::vector<GroupElement> support() const {
        std::vector<GroupElement> s;
        for (const auto& c : components_) s.push_back(c.degree);
        return s;
    }

    bool all_one_dimensional() const {
        return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.basis.size() == 1; });
    }

    /// Columns are the component bases in component order.
    Matrix<F> stacked_basis() const {
        std::vector<Vec<F>> cols;
        for (const auto& c : components_) cols.insert(cols.end(), c.basis.begin(), c.basis.end());
        return Matrix<F>::from_columns(field_, dim_, cols);
    }

    Subspace<F> subspace(std::size_t i) const { return Subspace<F>(field_, dim_, components_.at(i).basis); }

    /// Direct-sum check: dimensions add up and the stacked basis is invertible.
    bool is_direct_sum() const {
        std::size_t total = 0;
        for (const auto& c : components_) total += c.basis.size();
        return total == dim_ && rank(stacked_basis()) == dim_;
    }

private:
    F field_;
    std::size_t dim_;
    AbelianGroup group_;
    std::vector<GradingComponent<F>> components_;
};

struct GradingViolation {
    std::size_t component_g, component_h;  // indices into components()
    std::size_t vector_a, vector_b;        // basis indices within those components
};

struct GradingReport {
    bool ok = true;
    std::string reason;
    std::optional<GradingViolation> witness;
};

/// Checks the direct-sum property and A_g A_h within A_{g+h} for every pair of
/// components, reporting the first violation in lexicographic order.
template <class F>
GradingReport verify_grading(const Algebra<F>& a, const Grading<F>& gr) {
    if (gr.dim() != a.dim()) return {false, "grading dimension does not match algebra", std::nullopt};
    if (!gr.is_direct_sum()) return {false, "components do not form a direct sum decomposition", std::nullopt};
    const auto& comps = gr.components();
    const auto& G = gr.group();
    std::vector<Subspace<F>> spaces;
    spaces.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) spaces.push_back(gr.subspace(i));
    for (std::size_t g = 0; g < comps.size(); ++g)
        for (std::size_t h = 0; h < comps.size(); ++h) {
            const auto target = gr.find(G.add(comps[g].degree, comps[h].degree));
            for (std::size_t x = 0; x < comps[g].basis.size(); ++x)
                for (std::size_t y = 0; y < comps[h].basis.size(); ++y) {
                    const auto prod = a.product(comps[g].basis[x], comps[h].basis[y]);
                    const bool ok = target ? spaces[*target].contains(prod) : is_zero_vector(a.field(), prod);
                    if (!ok)
                        return {false,
                                "product of components " + G.to_string(comps[g].degree) + " and " +
                                    G.to_string(comps[h].degree) + " leaves the component of their sum",
                                GradingViolation{g, h, x, y}};
                }
        }
    return {};
}

/// Checks D(A_g) within A_{g+d} for every component; returns the index of
/// the first failing component.
template <class F>
std::optional<std::size_t> homogeneity_violation(const Grading<F>& gr, const Matrix<F>& d, const GroupElement& deg) {
    const auto& G = gr.group();
    for (std::size_t i = 0; i < gr.size(); ++i) {
        const auto& c = gr.components()[i];
        const auto target = gr.find(G.add(c.degree, deg));
        std::optional<Subspace<F>> space;
        if (target) space = gr.subspace(*target);
        for (const auto& v : c.basis) {
            const auto w = d.apply(v);
            if (space ? !space->contains(w) : !is_zero_vector(gr.field(), w)) return i;
        }
    }
    return std::nullopt;
}

struct DerivationDegree {
    GroupElement degree;
    /// Whether p * degree vanishes in the grading group.
    bool p_torsion = false;
};

/// The degree d with D(A_g) within A_{g+d} for all g. Throws HypothesisError
/// naming the first component where no single degree works.
template <class F>
DerivationDegree graded_derivation_degree(const Grading<F>& gr, const Matrix<F>& d) {
    const F& f = gr.field();
    const auto& G = gr.group();
    const auto& comps = gr.components();
    if (!gr.is_direct_sum()) throw InvalidArgument("grading is not a direct sum");
    const auto inv = inverse(gr.stacked_basis());
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < comps.size(); ++i) owner.insert(owner.end(), comps[i].basis.size(), i);

    std::optional<GroupElement> deg;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (const auto& v : comps[i].basis) {
            const auto coords = inv.apply(d.apply(v));
            for (auto s : support(f, coords)) {
                const auto cand = G.sub(comps[owner[s]].degree, comps[i].degree);
                if (!deg) deg = cand;
                if (*deg != cand)
                    throw HypothesisError("derivation is not homogeneous: component " + G.to_string(comps[i].degree) +
                                          " is not mapped into a single component");
            }
        }
    }
    DerivationDegree out{deg ? *deg : G.zero(), false};
    out.p_torsion = G.is_zero(G.scale(f.characteristic(), out.degree));
    return out;
}

/// Image of a grading under a group homomorphism; components with the same
/// image are merged.
template <class F>
Grading<F> coarsen(const Grading<F>& gr, const GroupHom& phi) {
    if (!(phi.source == gr.group())) throw InvalidArgument("homomorphism source is not the grading group");
    phi.check();
    std::map<GroupElement, std::vector<Vec<F>>> parts;
    for (const auto& c : gr.components()) {
        auto& dst = parts[phi.apply(c.degree)];
        dst.insert(dst.end(), c.basis.begin(), c.basis.end());
    }
    std::vector<GradingComponent<F>> comps;
    for (auto& [g, b] : parts) comps.push_back({g, std::move(b)});
    return Grading<F>(gr.field(), gr.dim(), phi.target, std::move(comps));
}

template <class K>
Grading<K> extend_scalars(const Grading<PrimeField>& gr, const K& target) {
    std::vector<GradingComponent<K>> comps;
    for (const auto& c : gr.components()) {
        GradingComponent<K> e{c.degree, {}};
        for (const auto& v : c.basis) {
            Vec<K> w;
            w.reserve(v.size());
            for (auto x : v) w.push_back(target.from_prime(x));
            e.basis.push_back(std::move(w));
        }
        comps.push_back(std::move(e));
    }
    return Grading<K>(target, gr.dim(), gr.group(), std::move(comps));
}

/// The grading by G1 x G2 whose components are the pairwise intersections.
template <class F>
Grading<F> intersect(const Grading<F>& g1, const Grading<F>& g2) {
    if (g1.dim() != g2.dim()) throw InvalidArgument("gradings of different dimension");
    const auto pg = product(g1.group(), g2.group());
    std::vector<GradingComponent<F>> comps;
    std::size_t total = 0;
    std::vector<Subspace<F>> s2;
    for (std::size_t j = 0; j < g2.size(); ++j) s2.push_back(g2.subspace(j));
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const auto s1 = g1.subspace(i);
        for (std::size_t j = 0; j < g2.size(); ++j) {
            auto s = s1.intersect(s2[j]);
            if (s.dim() == 0) continue;
            total += s.dim();
            comps.push_back({pg.pair(g1.components()[i].degree, g2.components()[j].degree), s.basis()});
        }
    }
    if (total != g1.dim()) throw HypothesisError("not a common refinement: intersections do not span the algebra");
    return Grading<F>(g1.field(), g1.dim(), pg.group, std::move(comps));
}

}  // namespace gradsw
