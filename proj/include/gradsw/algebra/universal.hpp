#pragma once

#include <vector>

#include "gradsw/algebra/grading.hpp"
#include "gradsw/linalg/snf.hpp"

namespace gradsw {

/// Free abelian group on the support modulo s1 + s2 = s3 whenever
/// 0 != A_{s1} A_{s2}, which lies in A_{s3}.
struct UniversalGroup {
    AbelianGroup group;
    SNFResult snf;
    /// Image of each support element, in component order.
    std::vector<GroupElement> images;
    std::size_t relations = 0;
};

namespace detail {

UniversalGroup universal_group_from_relations(std::size_t support_size,
                                              const std::vector<std::array<std::size_t, 3>>& relations);

}  // namespace detail

/// Requires a verified grading; a nonzero product landing outside the
/// support raises HypothesisError.
template <class F>
UniversalGroup universal_group(const Algebra<F>& a, const Grading<F>& gr) {
    const auto& comps = gr.components();
    const auto& G = gr.group();
    std::vector<std::array<std::size_t, 3>> rel;
    for (std::size_t s1 = 0; s1 < comps.size(); ++s1)
        for (std::size_t s2 = 0; s2 < comps.size(); ++s2) {
            bool nonzero = false;
            for (const auto& u : comps[s1].basis) {
                for (const auto& v : comps[s2].basis)
                    if (!is_zero_vector(a.field(), a.product(u, v))) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) break;
            }
            if (!nonzero) continue;
            const auto s3 = gr.find(G.add(comps[s1].degree, comps[s2].degree));
            if (!s3) throw HypothesisError("nonzero product outside the support; the decomposition is not a grading");
            rel.push_back({s1, s2, *s3});
        }
    return detail::universal_group_from_relations(comps.size(), rel);
}

}  // namespace gradsw
