#include "gradsw/algebra/universal.hpp"

#include <set>

namespace gradsw::detail {

UniversalGroup universal_group_from_relations(std::size_t n, const std::vector<std::array<std::size_t, 3>>& relations) {
    LatticeBasis lattice(n);
    std::set<std::vector<BigInt>> seen;
    for (const auto& [s1, s2, s3] : relations) {
        std::vector<BigInt> v(n);
        v[s1] += 1;
        v[s2] += 1;
        v[s3] -= 1;
        if (seen.insert(v).second) lattice.insert(std::move(v));
    }
    UniversalGroup out;
    out.relations = seen.size();
    out.snf = smith_normal_form(lattice.as_columns());
    const auto& snf = out.snf;

    // Cokernel coordinates: row i of U e_s, reduced mod d_i where d_i > 1,
    // dropped where d_i = 1, kept as integers for the free rows.
    std::vector<std::size_t> torsion_rows;
    std::vector<std::int64_t> moduli;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.invariant_factors[i] > 1) {
            torsion_rows.push_back(i);
            moduli.push_back(static_cast<std::int64_t>(snf.invariant_factors[i]));
        }
    out.group = AbelianGroup(snf.free_rank, moduli);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::int64_t> f, t;
        for (std::size_t i = snf.rank; i < n; ++i) f.push_back(static_cast<std::int64_t>(snf.U(i, s)));
        for (auto i : torsion_rows) {
            BigInt r = snf.U(i, s) % snf.invariant_factors[i];
            t.push_back(static_cast<std::int64_t>(r));
        }
        out.images.push_back(out.group.element(std::move(f), std::move(t)));
    }
    return out;
}

}  // namespace gradsw::detail
