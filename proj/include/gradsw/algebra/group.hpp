#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gradsw {

/// Element of Z^f x Z/m_1 x ... x Z/m_t. Residues are kept reduced.
struct GroupElement {
    std::vector<std::int64_t> free;
    std::vector<std::int64_t> torsion;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^f x Z/m_1 x ... x Z/m_t, m_i >= 2.
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);

    static AbelianGroup integers() { return AbelianGroup(1, {}); }
    static AbelianGroup cyclic(std::int64_t m) { return AbelianGroup(0, {m}); }

    std::size_t free_rank() const noexcept { return free_; }
    const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
    /// Number of canonical generators: free ones first, then torsion ones.
    std::size_t generator_count() const noexcept { return free_ + torsion_.size(); }
    bool is_trivial() const noexcept { return free_ == 0 && torsion_.empty(); }
    /// For a cyclic group: its order, with 0 standing for Z. Throws otherwise.
    std::int64_t cyclic_order() const;

    GroupElement zero() const;
    GroupElement generator(std::size_t i) const;
    GroupElement element(std::vector<std::int64_t> free, std::vector<std::int64_t> torsion) const;
    /// Element of a cyclic group from an integer.
    GroupElement from_int(std::int64_t v) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
    GroupElement scale(std::int64_t k, const GroupElement& a) const;
    bool is_zero(const GroupElement& a) const;
    /// Throws InvalidArgument when the shape does not match.
    void check(const GroupElement& a) const;

    std::string to_string(const GroupElement& a) const;
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    GroupElement reduce(GroupElement a) const;

    std::size_t free_ = 0;
    std::vector<std::int64_t> torsion_;
};

/// Homomorphism given by the images of the canonical generators of the source.
struct GroupHom {
    AbelianGroup source, target;
    std::vector<GroupElement> images;

    /// Throws InvalidArgument unless m_i * image(t_i) = 0 for each torsion generator.
    void check() const;
    GroupElement apply(const GroupElement& g) const;

    static GroupHom identity(const AbelianGroup& g);
    /// Z^f x prod Z/m_i -> Z/M sending the `index`-th generator to 1 and the
    /// others to 0.
    static GroupHom project_to_cyclic(const AbelianGroup& g, std::size_t index, std::int64_t modulus);
};

/// G1 x G2 with canonical (ascending) torsion order, together with the
/// embedding of element pairs.
struct ProductGroup {
    AbelianGroup group;
    std::vector<std::size_t> torsion_position;  // position of the concatenated torsion index in `group`

    GroupElement pair(const GroupElement& a, const GroupElement& b) const;
    /// Projections onto the two factors.
    GroupHom first, second;
};

ProductGroup product(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace gradsw
