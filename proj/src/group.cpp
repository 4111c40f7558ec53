#include "gradsw/algebra/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gradsw/error.hpp"

namespace gradsw {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : free_(free_rank), torsion_(std::move(torsion)) {
    for (auto m : torsion_)
        if (m < 2) throw InvalidArgument("torsion modulus must be at least 2, got " + std::to_string(m));
}

std::int64_t AbelianGroup::cyclic_order() const {
    if (free_ == 1 && torsion_.empty()) return 0;
    if (free_ == 0 && torsion_.size() == 1) return torsion_[0];
    throw InvalidArgument("group " + to_string() + " is not cyclic");
}

GroupElement AbelianGroup::zero() const {
    return {std::vector<std::int64_t>(free_, 0), std::vector<std::int64_t>(torsion_.size(), 0)};
}

GroupElement AbelianGroup::generator(std::size_t i) const {
    auto g = zero();
    if (i < free_)
        g.free[i] = 1;
    else if (i < generator_count())
        g.torsion[i - free_] = 1;
    else
        throw InvalidArgument("generator index out of range");
    return g;
}

GroupElement AbelianGroup::element(std::vector<std::int64_t> f, std::vector<std::int64_t> t) const {
    GroupElement g{std::move(f), std::move(t)};
    check(g);
    return reduce(std::move(g));
}

GroupElement AbelianGroup::from_int(std::int64_t v) const {
    if (cyclic_order() == 0) return {{v}, {}};
    return {{}, {mod(v, torsion_[0])}};
}

void AbelianGroup::check(const GroupElement& a) const {
    if (a.free.size() != free_ || a.torsion.size() != torsion_.size())
        throw InvalidArgument("group element does not belong to " + to_string());
}

GroupElement AbelianGroup::reduce(GroupElement a) const {
    for (std::size_t i = 0; i < torsion_.size(); ++i) a.torsion[i] = mod(a.torsion[i], torsion_[i]);
    return a;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < free_; ++i) r.free[i] += b.free[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) r.torsion[i] += b.torsion[i];
    return reduce(std::move(r));
}

GroupElement AbelianGroup::neg(const GroupElement& a) const { return scale(-1, a); }

GroupElement AbelianGroup::scale(std::int64_t k, const GroupElement& a) const {
    check(a);
    GroupElement r = a;
    for (auto& x : r.free) x *= k;
    for (std::size_t i = 0; i < torsion_.size(); ++i) r.torsion[i] = mod(r.torsion[i] * mod(k, torsion_[i]), torsion_[i]);
    return r;
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
    check(a);
    return std::all_of(a.free.begin(), a.free.end(), [](auto x) { return x == 0; }) &&
           std::all_of(a.torsion.begin(), a.torsion.end(), [](auto x) { return x == 0; });
}

std::string AbelianGroup::to_string(const GroupElement& a) const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto x : a.free) {
        os << (first ? "" : ", ") << x;
        first = false;
    }
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        os << (first ? "" : ", ") << a.torsion[i] << " mod " << torsion_[i];
        first = false;
    }
    os << ")";
    return os.str();
}

std::string AbelianGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto m : torsion_) {
        os << (first ? "" : " x ") << "Z/" << m;
        first = false;
    }
    if (free_) os << (first ? "" : " x ") << "Z" << (free_ > 1 ? "^" + std::to_string(free_) : "");
    if (first && !free_) os << "0";
    return os.str();
}

void GroupHom::check() const {
    if (images.size() != source.generator_count())
        throw InvalidArgument("homomorphism needs one image per generator of " + source.to_string());
    for (const auto& g : images) target.check(g);
    for (std::size_t i = 0; i < source.torsion().size(); ++i) {
        const auto m = source.torsion()[i];
        if (!target.is_zero(target.scale(m, images[source.free_rank() + i])))
            throw InvalidArgument("ill-defined homomorphism: " + std::to_string(m) + " * image of generator " +
                                  std::to_string(source.free_rank() + i) + " is not zero");
    }
}

GroupElement GroupHom::apply(const GroupElement& g) const {
    source.check(g);
    auto r = target.zero();
    for (std::size_t i = 0; i < g.free.size(); ++i) r = target.add(r, target.scale(g.free[i], images[i]));
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        r = target.add(r, target.scale(g.torsion[i], images[source.free_rank() + i]));
    return r;
}

GroupHom GroupHom::identity(const AbelianGroup& g) {
    GroupHom h{g, g, {}};
    for (std::size_t i = 0; i < g.generator_count(); ++i) h.images.push_back(g.generator(i));
    return h;
}

GroupHom GroupHom::project_to_cyclic(const AbelianGroup& g, std::size_t index, std::int64_t modulus) {
    AbelianGroup t = modulus == 0 ? AbelianGroup::integers() : AbelianGroup::cyclic(modulus);
    GroupHom h{g, t, {}};
    for (std::size_t i = 0; i < g.generator_count(); ++i) h.images.push_back(i == index ? t.from_int(1) : t.zero());
    h.check();
    return h;
}

GroupElement ProductGroup::pair(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = group.zero();
    std::size_t f = 0;
    for (auto x : a.free) r.free[f++] = x;
    for (auto x : b.free) r.free[f++] = x;
    std::size_t t = 0;
    for (auto x : a.torsion) r.torsion[torsion_position[t++]] = x;
    for (auto x : b.torsion) r.torsion[torsion_position[t++]] = x;
    return r;
}

ProductGroup product(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<std::int64_t> tors = a.torsion();
    tors.insert(tors.end(), b.torsion().begin(), b.torsion().end());
    std::vector<std::size_t> order(tors.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return tors[x] < tors[y]; });
    std::vector<std::int64_t> sorted;
    std::vector<std::size_t> position(tors.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted.push_back(tors[order[k]]);
        position[order[k]] = k;
    }
    ProductGroup pg{AbelianGroup(a.free_rank() + b.free_rank(), sorted), position, {}, {}};
    // projections: generator images
    pg.first = GroupHom{pg.group, a, {}};
    pg.second = GroupHom{pg.group, b, {}};
    const std::size_t fa = a.free_rank(), fb = b.free_rank();
    for (std::size_t i = 0; i < fa + fb; ++i) {
        pg.first.images.push_back(i < fa ? a.generator(i) : a.zero());
        pg.second.images.push_back(i >= fa ? b.generator(i - fa) : b.zero());
    }
    std::vector<std::size_t> origin(sorted.size());
    for (std::size_t k = 0; k < position.size(); ++k) origin[position[k]] = k;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const auto o = origin[k];
        const bool in_a = o < a.torsion().size();
        pg.first.images.push_back(in_a ? a.generator(fa + o) : a.zero());
        pg.second.images.push_back(in_a ? b.zero() : b.generator(fb + o - a.torsion().size()));
    }
    return pg;
}

}  // namespace gradsw
