#include "icosa/group_algebra.hpp"

#include "icosa/errors.hpp"

namespace icosa {

void GroupAlgebraElem::set(const Perm& g, std::int64_t v) {
    if (v == 0)
        c_.erase(g);
    else
        c_[g] = v;
}

GroupAlgebraElem GroupAlgebraElem::unit(int degree) {
    return single(Perm::identity(degree));
}

GroupAlgebraElem GroupAlgebraElem::single(const Perm& g, std::int64_t coeff) {
    GroupAlgebraElem e;
    e.set(g, coeff);
    return e;
}

GroupAlgebraElem GroupAlgebraElem::class_sum(const std::vector<Perm>& cls) {
    GroupAlgebraElem e;
    for (const auto& g : cls)
        e.set(g, e.coeff(g) + 1);
    return e;
}

std::int64_t GroupAlgebraElem::coeff(const Perm& g) const {
    auto it = c_.find(g);
    return it == c_.end() ? 0 : it->second;
}

GroupAlgebraElem GroupAlgebraElem::add(const GroupAlgebraElem& o) const {
    GroupAlgebraElem e(*this);
    for (const auto& [g, v] : o.c_)
        e.set(g, e.coeff(g) + v);
    return e;
}

GroupAlgebraElem GroupAlgebraElem::sub(const GroupAlgebraElem& o) const {
    return add(o.scaled(-1));
}

GroupAlgebraElem GroupAlgebraElem::scaled(std::int64_t n) const {
    GroupAlgebraElem e;
    if (n != 0)
        for (const auto& [g, v] : c_)
            e.c_[g] = v * n;
    return e;
}

GroupAlgebraElem GroupAlgebraElem::mul(const GroupAlgebraElem& o) const {
    GroupAlgebraElem e;
    for (const auto& [g, a] : c_)
        for (const auto& [h, b] : o.c_)
            e.set(g.compose(h), e.coeff(g.compose(h)) + a * b);
    return e;
}

} // namespace icosa
