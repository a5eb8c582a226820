#include "icosa/gmodule.hpp"

#include "icosa/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace icosa {

GModule::GModule(Ring ring, int rank, GroupTable group,
                 std::vector<std::pair<Perm, Mat>> generator_action)
    : ring_(std::move(ring)), rank_(rank), group_(std::move(group)),
      gens_(std::move(generator_action)) {
    if (!ring_.is_unit(ring_.from_int(2)))
        throw InputError("2 must be a unit in the coefficient ring");
    if (gens_.empty())
        throw InputError("module needs at least one generator");
    for (auto& [p, m] : gens_) {
        p = p.extended(group_.degree());
        if (!group_.contains(p))
            throw InputError("generator " + p.str() + " is not in the group");
        if (m.rows() != rank_ || m.cols() != rank_)
            throw InputError("generator matrix shape mismatch");
        if (!(m.ring() == ring_))
            throw InputError("generator matrix over the wrong ring");
        if (!is_invertible(m))
            throw InputError("generator matrix for " + p.str() + " is singular");
    }
    {
        std::vector<Perm> gen_perms;
        for (const auto& [p, m] : gens_)
            gen_perms.push_back(p);
        if (GroupTable::enumerate(gen_perms).size() != group_.size())
            throw InputError("generators do not generate the full group");
    }

    // Expand the table breadth-first from the identity.
    std::vector<std::optional<Mat>> table(group_.size());
    int id_idx = group_.index_of(group_.identity());
    table[id_idx] = Mat::identity(ring_, rank_);
    std::deque<int> queue{id_idx};
    while (!queue.empty()) {
        int gi = queue.front();
        queue.pop_front();
        for (const auto& [s, ms] : gens_) {
            Perm h = s.compose(group_.elements()[gi]);
            int hi = group_.index_of(h);
            if (!table[hi]) {
                table[hi] = ms.mul(*table[gi]);
                queue.push_back(hi);
            }
        }
    }
    table_.reserve(group_.size());
    for (auto& m : table) {
        if (!m)
            throw CheckError("action table incomplete"); // generators checked above
        table_.push_back(std::move(*m));
    }

    // rho(s g) = rho(s) rho(g) for every generator s and element g; by
    // induction on word length this pins the property down for all pairs.
    for (std::size_t gi = 0; gi < group_.size(); ++gi)
        for (const auto& [s, ms] : gens_) {
            Perm h = s.compose(group_.elements()[gi]);
            if (!(table_[group_.index_of(h)] == ms.mul(table_[gi])))
                throw CheckError("action is not a homomorphism at " + s.str() +
                                 " * " + group_.elements()[gi].str());
        }
    for (const auto& [s, ms] : gens_)
        if (!ms.pow(static_cast<unsigned>(s.order())).is_identity())
            throw CheckError("generator relation violated for " + s.str());
}

const Mat& GModule::act(const Perm& g) const {
    return table_[group_.index_of(g.degree() == group_.degree()
                                      ? g
                                      : g.extended(group_.degree()))];
}

bool GModule::is_faithful() const {
    int id_idx = group_.index_of(group_.identity());
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (static_cast<int>(i) != id_idx && table_[i].is_identity())
            return false;
    return true;
}

Mat GModule::trace_matrix(const Perm& g) const {
    if (g.is_identity())
        throw InputError("trace map is defined for nontrivial elements only");
    const Mat& rho = act(g);
    Mat acc = Mat::identity(ring_, rank_);
    Mat power = rho;
    int m = g.order();
    for (int i = 1; i < m; ++i) {
        acc = acc.add(power);
        power = power.mul(rho);
    }
    return acc;
}

Mat GModule::adjoint_matrix(const Perm& g) const {
    if (g.is_identity())
        throw InputError("adjoint map is defined for nontrivial elements only");
    return Mat::identity(ring_, rank_).sub(act(g));
}

Submodule GModule::image_C(const Perm& g) const {
    return canonical_image(trace_matrix(g));
}

Submodule GModule::image_B(const Perm& g) const {
    return canonical_image(adjoint_matrix(g));
}

Submodule GModule::fixed_submodule(const std::vector<Perm>& subset) const {
    Mat stacked(ring_, 0, rank_);
    for (const auto& h : subset) {
        if (h.extended(group_.degree()).is_identity())
            continue;
        stacked = stacked.vstack(act(h).sub(Mat::identity(ring_, rank_)));
    }
    if (stacked.rows() == 0)
        return Submodule::full(ring_, rank_);
    return kernel(stacked);
}

std::pair<Submodule, Submodule> GModule::decompose_cyclic(const Perm& g) const {
    int m = g.order();
    if (m < 2)
        throw InputError("decomposition needs a nontrivial element");
    if (!ring_.is_unit(ring_.from_int(m)))
        throw CheckError("module is not " + std::to_string(m) +
                         "-divisible: " + std::to_string(m) + " is not a unit in " +
                         ring_.describe());
    Submodule B = image_B(g);
    Submodule C = image_C(g);
    if (!B.sum(C).is_full())
        throw CheckError("adjoint and trace images do not span the module");
    if (!B.intersect(C).is_zero())
        throw CheckError("adjoint and trace images intersect nontrivially");
    return {B, C};
}

GModule::KleinDecomposition
GModule::decompose_klein(const std::vector<Perm>& klein_subgroup) const {
    std::set<Perm> K;
    for (const auto& h : klein_subgroup)
        K.insert(h.extended(group_.degree()));
    if (K.size() != 4)
        throw InputError("a Klein 4-group has exactly four elements");
    std::array<Perm, 3> inv;
    std::size_t n = 0;
    for (const auto& h : K) {
        if (h.is_identity())
            continue;
        if (h.order() != 2 || n == 3)
            throw InputError("subgroup is not a Klein 4-group");
        inv[n++] = h;
    }
    if (n != 3 || !(inv[0].compose(inv[1]) == inv[2]))
        throw InputError("subgroup is not a Klein 4-group");

    auto tr = [&](int i) { return trace_matrix(inv[i]); };
    auto ad = [&](int i) { return adjoint_matrix(inv[i]); };
    KleinDecomposition d{inv,
                         {canonical_image(tr(0).mul(ad(1)).mul(ad(2))),
                          canonical_image(ad(0).mul(tr(1)).mul(ad(2))),
                          canonical_image(ad(0).mul(ad(1)).mul(tr(2)))},
                         canonical_image(tr(0).mul(tr(1)).mul(tr(2)))};

    Submodule total = d.eigenparts[0].sum(d.eigenparts[1]).sum(d.eigenparts[2]).sum(d.fixed);
    if (!total.is_full())
        throw CheckError("Klein decomposition does not span the module");
    std::vector<Submodule> parts(d.eigenparts.begin(), d.eigenparts.end());
    parts.push_back(d.fixed);
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if (!parts[a].intersect(parts[b]).is_zero())
                throw CheckError("Klein decomposition components overlap");
    return d;
}

Mat GModule::apply_group_algebra(const GroupAlgebraElem& a) const {
    Mat acc(ring_, rank_, rank_);
    for (const auto& [g, coeff] : a.terms()) {
        if (!group_.contains(g.extended(group_.degree())))
            throw InputError("group algebra support escapes the group");
        acc = acc.add(act(g).scaled_int(coeff));
    }
    return acc;
}

} // namespace icosa
