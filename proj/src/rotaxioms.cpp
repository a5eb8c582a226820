#include "icosa/rotaxioms.hpp"

#include "icosa/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace icosa {

std::string identified_name(IdentifiedGroup g) {
    switch (g) {
    case IdentifiedGroup::alt4: return "Alt4";
    case IdentifiedGroup::sym4: return "Sym4";
    case IdentifiedGroup::alt5: return "Alt5";
    case IdentifiedGroup::axial: return "axial";
    case IdentifiedGroup::unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

// Shared scaffolding: one axis per nontrivial element, deduplicated via the
// canonical basis, with the per-(axis, h) predicates cached.
struct AxisData {
    std::vector<int> axis_of;               // group element index -> axis id, -1 for identity
    std::vector<Submodule> axes;            // distinct axes
    std::vector<std::vector<int>> mapped;   // axis id x element -> axis id of rho(h)A
    std::vector<std::vector<bool>> fixes;   // axis id x element -> h fixes A pointwise
    std::vector<std::vector<bool>> inverts; // axis id x element -> h inverts A
    std::vector<Perm> owner;                // axis id -> least owning element
};

AxisData collect_axes(const GModule& m, AxiomReport& report) {
    const auto& G = m.group();
    AxisData d;
    d.axis_of.assign(G.size(), -1);
    std::map<Mat, int> ids;
    for (std::size_t gi = 0; gi < G.size(); ++gi) {
        const Perm& g = G.elements()[gi];
        if (g.is_identity())
            continue;
        Submodule a = m.image_C(g);
        if (a.is_zero()) {
            report.failures.push_back({0, g, g, "trivial axis: tr_g has zero image"});
            continue;
        }
        auto [it, fresh] = ids.try_emplace(a.basis(), static_cast<int>(d.axes.size()));
        if (fresh) {
            d.axes.push_back(a);
            d.owner.push_back(g);
        }
        d.axis_of[gi] = it->second;
    }

    const auto& all = G.elements();
    d.mapped.assign(d.axes.size(), std::vector<int>(all.size(), -1));
    d.fixes.assign(d.axes.size(), std::vector<bool>(all.size(), false));
    d.inverts.assign(d.axes.size(), std::vector<bool>(all.size(), false));
    for (std::size_t ai = 0; ai < d.axes.size(); ++ai) {
        const Mat& basis = d.axes[ai].basis();
        Mat basis_t = basis.transpose();
        for (std::size_t hi = 0; hi < all.size(); ++hi) {
            const Mat& rho = m.act(all[hi]);
            Submodule image = d.axes[ai].transformed(rho);
            auto it = ids.find(image.basis());
            d.mapped[ai][hi] = (it == ids.end()) ? -1 : it->second;
            Mat moved = rho.mul(basis_t);
            d.fixes[ai][hi] = moved == basis_t;
            d.inverts[ai][hi] = moved == basis_t.neg();
        }
    }
    return d;
}

} // namespace

AxiomReport verify_axioms(const GModule& m) {
    AxiomReport report;
    AxisData d = collect_axes(m, report);
    if (!report.failures.empty()) { // trivial axes: nothing further to check
        report.passed = false;
        return report;
    }
    const auto& G = m.group();
    const auto& all = G.elements();
    for (std::size_t gi = 0; gi < all.size(); ++gi) {
        int a = d.axis_of[gi];
        if (a < 0)
            continue; // identity
        const Perm& g = all[gi];
        for (std::size_t hi = 0; hi < all.size(); ++hi) {
            const Perm& h = all[hi];
            if (h.is_identity())
                continue;
            int conj_axis = d.axis_of[G.index_of(g.conjugated_by(h))];
            if (d.mapped[a][hi] != conj_axis)
                report.failures.push_back({1, g, h, "rho(h) A_g != A_{h g h^-1}"});
            int h_axis = d.axis_of[hi];
            bool centralizes = d.fixes[a][hi];
            if (centralizes != (h_axis == a))
                report.failures.push_back({2, g, h, "centralizing h and A_h = A_g disagree"});
            bool normalizes = d.mapped[a][hi] == a;
            if (normalizes && !centralizes && !d.inverts[a][hi])
                report.failures.push_back({3, g, h, "normalizing h neither fixes nor inverts A_g"});
        }
    }
    report.passed = report.failures.empty();
    return report;
}

AxisReport classify_axes(const GModule& m) {
    AxiomReport axioms = verify_axioms(m);
    if (!axioms.passed) {
        std::string what = "rotation axioms failed";
        if (!axioms.failures.empty())
            what += ": axiom " + std::to_string(axioms.failures.front().axiom) +
                    " at g = " + axioms.failures.front().g.str() +
                    ", h = " + axioms.failures.front().h.str();
        throw CheckError(what);
    }

    AxiomReport scratch;
    AxisData d = collect_axes(m, scratch);
    const auto& G = m.group();
    const auto& all = G.elements();

    AxisReport report;
    report.group_order = static_cast<std::int64_t>(G.size());

    // Orbits of G on the distinct axes.
    std::vector<int> orbit_of(d.axes.size(), -1);
    for (std::size_t ai = 0; ai < d.axes.size(); ++ai) {
        if (orbit_of[ai] >= 0)
            continue;
        int id = static_cast<int>(report.orbits.size());
        std::set<int> members;
        for (std::size_t hi = 0; hi < all.size(); ++hi)
            members.insert(d.mapped[ai][hi]);
        for (int mbr : members)
            orbit_of[mbr] = id;

        AxisOrbit o;
        o.representative = d.owner[ai];
        o.axis = d.axes[ai];
        o.orbit_size = static_cast<int>(members.size());
        std::vector<Perm> centralizer_elems;
        for (std::size_t hi = 0; hi < all.size(); ++hi) {
            if (d.mapped[ai][hi] == static_cast<int>(ai))
                ++o.normalizer_order;
            if (d.fixes[ai][hi]) {
                ++o.centralizer_order;
                centralizer_elems.push_back(all[hi]);
            }
        }
        o.type = (o.normalizer_order == o.centralizer_order) ? AxisType::positive
                                                             : AxisType::negative;
        o.centralizer_cyclic = false;
        for (const auto& c : centralizer_elems)
            if (c.order() == o.centralizer_order)
                o.centralizer_cyclic = true;
        if (o.normalizer_order == static_cast<int>(all.size()))
            report.axial = true;
        report.orbits.push_back(std::move(o));
    }
    std::sort(report.orbits.begin(), report.orbits.end(),
              [](const AxisOrbit& a, const AxisOrbit& b) {
                  if (a.normalizer_order != b.normalizer_order)
                      return a.normalizer_order < b.normalizer_order;
                  return a.representative < b.representative;
              });
    for (const auto& o : report.orbits)
        (o.type == AxisType::positive ? report.r : report.s) += 1;

    // One axis per nontrivial conjugacy class.
    auto classes = G.conjugacy_classes();
    for (const auto& cls : classes) {
        if (cls.front().is_identity())
            continue;
        report.axes_by_class.emplace_back(cls.front(), m.image_C(cls.front()));
    }
    return report;
}

Rat orbit_equation_check(AxisReport& report, std::int64_t group_order) {
    Rat lhs = Rat(1) - Rat(report.r) - Rat(report.s) / Rat(2);
    Rat rhs = Rat(1) / Rat(group_order);
    for (const auto& o : report.orbits)
        rhs -= Rat(1) / Rat(o.normalizer_order);
    report.residual = lhs - rhs;
    return report.residual;
}

IdentifiedGroup identify_group(AxisReport& report, const GModule& m) {
    auto finish = [&](IdentifiedGroup g) {
        report.identified = g;
        return g;
    };
    if (report.axial)
        return finish(IdentifiedGroup::axial);

    std::vector<int> norms;
    for (const auto& o : report.orbits) {
        norms.push_back(o.normalizer_order);
        if (!o.centralizer_cyclic)
            return finish(IdentifiedGroup::unclassified);
    }
    std::sort(norms.begin(), norms.end());

    IdentifiedGroup candidate = IdentifiedGroup::unclassified;
    if (report.r == 1 && report.s == 1)
        candidate = IdentifiedGroup::alt4;
    else if (report.r == 0 && report.s == 3 && norms == std::vector<int>{4, 6, 8})
        candidate = IdentifiedGroup::sym4;
    else if (report.r == 0 && report.s == 3 && norms == std::vector<int>{4, 6, 10})
        candidate = IdentifiedGroup::alt5;
    if (candidate == IdentifiedGroup::unclassified)
        return finish(candidate);

    // Abstract cross-check: order plus conjugacy class sizes.
    static const std::map<IdentifiedGroup,
                          std::pair<std::size_t, std::vector<std::size_t>>>
        fingerprints = {
            {IdentifiedGroup::alt4, {12, {1, 3, 4, 4}}},
            {IdentifiedGroup::sym4, {24, {1, 3, 6, 6, 8}}},
            {IdentifiedGroup::alt5, {60, {1, 12, 12, 15, 20}}},
        };
    const auto& [order, sizes] = fingerprints.at(candidate);
    if (m.group().size() != order || m.group().class_size_fingerprint() != sizes)
        return finish(IdentifiedGroup::unclassified);
    return finish(candidate);
}

} // namespace icosa
