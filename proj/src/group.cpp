#include "icosa/group.hpp"

#include "icosa/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace icosa {

GroupTable GroupTable::enumerate(const std::vector<Perm>& generators,
                                 std::size_t bound,
                                 std::optional<std::string> name) {
    if (generators.empty())
        throw InputError("cannot enumerate the group of an empty generator list");
    int degree = 0;
    for (const auto& g : generators)
        degree = std::max(degree, g.degree());
    std::vector<Perm> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators)
        gens.push_back(g.extended(degree));

    std::set<Perm> seen;
    std::deque<Perm> queue;
    Perm id = Perm::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm g = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            Perm h = s.compose(g);
            if (seen.insert(h).second) {
                if (seen.size() > bound)
                    throw InputError("group closure exceeds bound of " +
                                     std::to_string(bound));
                queue.push_back(h);
            }
        }
    }
    GroupTable t;
    t.degree_ = degree;
    t.name_ = std::move(name);
    t.elems_.assign(seen.begin(), seen.end()); // std::set iterates in sorted order
    for (std::size_t i = 0; i < t.elems_.size(); ++i)
        t.idx_[t.elems_[i]] = static_cast<int>(i);
    return t;
}

GroupTable GroupTable::from_elements(std::vector<Perm> elements,
                                     std::optional<std::string> name) {
    if (elements.empty())
        throw InputError("empty element list");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    GroupTable t;
    t.degree_ = elements.front().degree();
    t.name_ = std::move(name);
    t.elems_ = std::move(elements);
    for (std::size_t i = 0; i < t.elems_.size(); ++i) {
        if (t.elems_[i].degree() != t.degree_)
            throw InputError("mixed degrees in element list");
        t.idx_[t.elems_[i]] = static_cast<int>(i);
    }
    if (!t.contains(Perm::identity(t.degree_)))
        throw InputError("element list misses the identity");
    for (const auto& a : t.elems_)
        for (const auto& b : t.elems_)
            if (!t.contains(a.compose(b)))
                throw InputError("element list is not closed under composition");
    return t;
}

bool GroupTable::contains(const Perm& g) const {
    return idx_.count(g) != 0;
}

int GroupTable::index_of(const Perm& g) const {
    auto it = idx_.find(g);
    if (it == idx_.end())
        throw InputError("permutation " + g.str() + " is not a group element");
    return it->second;
}

std::vector<std::vector<Perm>> GroupTable::conjugacy_classes() const {
    std::vector<bool> done(elems_.size(), false);
    std::vector<std::vector<Perm>> classes;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (done[i])
            continue;
        std::set<Perm> cls;
        for (const auto& h : elems_)
            cls.insert(elems_[i].conjugated_by(h));
        for (const auto& g : cls)
            done[index_of(g)] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) {
                         return a.front().order() < b.front().order();
                     });
    return classes;
}

void GroupTable::check_subset(const std::vector<Perm>& subset) const {
    for (const auto& h : subset)
        if (!contains(h))
            throw InputError("subset element " + h.str() + " is not in the group");
}

GroupTable GroupTable::centralizer(const std::vector<Perm>& subset) const {
    check_subset(subset);
    std::vector<Perm> out;
    for (const auto& g : elems_) {
        bool ok = true;
        for (const auto& h : subset)
            if (!(g.compose(h) == h.compose(g))) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(g);
    }
    return from_elements(std::move(out));
}

GroupTable GroupTable::normalizer(const std::vector<Perm>& subset) const {
    check_subset(subset);
    std::set<Perm> hset(subset.begin(), subset.end());
    std::vector<Perm> out;
    for (const auto& g : elems_) {
        bool ok = true;
        for (const auto& h : hset)
            if (!hset.count(h.conjugated_by(g))) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(g);
    }
    return from_elements(std::move(out));
}

GroupTable GroupTable::subgroup_generated(const std::vector<Perm>& gens) const {
    check_subset(gens);
    auto sub = enumerate(gens, size());
    std::vector<Perm> padded;
    for (const auto& g : sub.elements())
        padded.push_back(g.extended(degree_));
    return from_elements(std::move(padded));
}

std::vector<GroupTable> GroupTable::sylow_subgroups(std::int64_t p) const {
    if (p < 2 || size() % p != 0)
        throw InputError("p = " + std::to_string(p) + " does not divide the group order");
    std::size_t target = 1;
    for (std::size_t n = size(); n % p == 0; n /= p)
        target *= p;

    auto is_p_power = [&](int n) {
        while (n % p == 0)
            n /= static_cast<int>(p);
        return n == 1;
    };

    // Grow one Sylow subgroup: start at an order-p element, then repeatedly
    // adjoin a p-element of the normalizer.
    std::vector<Perm> current;
    for (const auto& g : elems_)
        if (g.order() == p) {
            current = subgroup_generated({g}).elements();
            break;
        }
    while (current.size() < target) {
        GroupTable n = normalizer(current);
        bool grew = false;
        std::set<Perm> curset(current.begin(), current.end());
        for (const auto& y : n.elements()) {
            if (curset.count(y) || !is_p_power(y.order()) || y.is_identity())
                continue;
            std::vector<Perm> gens(current.begin(), current.end());
            gens.push_back(y);
            auto bigger = subgroup_generated(gens);
            if (is_p_power(static_cast<int>(bigger.size()))) {
                current = bigger.elements();
                grew = true;
                break;
            }
        }
        if (!grew)
            throw CheckError("failed to grow a Sylow p-subgroup"); // unreachable for valid input
    }

    std::set<std::vector<Perm>> all;
    for (const auto& g : elems_) {
        std::vector<Perm> conj;
        for (const auto& h : current)
            conj.push_back(h.conjugated_by(g));
        std::sort(conj.begin(), conj.end());
        all.insert(std::move(conj));
    }
    std::vector<GroupTable> out;
    for (const auto& elems : all)
        out.push_back(from_elements(elems));
    return out;
}

std::vector<std::size_t> GroupTable::class_size_fingerprint() const {
    std::vector<std::size_t> sizes;
    for (const auto& c : conjugacy_classes())
        sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool is_alt5(const GroupTable& G) {
    return G.size() == 60 &&
           G.class_size_fingerprint() == std::vector<std::size_t>{1, 12, 12, 15, 20};
}

StandardGenerators standard_generators(const GroupTable& G, ClassChoice choice) {
    if (!is_alt5(G))
        throw InputError("standard generators are only defined for Alt(5) groups");

    std::vector<Perm> involutions, threes;
    for (const auto& g : G.elements()) {
        if (g.order() == 2)
            involutions.push_back(g);
        else if (g.order() == 3)
            threes.push_back(g);
    }
    std::sort(involutions.begin(), involutions.end(), cycle_order_less);
    std::sort(threes.begin(), threes.end(), cycle_order_less);

    auto classes = G.conjugacy_classes();
    auto class_of = [&](const Perm& g) -> const std::vector<Perm>& {
        for (const auto& c : classes)
            if (std::binary_search(c.begin(), c.end(), g))
                return c;
        throw CheckError("element escaped its conjugacy classes");
    };

    // First valid pair in cycle order pins down which 5-class gets used by
    // the default choice; the other choice re-scans for the opposite class.
    const std::vector<Perm>* base_class = nullptr;
    for (const auto& a : involutions) {
        for (const auto& c : threes) {
            Perm prod = a.compose(c);
            if (prod.order() != 5)
                continue;
            const auto& cls = class_of(prod);
            if (!base_class)
                base_class = &cls;
            bool matches = (choice == ClassChoice::c51) == (&cls == base_class);
            if (matches)
                return StandardGenerators{a, c, choice, cls};
        }
    }
    throw CheckError("no generating pair found"); // unreachable for genuine Alt(5)
}

} // namespace icosa
