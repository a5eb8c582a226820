#pragma once

#include "icosa/perm.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace icosa {

/// A finite permutation group given by its full element list, sorted
/// lexicographically by image sequence.
class GroupTable {
public:
    static constexpr std::size_t kDefaultBound = 10080;

    /// Breadth-first closure of the generators; aborts past `bound` elements.
    static GroupTable enumerate(const std::vector<Perm>& generators,
                                std::size_t bound = kDefaultBound,
                                std::optional<std::string> name = std::nullopt);
    /// Wraps an element list that is already closed (subgroups of an
    /// enumerated group); validates identity membership and closure.
    static GroupTable from_elements(std::vector<Perm> elements,
                                    std::optional<std::string> name = std::nullopt);

    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    const std::optional<std::string>& name() const { return name_; }
    Perm identity() const { return Perm::identity(degree_); }

    bool contains(const Perm& g) const;
    int index_of(const Perm& g) const; // throws if absent

    /// Partition into conjugacy classes, ordered by element order then by the
    /// least class representative; classes are sorted internally.
    std::vector<std::vector<Perm>> conjugacy_classes() const;

    GroupTable centralizer(const std::vector<Perm>& subset) const;
    GroupTable normalizer(const std::vector<Perm>& subset) const;
    GroupTable subgroup_generated(const std::vector<Perm>& gens) const;

    /// All Sylow p-subgroups, deterministically ordered.
    std::vector<GroupTable> sylow_subgroups(std::int64_t p) const;

    /// Multiset of conjugacy class sizes (sorted); a cheap isomorphism fingerprint.
    std::vector<std::size_t> class_size_fingerprint() const;

    bool operator==(const GroupTable& o) const { return elems_ == o.elems_; }

private:
    GroupTable() = default;
    void check_subset(const std::vector<Perm>& subset) const;

    int degree_ = 1;
    std::vector<Perm> elems_;
    std::optional<std::string> name_;
    std::map<Perm, int> idx_;
};

enum class ClassChoice { c51, c52 };

/// Generating pair for a group isomorphic to Alt(5): |alpha| = 2, |gamma| = 3,
/// |alpha gamma| = 5, with alpha*gamma in the requested 5-element-order class.
/// The scan is over canonical cycle order, so on the natural Alt(5) the
/// default choice lands on alpha = (1 2)(3 4), gamma = (1 3 5).
struct StandardGenerators {
    Perm alpha;
    Perm gamma;
    ClassChoice choice;
    std::vector<Perm> chosen_class; // conjugacy class of alpha*gamma
};

StandardGenerators standard_generators(const GroupTable& G,
                                       ClassChoice choice = ClassChoice::c51);

/// Order-60 check plus class-size fingerprint {1, 12, 12, 15, 20}.
bool is_alt5(const GroupTable& G);

} // namespace icosa
