#pragma once

#include "icosa/group.hpp"

#include <cstdint>
#include <map>

namespace icosa {

/// Formal integer combination of group elements; zero coefficients pruned.
class GroupAlgebraElem {
public:
    GroupAlgebraElem() = default;
    static GroupAlgebraElem unit(int degree); // 1 * identity
    static GroupAlgebraElem single(const Perm& g, std::int64_t coeff = 1);
    static GroupAlgebraElem class_sum(const std::vector<Perm>& conjugacy_class);

    std::int64_t coeff(const Perm& g) const;
    std::size_t support_size() const { return c_.size(); }
    const std::map<Perm, std::int64_t>& terms() const { return c_; }

    GroupAlgebraElem add(const GroupAlgebraElem& o) const;
    GroupAlgebraElem sub(const GroupAlgebraElem& o) const;
    GroupAlgebraElem scaled(std::int64_t n) const;
    GroupAlgebraElem mul(const GroupAlgebraElem& o) const; // convolution in Z[G]

    GroupAlgebraElem operator+(const GroupAlgebraElem& o) const { return add(o); }
    GroupAlgebraElem operator-(const GroupAlgebraElem& o) const { return sub(o); }
    GroupAlgebraElem operator*(const GroupAlgebraElem& o) const { return mul(o); }

    bool operator==(const GroupAlgebraElem&) const = default;

private:
    void set(const Perm& g, std::int64_t v);
    std::map<Perm, std::int64_t> c_;
};

} // namespace icosa
