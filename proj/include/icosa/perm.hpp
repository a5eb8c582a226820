#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace icosa {

/// Permutation of {1, ..., degree}, degree <= 7. Stored 0-based internally.
/// Composition is (g * h)(x) = g(h(x)): h acts first.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images_zero_based);
    static Perm identity(int degree);
    /// Parses cycle notation like "(1 2)(3 4)" or "()"; points are 1-based.
    static Perm parse(const std::string& s, int degree = 0);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int x) const { return img_[x]; } // 0-based
    const std::vector<std::uint8_t>& images() const { return img_; }

    Perm compose(const Perm& other) const; // apply `other` first
    Perm operator*(const Perm& other) const { return compose(other); }
    Perm inverse() const;
    Perm conjugated_by(const Perm& h) const; // h * this * h^-1
    int order() const;
    bool is_identity() const;
    Perm extended(int degree) const; // pad with fixed points

    /// Nontrivial cycles, each rotated to put its least point first, ordered
    /// by least point; 0-based entries.
    std::vector<std::vector<int>> cycles() const;
    std::string str() const; // canonical cycle notation, 1-based

    auto operator<=>(const Perm&) const = default; // lex on image sequences

private:
    std::vector<std::uint8_t> img_;
};

/// Orders permutations by their canonical cycle decomposition, the order in
/// which their printed forms sort: "(1 2)(3 4)" before "(1 2)(4 5)".
bool cycle_order_less(const Perm& a, const Perm& b);

} // namespace icosa
