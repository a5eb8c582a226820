#pragma once

#include "icosa/group_algebra.hpp"
#include "icosa/linalg.hpp"

#include <array>
#include <utility>
#include <vector>

namespace icosa {

class GModule;

/// Endomorphism of a module, carried as its matrix in the standard basis.
struct Endo {
    const GModule* module = nullptr;
    Mat matrix;
};

/// A group acting by invertible matrices: column vectors, left action,
/// rho(g h) = rho(g) rho(h). The full action table is expanded once at
/// construction and the homomorphism property is verified on every
/// (generator, element) pair, which forces it on all products.
class GModule {
public:
    GModule(Ring ring, int rank, GroupTable group,
            std::vector<std::pair<Perm, Mat>> generator_action);

    const Ring& ring() const { return ring_; }
    int rank() const { return rank_; }
    const GroupTable& group() const { return group_; }
    const std::vector<std::pair<Perm, Mat>>& generator_action() const { return gens_; }

    const Mat& act(const Perm& g) const;
    bool is_faithful() const;

    /// tr_g = 1 + g + ... + g^(m-1) for |g| = m >= 2.
    Mat trace_matrix(const Perm& g) const;
    /// ad_g = 1 - g for nontrivial g.
    Mat adjoint_matrix(const Perm& g) const;
    Endo trace_endo(const Perm& g) const { return {this, trace_matrix(g)}; }
    Endo adjoint_endo(const Perm& g) const { return {this, adjoint_matrix(g)}; }

    Submodule image_C(const Perm& g) const; // image of tr_g
    Submodule image_B(const Perm& g) const; // image of ad_g

    /// Common fixed points of H, as the kernel of the stacked (rho(h) - 1).
    Submodule fixed_submodule(const std::vector<Perm>& subset) const;

    /// (B_g, C_g) with the direct-sum conditions verified; requires |g| to be
    /// a unit in the coefficient ring.
    std::pair<Submodule, Submodule> decompose_cyclic(const Perm& g) const;

    struct KleinDecomposition {
        std::array<Perm, 3> involutions;
        std::array<Submodule, 3> eigenparts; // V_{alpha_i}
        Submodule fixed;                     // C_K
    };
    KleinDecomposition decompose_klein(const std::vector<Perm>& klein_subgroup) const;

    /// Sum of coeff(g) * rho(g).
    Mat apply_group_algebra(const GroupAlgebraElem& a) const;
    Endo apply_group_algebra_endo(const GroupAlgebraElem& a) const {
        return {this, apply_group_algebra(a)};
    }

private:
    Ring ring_;
    int rank_;
    GroupTable group_;
    std::vector<std::pair<Perm, Mat>> gens_;
    std::vector<Mat> table_;
};

} // namespace icosa
