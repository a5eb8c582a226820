#pragma once

#include "icosa/gmodule.hpp"
#include "icosa/rat.hpp"

#include <string>
#include <vector>

namespace icosa {

enum class AxisType { positive, negative };
enum class IdentifiedGroup { alt4, sym4, alt5, axial, unclassified };

std::string identified_name(IdentifiedGroup g);

struct AxiomFailure {
    int axiom = 0; // 1, 2, 3, or 0 for a trivial-axis precondition failure
    Perm g, h;
    std::string detail;
};

/// Result of checking the three rotation-module axioms for A_g = tr_g(V):
/// (1) rho(h) A_g = A_{h g h^-1}; (2) h fixes A_g pointwise iff A_h = A_g;
/// (3) h normalizing but not centralizing A_g inverts it.
struct AxiomReport {
    bool passed = false;
    std::vector<AxiomFailure> failures;
};

AxiomReport verify_axioms(const GModule& m);

struct AxisOrbit {
    Perm representative;  // least group element owning an axis in the orbit
    Submodule axis;
    int orbit_size = 0;
    int normalizer_order = 0;
    int centralizer_order = 0;
    AxisType type = AxisType::positive;
    bool centralizer_cyclic = false;
};

struct AxisReport {
    std::vector<std::pair<Perm, Submodule>> axes_by_class; // nontrivial class rep -> axis
    std::vector<AxisOrbit> orbits;
    int r = 0; // positive-type orbits
    int s = 0; // negative-type orbits
    bool axial = false;
    std::int64_t group_order = 0;
    Rat residual;
    IdentifiedGroup identified = IdentifiedGroup::unclassified;
};

/// Orbits of the group on the distinct axes, typed and counted. Throws
/// CheckError when verify_axioms does not pass.
AxisReport classify_axes(const GModule& m);

/// (1 - r - s/2) - (1/|G| - sum 1/|N(A_i)| - sum 1/|N(B_i)|), exactly.
/// Stores the value into the report and returns it.
Rat orbit_equation_check(AxisReport& report, std::int64_t group_order);

/// Matches the orbit pattern against the three rotation groups, checks the
/// axis centralizers are cyclic, and cross-checks the abstract fingerprint.
IdentifiedGroup identify_group(AxisReport& report, const GModule& m);

} // namespace icosa
