#pragma once

#include "icosa/gmodule.hpp"

#include <cstdint>
#include <optional>

namespace icosa {

/// A root of x^2 - x - 1 modulo p^k.
struct GoldenRoot {
    std::int64_t p = 0;
    int k = 0;
    std::int64_t value = 0;
    std::int64_t modulus = 0; // p^k
};

/// Newton-lifts the lesser root mod p up to mod p^k. Roots exist exactly for
/// p = 5 (the double root 3, k = 1 only) and p = +-1 mod 5. p = 2 rejected.
std::optional<GoldenRoot> hensel_phi(std::int64_t p, int k);

/// Rank-3k module over a ring with a golden ratio: k diagonal copies of the
/// icosahedral 3x3 action of the generating pair.
GModule build_icosa(const Ring& ring, int copies, const Perm& alpha, const Perm& gamma);
GModule build_icosa(const Ring& ring, int copies = 1);

/// Order-12 rotation action (diag(1,-1,-1) and the coordinate 3-cycle),
/// attached to its Alt(4) permutation isomorph.
GModule build_tetra(const Ring& ring);

/// Order-24 rotation action (coordinate 3-cycle and a quarter turn),
/// attached to its Sym(4) permutation isomorph.
GModule build_cube(const Ring& ring);

struct ScrambleResult {
    GModule module;
    Mat secret; // the conjugating matrix P with rho'(g) = P rho(g) P^-1
};

/// Conjugates the action by a seeded random invertible matrix. The stream is
/// splitmix64; zmod entries are draws mod m per component, rational entries
/// are integer draws in [-3, 3]; the whole matrix is redrawn until invertible.
ScrambleResult scramble(const GModule& m, std::uint64_t seed);

} // namespace icosa
