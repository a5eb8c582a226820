#pragma once

#include "icosa/rat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace icosa {

enum class RingBase { zmod, rational };
enum class PhiMode { none, root, extension };

/// One coefficient. For zmod rings the value is za + zb*phi with canonical
/// residues in [0, m); zb is always 0 unless phi_mode is extension. For
/// rational rings the value is qa + qb*phi with reduced fractions.
struct RingElem {
    std::int64_t za = 0;
    std::int64_t zb = 0;
    Rat qa;
    Rat qb;

    bool operator==(const RingElem&) const = default;
};

/// Exact coefficient ring: Z/m, golden quadratic extensions of Z/m, the
/// rationals, and the rational golden field Q(phi), phi^2 = phi + 1.
///
/// All elements are kept in canonical form, so operator== on RingElem is a
/// valid equality test for elements of the same ring.
class Ring {
public:
    static Ring zmod(std::int64_t modulus);
    static Ring zmod_root(std::int64_t modulus, std::int64_t root);
    static Ring zmod_extension(std::int64_t modulus);
    static Ring rationals();
    static Ring rational_extension();

    RingBase base() const { return base_; }
    PhiMode phi_mode() const { return mode_; }
    std::int64_t modulus() const { return m_; }
    std::int64_t phi_root() const { return root_; }
    bool has_phi() const { return mode_ != PhiMode::none; }

    /// Prime p and exponent k with modulus = p^k; only set for zmod
    /// extensions, which are restricted to prime-power moduli.
    std::int64_t chain_prime() const { return p_; }
    int chain_exponent() const { return k_; }

    bool is_zmod() const { return base_ == RingBase::zmod; }
    bool is_rational() const { return base_ == RingBase::rational; }
    /// True when the additive group is elementary abelian p: zmod with prime modulus.
    bool has_prime_characteristic() const;
    std::int64_t characteristic() const; // p for prime-characteristic rings, else 0
    bool is_divisible() const { return is_rational(); }

    std::string describe() const;

    RingElem zero() const { return RingElem{}; }
    RingElem one() const { return from_int(1); }
    RingElem phi() const; // throws InputError when phi_mode is none
    RingElem from_int(std::int64_t v) const;
    RingElem from_rat(const Rat& v) const;
    RingElem make(std::int64_t a, std::int64_t b) const;
    RingElem make_rat(const Rat& a, const Rat& b) const;

    RingElem add(const RingElem& x, const RingElem& y) const;
    RingElem sub(const RingElem& x, const RingElem& y) const;
    RingElem neg(const RingElem& x) const;
    RingElem mul(const RingElem& x, const RingElem& y) const;
    RingElem mul_int(const RingElem& x, std::int64_t n) const;

    bool is_zero(const RingElem& x) const;
    std::optional<RingElem> inverse(const RingElem& x) const;
    bool is_unit(const RingElem& x) const { return inverse(x).has_value(); }

    // --- support for canonical row forms ---------------------------------
    //
    // The row-reduction code needs four ring primitives. Over Z/m they are
    // driven by integer gcds, over golden extensions of Z/p^k by the p-adic
    // valuation (those rings are chain rings), and over fields they are
    // trivial. With these in hand one reduction routine produces reduced row
    // echelon form over fields and Howell form over the finite rings.

    /// Unimodular 2x2 transform: s*x + t*y = g, u*x + v*y = 0, det a unit.
    struct GcdTransform {
        RingElem s, t, u, v, g;
    };
    GcdTransform gcd_transform(const RingElem& x, const RingElem& y) const;

    /// Decomposes x = unit * associate with a canonical associate:
    /// gcd(x, m) over Z/m, p^v over chain extensions, 1 over fields.
    std::pair<RingElem, RingElem> unit_and_associate(const RingElem& x) const;

    /// Generator of { y : y*x = 0 }; zero iff x is a unit, one for x = 0.
    RingElem annihilator(const RingElem& x) const;

    /// For a canonical associate g: e = q*g + r with r the canonical
    /// representative of e modulo the ideal (g).
    std::pair<RingElem, RingElem> reduce_mod_associate(const RingElem& e,
                                                       const RingElem& g) const;

    /// Exact division by a canonical associate: q with q*g = y, if y is in (g).
    std::optional<RingElem> divide_by_associate(const RingElem& y,
                                                const RingElem& g) const;

    std::string elem_str(const RingElem& x) const;

    bool operator==(const Ring&) const = default;

private:
    Ring() = default;

    std::int64_t norm_int(std::int64_t v) const;
    std::int64_t mulmod(std::int64_t a, std::int64_t b) const;
    int valuation(const RingElem& x) const; // chain extensions only
    bool is_chain() const { return is_zmod() && mode_ == PhiMode::extension; }
    bool is_field_like() const { return is_rational(); }

    RingBase base_ = RingBase::zmod;
    PhiMode mode_ = PhiMode::none;
    std::int64_t m_ = 0;
    std::int64_t root_ = 0;
    std::int64_t p_ = 0;
    int k_ = 0;
};

} // namespace icosa
