#include "icosa/ring.hpp"

#include "icosa/errors.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

namespace icosa {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw InputError("rational with zero denominator: " + s);
        return Rat(num) / Rat(den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational: " + s);
    }
}

namespace {

constexpr std::int64_t kMaxModulus = 1'000'000'000; // keeps products in int64

// g = gcd(a, b) >= 0 together with x, y satisfying x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

// m = p^k for a prime p, or nothing.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t m) {
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int k = 0;
            std::int64_t rest = m;
            while (rest % p == 0) {
                rest /= p;
                ++k;
            }
            if (rest != 1)
                return std::nullopt;
            return std::make_pair(p, k);
        }
    }
    return std::make_pair(m, 1); // m itself prime (m >= 2 guaranteed by caller)
}

bool golden_poly_has_root(std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x) {
        if (((x * x - x - 1) % p + p) % p == 0)
            return true;
    }
    return false;
}

void check_modulus(std::int64_t m) {
    if (m < 3)
        throw InputError("modulus must be at least 3");
    if (m % 2 == 0)
        throw InputError("modulus must be odd (2 must be a unit)");
    if (m > kMaxModulus)
        throw InputError("modulus too large");
}

} // namespace

Ring Ring::zmod(std::int64_t modulus) {
    check_modulus(modulus);
    Ring r;
    r.base_ = RingBase::zmod;
    r.mode_ = PhiMode::none;
    r.m_ = modulus;
    return r;
}

Ring Ring::zmod_root(std::int64_t modulus, std::int64_t root) {
    check_modulus(modulus);
    Ring r;
    r.base_ = RingBase::zmod;
    r.mode_ = PhiMode::root;
    r.m_ = modulus;
    r.root_ = ((root % modulus) + modulus) % modulus;
    std::int64_t v = (r.mulmod(r.root_, r.root_) - r.root_ - 1) % modulus;
    if (((v % modulus) + modulus) % modulus != 0)
        throw InputError("root does not satisfy r^2 = r + 1 modulo " + std::to_string(modulus));
    return r;
}

Ring Ring::zmod_extension(std::int64_t modulus) {
    check_modulus(modulus);
    auto pk = prime_power(modulus);
    if (!pk)
        throw InputError("extension modulus must be a prime power");
    if (golden_poly_has_root(pk->first))
        throw InputError("x^2 - x - 1 has a root mod " + std::to_string(pk->first) +
                         "; adjoin the root instead of a formal extension");
    Ring r;
    r.base_ = RingBase::zmod;
    r.mode_ = PhiMode::extension;
    r.m_ = modulus;
    r.p_ = pk->first;
    r.k_ = pk->second;
    return r;
}

Ring Ring::rationals() {
    Ring r;
    r.base_ = RingBase::rational;
    r.mode_ = PhiMode::none;
    return r;
}

Ring Ring::rational_extension() {
    Ring r;
    r.base_ = RingBase::rational;
    r.mode_ = PhiMode::extension;
    return r;
}

bool Ring::has_prime_characteristic() const {
    if (!is_zmod())
        return false;
    auto pk = prime_power(m_);
    return pk && pk->second == 1;
}

std::int64_t Ring::characteristic() const {
    return has_prime_characteristic() ? (mode_ == PhiMode::extension ? p_ : m_) : 0;
}

std::string Ring::describe() const {
    std::ostringstream os;
    if (is_zmod())
        os << "Z/" << m_;
    else
        os << "Q";
    switch (mode_) {
    case PhiMode::none:
        break;
    case PhiMode::root:
        os << " with phi = " << root_;
        break;
    case PhiMode::extension:
        os << "(phi)";
        break;
    }
    return os.str();
}

std::int64_t Ring::norm_int(std::int64_t v) const {
    return ((v % m_) + m_) % m_;
}

std::int64_t Ring::mulmod(std::int64_t a, std::int64_t b) const {
    return (a * b) % m_;
}

RingElem Ring::phi() const {
    switch (mode_) {
    case PhiMode::none:
        throw InputError("ring " + describe() + " has no golden ratio element");
    case PhiMode::root:
        return make(root_, 0);
    case PhiMode::extension:
        return is_zmod() ? make(0, 1) : make_rat(Rat(0), Rat(1));
    }
    throw InputError("bad phi mode");
}

RingElem Ring::from_int(std::int64_t v) const {
    RingElem e;
    if (is_zmod())
        e.za = norm_int(v);
    else
        e.qa = Rat(v);
    return e;
}

RingElem Ring::from_rat(const Rat& v) const {
    if (!is_rational())
        throw InputError("fractional value in a Z/m ring");
    RingElem e;
    e.qa = v;
    return e;
}

RingElem Ring::make(std::int64_t a, std::int64_t b) const {
    if (!is_zmod())
        return make_rat(Rat(a), Rat(b));
    if (b != 0 && mode_ != PhiMode::extension)
        throw InputError("phi component only valid in extension rings");
    RingElem e;
    e.za = norm_int(a);
    e.zb = norm_int(b);
    return e;
}

RingElem Ring::make_rat(const Rat& a, const Rat& b) const {
    if (!is_rational())
        throw InputError("rational components in a Z/m ring");
    if (b != 0 && mode_ != PhiMode::extension)
        throw InputError("phi component only valid in extension rings");
    RingElem e;
    e.qa = a;
    e.qb = b;
    return e;
}

RingElem Ring::add(const RingElem& x, const RingElem& y) const {
    RingElem e;
    if (is_zmod()) {
        e.za = (x.za + y.za) % m_;
        e.zb = (x.zb + y.zb) % m_;
    } else {
        e.qa = x.qa + y.qa;
        e.qb = x.qb + y.qb;
    }
    return e;
}

RingElem Ring::sub(const RingElem& x, const RingElem& y) const {
    return add(x, neg(y));
}

RingElem Ring::neg(const RingElem& x) const {
    RingElem e;
    if (is_zmod()) {
        e.za = (m_ - x.za) % m_;
        e.zb = (m_ - x.zb) % m_;
    } else {
        e.qa = -x.qa;
        e.qb = -x.qb;
    }
    return e;
}

RingElem Ring::mul(const RingElem& x, const RingElem& y) const {
    RingElem e;
    if (is_zmod()) {
        if (mode_ == PhiMode::extension) {
            // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
            std::int64_t bd = mulmod(x.zb, y.zb);
            e.za = (mulmod(x.za, y.za) + bd) % m_;
            e.zb = ((mulmod(x.za, y.zb) + mulmod(x.zb, y.za)) % m_ + bd) % m_;
        } else {
            e.za = mulmod(x.za, y.za);
        }
    } else {
        Rat bd = x.qb * y.qb;
        e.qa = x.qa * y.qa + bd;
        e.qb = x.qa * y.qb + x.qb * y.qa + bd;
    }
    return e;
}

RingElem Ring::mul_int(const RingElem& x, std::int64_t n) const {
    return mul(x, from_int(n));
}

bool Ring::is_zero(const RingElem& x) const {
    if (is_zmod())
        return x.za == 0 && x.zb == 0;
    return x.qa == 0 && x.qb == 0;
}

std::optional<RingElem> Ring::inverse(const RingElem& x) const {
    if (is_zero(x))
        return std::nullopt;
    if (is_zmod()) {
        if (mode_ == PhiMode::extension) {
            // Multiply by the golden conjugate (a + b) - b phi; the product is
            // the norm a^2 + ab - b^2, a plain residue.
            std::int64_t n = ((mulmod(x.za, x.za) + mulmod(x.za, x.zb)) % m_ +
                              (m_ - mulmod(x.zb, x.zb))) % m_;
            std::int64_t s, t;
            if (ext_gcd(n, m_, s, t) != 1)
                return std::nullopt;
            std::int64_t ninv = norm_int(s);
            RingElem e;
            e.za = mulmod((x.za + x.zb) % m_, ninv);
            e.zb = mulmod((m_ - x.zb) % m_, ninv);
            return e;
        }
        std::int64_t s, t;
        if (ext_gcd(x.za, m_, s, t) != 1)
            return std::nullopt;
        RingElem e;
        e.za = norm_int(s);
        return e;
    }
    if (mode_ == PhiMode::extension) {
        Rat n = x.qa * x.qa + x.qa * x.qb - x.qb * x.qb; // nonzero: x^2-x-1 irreducible over Q
        RingElem e;
        e.qa = (x.qa + x.qb) / n;
        e.qb = -x.qb / n;
        return e;
    }
    RingElem e;
    e.qa = Rat(1) / x.qa;
    return e;
}

int Ring::valuation(const RingElem& x) const {
    assert(is_chain());
    auto vp = [&](std::int64_t v) {
        if (v == 0)
            return k_;
        int n = 0;
        while (v % p_ == 0) {
            v /= p_;
            ++n;
        }
        return n;
    };
    int va = vp(x.za), vb = vp(x.zb);
    return va < vb ? va : vb;
}

Ring::GcdTransform Ring::gcd_transform(const RingElem& x, const RingElem& y) const {
    GcdTransform tf{one(), zero(), zero(), one(), x};
    if (is_zero(y))
        return tf;
    if (is_zero(x))
        return GcdTransform{zero(), one(), one(), zero(), y};

    if (is_zmod() && mode_ != PhiMode::extension) {
        std::int64_t s, t;
        std::int64_t g = ext_gcd(x.za, y.za, s, t);
        tf.s = from_int(s);
        tf.t = from_int(t);
        tf.u = from_int(-(y.za / g));
        tf.v = from_int(x.za / g);
        tf.g = from_int(g);
        return tf;
    }

    // Chain rings and fields: one of the entries divides the other.
    auto quotient = [&](const RingElem& num, const RingElem& den) {
        if (is_chain()) {
            int v = valuation(den);
            std::int64_t pv = 1;
            for (int i = 0; i < v; ++i)
                pv *= p_;
            RingElem shifted = make(num.za / pv, num.zb / pv);
            RingElem u = make(den.za / pv, den.zb / pv);
            return mul(shifted, *inverse(u));
        }
        return mul(num, *inverse(den));
    };
    bool x_divides = true;
    if (is_chain())
        x_divides = valuation(x) <= valuation(y);
    if (x_divides) {
        tf.u = neg(quotient(y, x));
        return tf;
    }
    return GcdTransform{zero(), one(), one(), neg(quotient(x, y)), y};
}

std::pair<RingElem, RingElem> Ring::unit_and_associate(const RingElem& x) const {
    if (is_zero(x))
        return {one(), zero()};
    if (is_field_like())
        return {x, one()};
    if (is_chain()) {
        int v = valuation(x);
        std::int64_t pv = 1;
        for (int i = 0; i < v; ++i)
            pv *= p_;
        return {make(x.za / pv, x.zb / pv), make(pv, 0)};
    }
    // Z/m: associate is gcd(x, m); hunt for a unit u with u * d = x.
    std::int64_t d = gcd64(x.za, m_);
    std::int64_t c = x.za / d;
    std::int64_t step = m_ / d;
    while (gcd64(c, m_) != 1)
        c = (c + step) % m_;
    return {from_int(c), from_int(d)};
}

RingElem Ring::annihilator(const RingElem& x) const {
    if (is_field_like())
        return is_zero(x) ? one() : zero();
    if (is_chain()) {
        int v = valuation(x);
        std::int64_t q = 1;
        for (int i = 0; i < k_ - v; ++i)
            q *= p_;
        return make(q % m_, 0);
    }
    std::int64_t d = gcd64(x.za, m_); // gcd(0, m) = m, so ann(0) = 1
    return from_int((m_ / d) % m_);
}

std::pair<RingElem, RingElem> Ring::reduce_mod_associate(const RingElem& e,
                                                         const RingElem& g) const {
    if (is_field_like())
        return {mul(e, *inverse(g)), zero()};
    if (is_chain()) {
        std::int64_t pv = g.za; // associates are powers of p
        assert(pv > 0 && g.zb == 0);
        return {make(e.za / pv, e.zb / pv), make(e.za % pv, e.zb % pv)};
    }
    std::int64_t d = g.za;
    assert(d > 0);
    return {from_int(e.za / d), from_int(e.za % d)};
}

std::optional<RingElem> Ring::divide_by_associate(const RingElem& y,
                                                  const RingElem& g) const {
    if (is_zero(g))
        return is_zero(y) ? std::optional<RingElem>(zero()) : std::nullopt;
    if (is_field_like())
        return mul(y, *inverse(g));
    if (is_chain()) {
        std::int64_t pv = g.za;
        if (y.za % pv != 0 || y.zb % pv != 0)
            return std::nullopt;
        return make(y.za / pv, y.zb / pv);
    }
    if (y.za % g.za != 0)
        return std::nullopt;
    return from_int(y.za / g.za);
}

std::string Ring::elem_str(const RingElem& x) const {
    std::ostringstream os;
    if (is_zmod()) {
        if (mode_ == PhiMode::extension)
            os << "[" << x.za << "," << x.zb << "]";
        else
            os << x.za;
    } else {
        if (mode_ == PhiMode::extension)
            os << "[" << rat_str(x.qa) << "," << rat_str(x.qb) << "]";
        else
            os << rat_str(x.qa);
    }
    return os.str();
}

} // namespace icosa
