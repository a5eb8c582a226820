#include "icosa/builders.hpp"

#include "icosa/errors.hpp"

#include <set>

namespace icosa {

namespace {

std::int64_t norm_mod(std::int64_t v, std::int64_t m) {
    return ((v % m) + m) % m;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = norm_mod(a, m), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    if (r0 != 1)
        throw CheckError("non-invertible value in Hensel step");
    return norm_mod(s0, m);
}

bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

} // namespace

std::optional<GoldenRoot> hensel_phi(std::int64_t p, int k) {
    if (p == 2)
        throw InputError("p = 2 is not supported");
    if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not prime");
    if (k < 1)
        throw InputError("exponent must be at least 1");

    std::optional<std::int64_t> base;
    for (std::int64_t x = 0; x < p; ++x)
        if (norm_mod(x * x - x - 1, p) == 0) {
            base = x;
            break; // lesser root
        }
    if (!base)
        return std::nullopt;
    if (p == 5) {
        // double root: the derivative 2x - 1 vanishes at it, no lift exists
        if (k > 1)
            return std::nullopt;
        return GoldenRoot{5, 1, *base, 5};
    }

    std::int64_t value = *base;
    std::int64_t modulus = p;
    for (int j = 2; j <= k; ++j) {
        if (modulus > 1'000'000'000 / p)
            throw InputError("p^k too large");
        modulus *= p;
        std::int64_t f = norm_mod(value * value - value - 1, modulus);
        std::int64_t fp = inv_mod(norm_mod(2 * value - 1, modulus), modulus);
        value = norm_mod(value - (f * fp) % modulus, modulus);
    }
    return GoldenRoot{p, k, value, modulus};
}

namespace {

// Column j of the 3x3 block holds the image of e_j.
Mat icosa_alpha_block(const Ring& R) {
    Mat a(R, 3, 3);
    RingElem one = R.one(), phi = R.phi();
    a.at(0, 0) = R.neg(one);
    a.at(2, 0) = phi;
    a.at(1, 1) = R.neg(one);
    a.at(2, 1) = phi;
    a.at(2, 2) = one;
    return a;
}

Mat icosa_gamma_block(const Ring& R) {
    Mat c(R, 3, 3);
    c.at(2, 0) = R.one(); // e1 -> e3
    c.at(0, 1) = R.one(); // e2 -> e1
    c.at(1, 2) = R.one(); // e3 -> e2
    return c;
}

Mat block_diag(const Mat& block, int copies) {
    const Ring& R = block.ring();
    int n = block.rows();
    Mat m(R, n * copies, n * copies);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(c * n + i, c * n + j) = block.at(i, j);
    return m;
}

GModule matrix_group_module(const Ring& ring, int rank,
                            std::vector<std::pair<Perm, Mat>> gens,
                            std::size_t expected_order,
                            const std::string& what) {
    std::vector<Perm> perms;
    for (const auto& [p, m] : gens)
        perms.push_back(p);
    GroupTable group = GroupTable::enumerate(perms);
    if (group.size() != expected_order)
        throw CheckError(what + ": permutation group has order " +
                         std::to_string(group.size()) + ", expected " +
                         std::to_string(expected_order));
    GModule module(ring, rank, group, std::move(gens));
    // Faithfulness doubles as the matrix-closure order check.
    if (!module.is_faithful())
        throw CheckError(what + ": matrix closure order mismatch");
    return module;
}

} // namespace

GModule build_icosa(const Ring& ring, int copies, const Perm& alpha, const Perm& gamma) {
    if (copies < 1)
        throw InputError("need at least one copy");
    if (!ring.has_phi())
        throw InputError("no golden ratio available in " + ring.describe());
    if (alpha.order() != 2 || gamma.order() != 3 || alpha.compose(gamma).order() != 5)
        throw InputError("generators must satisfy |alpha| = 2, |gamma| = 3, |alpha gamma| = 5");
    std::vector<std::pair<Perm, Mat>> gens = {
        {alpha, block_diag(icosa_alpha_block(ring), copies)},
        {gamma, block_diag(icosa_gamma_block(ring), copies)},
    };
    return matrix_group_module(ring, 3 * copies, std::move(gens), 60, "icosa");
}

GModule build_icosa(const Ring& ring, int copies) {
    return build_icosa(ring, copies, Perm::parse("(1 2)(3 4)", 5), Perm::parse("(1 3 5)", 5));
}

GModule build_tetra(const Ring& ring) {
    Mat flip(ring, 3, 3);
    flip.at(0, 0) = ring.one();
    flip.at(1, 1) = ring.from_int(-1);
    flip.at(2, 2) = ring.from_int(-1);
    std::vector<std::pair<Perm, Mat>> gens = {
        {Perm::parse("(1 2)(3 4)"), flip},
        {Perm::parse("(1 2 3)", 4), icosa_gamma_block(ring)},
    };
    return matrix_group_module(ring, 3, std::move(gens), 12, "tetra");
}

GModule build_cube(const Ring& ring) {
    // quarter turn (x, y, z) -> (y, -x, z)
    Mat turn(ring, 3, 3);
    turn.at(1, 0) = ring.from_int(-1); // e1 -> -e2
    turn.at(0, 1) = ring.one();        // e2 -> e1
    turn.at(2, 2) = ring.one();
    std::vector<std::pair<Perm, Mat>> gens = {
        {Perm::parse("(1 2 3)", 4), icosa_gamma_block(ring)},
        {Perm::parse("(1 4 3 2)", 4), turn},
    };
    return matrix_group_module(ring, 3, std::move(gens), 24, "cube");
}

ScrambleResult scramble(const GModule& m, std::uint64_t seed) {
    const Ring& R = m.ring();
    int n = m.rank();
    SplitMix64 rng(seed);
    auto draw_elem = [&]() {
        if (R.is_zmod()) {
            std::int64_t a = static_cast<std::int64_t>(rng.next() % R.modulus());
            std::int64_t b = 0;
            if (R.phi_mode() == PhiMode::extension)
                b = static_cast<std::int64_t>(rng.next() % R.modulus());
            return R.make(a, b);
        }
        return R.from_int(static_cast<std::int64_t>(rng.next() % 7) - 3);
    };
    Mat p(R, 0, 0);
    std::optional<Mat> pinv;
    do {
        p = Mat(R, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                p.at(i, j) = draw_elem();
        pinv = inverse(p);
    } while (!pinv);

    std::vector<std::pair<Perm, Mat>> gens;
    for (const auto& [g, mat] : m.generator_action())
        gens.emplace_back(g, p.mul(mat).mul(*pinv));
    return ScrambleResult{GModule(R, n, m.group(), std::move(gens)), p};
}

} // namespace icosa
