#pragma once

#include "icosa/mat.hpp"

#include <optional>

namespace icosa {

/// Canonical row form of the row span of A: reduced row echelon form over
/// fields and the rationals, Howell form over Z/m and its golden extensions.
/// Zero rows are dropped; rows are ordered by pivot column; pivots are
/// canonical associates; entries above a pivot are reduced modulo it. The
/// result is unique per row span, so equality of spans is equality of forms.
Mat howell_form(const Mat& A);

/// Solves A x = b; over Z/m this finds torsion solutions too.
std::optional<Vec> solve(const Mat& A, const Vec& b);

/// Columnwise solve A X = B.
std::optional<Mat> solve_all(const Mat& A, const Mat& B);

/// Two-sided inverse, when the matrix is invertible over the ring.
std::optional<Mat> inverse(const Mat& M);

/// True iff the square matrix has a two-sided inverse. Throws on non-square input.
bool is_invertible(const Mat& M);

/// Division-free determinant (column-subset dynamic program); fine for the
/// small matrices used here, do not feed it large n.
RingElem determinant(const Mat& M);

/// A submodule of R^n presented by a canonical basis (rows of a Howell/RREF
/// matrix). Two generating sets of the same span produce identical values.
class Submodule {
public:
    static Submodule from_rows(const Mat& generating_rows);
    static Submodule zero(const Ring& ring, int ambient);
    static Submodule full(const Ring& ring, int ambient);

    const Ring& ring() const { return ring_; }
    int ambient_rank() const { return ambient_; }
    const Mat& basis() const { return basis_; }
    int rank() const { return basis_.rows(); }

    bool is_zero() const { return basis_.rows() == 0; }
    bool is_full() const;
    bool contains(const Vec& v) const;

    Submodule sum(const Submodule& o) const;
    Submodule intersect(const Submodule& o) const;
    /// Image { P v : v in this } for a square transform P on the ambient space.
    Submodule transformed(const Mat& P) const;

    /// Number of elements of the span; enumerative, for small zmod cases.
    /// Throws for rational rings.
    std::int64_t span_size() const;

    bool operator==(const Submodule&) const = default;

private:
    Submodule(Ring ring, int ambient, Mat basis)
        : ring_(std::move(ring)), ambient_(ambient), basis_(std::move(basis)) {}

    Ring ring_;
    int ambient_ = 0;
    Mat basis_;
};

/// Column space of M as a canonical submodule of R^rows.
Submodule canonical_image(const Mat& M);

/// Canonical basis of { v : M v = 0 }, torsion included over Z/m.
Submodule kernel(const Mat& M);

} // namespace icosa
