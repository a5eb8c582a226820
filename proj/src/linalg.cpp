#include "icosa/linalg.hpp"

#include "icosa/errors.hpp"

#include <algorithm>
#include <cassert>

namespace icosa {

namespace {

int pivot_col(const Ring& R, const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!R.is_zero(v[j]))
            return static_cast<int>(j);
    return -1;
}

struct RowForm {
    std::vector<Vec> rows;
    std::vector<int> pivots;
};

// The workhorse: triangularize with unimodular 2x2 transforms, append
// annihilator multiples of each pivot row (this is what separates Howell form
// from plain echelon form over Z/m), normalize pivots to canonical
// associates, then reduce entries above each pivot.
RowForm row_reduce(const Ring& R, std::vector<Vec> work, int cols) {
    std::erase_if(work, [&](const Vec& v) { return vec_is_zero(R, v); });
    RowForm out;
    for (int j = 0; j < cols; ++j) {
        int first = -1;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (R.is_zero(work[i][j]))
                continue;
            if (first < 0) {
                first = static_cast<int>(i);
                continue;
            }
            auto tf = R.gcd_transform(work[first][j], work[i][j]);
            Vec a(cols), b(cols);
            for (int c = 0; c < cols; ++c) {
                a[c] = R.add(R.mul(tf.s, work[first][c]), R.mul(tf.t, work[i][c]));
                b[c] = R.add(R.mul(tf.u, work[first][c]), R.mul(tf.v, work[i][c]));
            }
            work[first] = std::move(a);
            work[i] = std::move(b);
        }
        if (first < 0)
            continue;
        Vec piv = std::move(work[first]);
        work.erase(work.begin() + first);
        auto [unit, assoc] = R.unit_and_associate(piv[j]);
        piv = vec_scaled(R, piv, *R.inverse(unit));
        assert(piv[j] == assoc);
        RingElem ann = R.annihilator(assoc);
        if (!R.is_zero(ann)) {
            Vec extra = vec_scaled(R, piv, ann);
            if (!vec_is_zero(R, extra))
                work.push_back(std::move(extra));
        }
        out.rows.push_back(std::move(piv));
        out.pivots.push_back(j);
    }
    // Entries above a pivot become canonical representatives mod the pivot.
    for (std::size_t a = 0; a < out.rows.size(); ++a)
        for (std::size_t b = a + 1; b < out.rows.size(); ++b) {
            int jb = out.pivots[b];
            auto [q, rem] = R.reduce_mod_associate(out.rows[a][jb], out.rows[b][jb]);
            (void)rem;
            if (!R.is_zero(q))
                out.rows[a] = vec_sub_scaled(R, out.rows[a], q, out.rows[b]);
        }
    return out;
}

RowForm row_reduce(const Mat& A) {
    std::vector<Vec> rows;
    rows.reserve(A.rows());
    for (int i = 0; i < A.rows(); ++i)
        rows.push_back(A.row(i));
    return row_reduce(A.ring(), std::move(rows), A.cols());
}

// Rows of [A^T | I]: every element of the row span has the shape (A x, x).
RowForm solve_form(const Mat& A) {
    Mat w = A.transpose().hstack(Mat::identity(A.ring(), A.cols()));
    return row_reduce(w);
}

// Reduce (b, 0) against the pivot rows living in the first `n` columns; on
// success the trailing block of the residual is the negated solution.
std::optional<Vec> solve_from_form(const Ring& R, const RowForm& form, int n,
                                   Vec residual) {
    for (std::size_t i = 0; i < form.rows.size(); ++i) {
        int p = form.pivots[i];
        if (p >= n)
            break;
        if (R.is_zero(residual[p]))
            continue;
        auto q = R.divide_by_associate(residual[p], form.rows[i][p]);
        if (!q)
            return std::nullopt;
        residual = vec_sub_scaled(R, residual, *q, form.rows[i]);
    }
    for (int j = 0; j < n; ++j)
        if (!R.is_zero(residual[j]))
            return std::nullopt;
    Vec x(residual.size() - n);
    for (std::size_t j = n; j < residual.size(); ++j)
        x[j - n] = R.neg(residual[j]);
    return x;
}

} // namespace

Mat howell_form(const Mat& A) {
    RowForm f = row_reduce(A);
    return Mat::from_rows(A.ring(), std::move(f.rows), A.cols());
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw InputError("right-hand side length mismatch");
    const Ring& R = A.ring();
    RowForm form = solve_form(A);
    Vec rhs(b);
    rhs.resize(A.rows() + A.cols(), R.zero());
    auto x = solve_from_form(R, form, A.rows(), std::move(rhs));
    if (!x)
        return std::nullopt;
    assert(A.apply(*x) == b);
    return x;
}

std::optional<Mat> solve_all(const Mat& A, const Mat& B) {
    if (B.rows() != A.rows())
        throw InputError("right-hand side shape mismatch");
    const Ring& R = A.ring();
    RowForm form = solve_form(A);
    Mat X(R, A.cols(), B.cols());
    for (int c = 0; c < B.cols(); ++c) {
        Vec rhs = B.col(c);
        rhs.resize(A.rows() + A.cols(), R.zero());
        auto x = solve_from_form(R, form, A.rows(), std::move(rhs));
        if (!x)
            return std::nullopt;
        for (int i = 0; i < A.cols(); ++i)
            X.at(i, c) = (*x)[i];
    }
    assert(A.mul(X) == B);
    return X;
}

std::optional<Mat> inverse(const Mat& M) {
    if (M.rows() != M.cols())
        throw InputError("inverse of non-square matrix");
    auto X = solve_all(M, Mat::identity(M.ring(), M.rows()));
    if (!X || !X->mul(M).is_identity())
        return std::nullopt;
    return X;
}

bool is_invertible(const Mat& M) {
    if (M.rows() != M.cols())
        throw InputError("invertibility is only defined for square matrices");
    return inverse(M).has_value();
}

RingElem determinant(const Mat& M) {
    if (M.rows() != M.cols())
        throw InputError("determinant of non-square matrix");
    const Ring& R = M.ring();
    int n = M.rows();
    if (n == 0)
        return R.one();
    if (n > 12)
        throw InputError("determinant limited to n <= 12");
    // dp[mask]: signed sum over ways to fill the first popcount(mask) rows
    // using the column set `mask`.
    std::vector<RingElem> dp(std::size_t(1) << n, R.zero());
    dp[0] = R.one();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int row = __builtin_popcount(mask);
        if (row >= n || R.is_zero(dp[mask]))
            continue;
        int sign = 0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j))
                continue;
            if (!R.is_zero(M.at(row, j))) {
                RingElem term = R.mul(dp[mask], M.at(row, j));
                if (sign % 2)
                    term = R.neg(term);
                dp[mask | (1u << j)] = R.add(dp[mask | (1u << j)], term);
            }
            ++sign;
        }
    }
    return dp[(std::size_t(1) << n) - 1];
}

Submodule Submodule::from_rows(const Mat& generating_rows) {
    return Submodule(generating_rows.ring(), generating_rows.cols(),
                     howell_form(generating_rows));
}

Submodule Submodule::zero(const Ring& ring, int ambient) {
    return Submodule(ring, ambient, Mat(ring, 0, ambient));
}

Submodule Submodule::full(const Ring& ring, int ambient) {
    return Submodule(ring, ambient, Mat::identity(ring, ambient));
}

bool Submodule::is_full() const {
    return basis_.is_identity() && basis_.rows() == ambient_;
}

bool Submodule::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw InputError("vector length mismatch");
    Vec r(v);
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = pivot_col(ring_, basis_.row(i));
        if (p < 0 || ring_.is_zero(r[p]))
            continue;
        auto q = ring_.divide_by_associate(r[p], basis_.at(i, p));
        if (!q)
            return false;
        r = vec_sub_scaled(ring_, r, *q, basis_.row(i));
    }
    return vec_is_zero(ring_, r);
}

Submodule Submodule::sum(const Submodule& o) const {
    if (ambient_ != o.ambient_ || !(ring_ == o.ring_))
        throw InputError("submodule ambient mismatch");
    return from_rows(basis_.vstack(o.basis_));
}

Submodule Submodule::intersect(const Submodule& o) const {
    if (ambient_ != o.ambient_ || !(ring_ == o.ring_))
        throw InputError("submodule ambient mismatch");
    if (is_zero() || o.is_zero())
        return zero(ring_, ambient_);
    // Solutions of B1^T x + B2^T y = 0 parameterize the intersection as x B1.
    Mat stacked = basis_.transpose().hstack(o.basis_.transpose());
    Submodule ker = kernel(stacked);
    std::vector<Vec> rows;
    for (int i = 0; i < ker.rank(); ++i) {
        Vec coeff = ker.basis().row(i);
        Vec v(ambient_, ring_.zero());
        for (int r = 0; r < basis_.rows(); ++r)
            for (int j = 0; j < ambient_; ++j)
                v[j] = ring_.add(v[j], ring_.mul(coeff[r], basis_.at(r, j)));
        rows.push_back(std::move(v));
    }
    return from_rows(Mat::from_rows(ring_, std::move(rows), ambient_));
}

Submodule Submodule::transformed(const Mat& P) const {
    if (P.cols() != ambient_)
        throw InputError("transform shape mismatch");
    return from_rows(basis_.mul(P.transpose()));
}

std::int64_t Submodule::span_size() const {
    if (!ring_.is_zmod())
        throw InputError("span_size only defined over Z/m");
    // Each Howell pivot contributes index m/ann... directly: the span is the
    // set of coefficient combinations; count distinct images by pivot orders.
    // Enumerate coefficients per row over the cyclic order of the pivot.
    std::int64_t total = 1;
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = pivot_col(ring_, basis_.row(i));
        RingElem ann = ring_.annihilator(basis_.at(i, p));
        // order of the pivot row in the span = m / gcd-style: annihilator za,
        // with ann = 0 meaning the full modulus (free row).
        std::int64_t a = ann.za == 0 ? ring_.modulus() : ann.za;
        if (ring_.phi_mode() == PhiMode::extension)
            a *= a;
        total *= a;
    }
    return total;
}

Submodule canonical_image(const Mat& M) {
    return Submodule::from_rows(M.transpose());
}

Submodule kernel(const Mat& M) {
    const Ring& R = M.ring();
    RowForm form = solve_form(M);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < form.rows.size(); ++i) {
        if (form.pivots[i] < M.rows())
            continue;
        Vec tail(form.rows[i].begin() + M.rows(), form.rows[i].end());
        rows.push_back(std::move(tail));
    }
    return Submodule::from_rows(Mat::from_rows(R, std::move(rows), M.cols()));
}

} // namespace icosa
