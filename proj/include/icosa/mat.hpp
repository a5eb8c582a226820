#pragma once

#include "icosa/ring.hpp"

#include <vector>

namespace icosa {

using Vec = std::vector<RingElem>;

/// Dense matrix over a Ring, row-major. Shapes with zero rows or columns are
/// allowed (empty bases, stacked kernels).
class Mat {
public:
    Mat() : ring_(Ring::rationals()) {}
    Mat(const Ring& ring, int rows, int cols);
    static Mat identity(const Ring& ring, int n);
    static Mat from_rows(const Ring& ring, std::vector<Vec> rows, int cols);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RingElem& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const RingElem& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;

    Mat mul(const Mat& o) const;
    Mat add(const Mat& o) const;
    Mat sub(const Mat& o) const;
    Mat neg() const;
    Mat scaled(const RingElem& c) const;
    Mat scaled_int(std::int64_t n) const;
    Mat pow(unsigned n) const; // square matrices
    Mat transpose() const;
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;
    Vec apply(const Vec& v) const; // matrix * column vector

    bool is_zero() const;
    bool is_identity() const;
    bool is_scalar(const RingElem& c) const;

    bool operator==(const Mat&) const = default;
    Mat operator*(const Mat& o) const { return mul(o); }
    Mat operator+(const Mat& o) const { return add(o); }
    Mat operator-(const Mat& o) const { return sub(o); }

private:
    void check_same_ring(const Mat& o) const;

    Ring ring_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<RingElem> e_;
};

// Small vector helpers shared by the reduction code.
Vec vec_sub_scaled(const Ring& R, const Vec& v, const RingElem& c, const Vec& w);
Vec vec_scaled(const Ring& R, const Vec& v, const RingElem& c);
bool vec_is_zero(const Ring& R, const Vec& v);

} // namespace icosa
