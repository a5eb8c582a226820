#include "icosa/mat.hpp"

#include "icosa/errors.hpp"

namespace icosa {

Mat::Mat(const Ring& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
        throw InputError("negative matrix dimension");
}

Mat Mat::identity(const Ring& ring, int n) {
    Mat m(ring, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = ring.one();
    return m;
}

Mat Mat::from_rows(const Ring& ring, std::vector<Vec> rows, int cols) {
    Mat m(ring, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw InputError("ragged row list");
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

void Mat::check_same_ring(const Mat& o) const {
    if (!(ring_ == o.ring_))
        throw InputError("matrices over different rings");
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Mat Mat::mul(const Mat& o) const {
    check_same_ring(o);
    if (cols_ != o.rows_)
        throw InputError("matrix shape mismatch in product");
    Mat r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RingElem& a = at(i, k);
            if (ring_.is_zero(a))
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(a, o.at(k, j)));
        }
    return r;
}

Mat Mat::add(const Mat& o) const {
    check_same_ring(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix shape mismatch in sum");
    Mat r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = ring_.add(e_[i], o.e_[i]);
    return r;
}

Mat Mat::sub(const Mat& o) const {
    return add(o.neg());
}

Mat Mat::neg() const {
    Mat r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = ring_.neg(e_[i]);
    return r;
}

Mat Mat::scaled(const RingElem& c) const {
    Mat r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = ring_.mul(e_[i], c);
    return r;
}

Mat Mat::scaled_int(std::int64_t n) const {
    return scaled(ring_.from_int(n));
}

Mat Mat::pow(unsigned n) const {
    if (rows_ != cols_)
        throw InputError("pow of non-square matrix");
    Mat acc = identity(ring_, rows_);
    for (unsigned i = 0; i < n; ++i)
        acc = acc.mul(*this);
    return acc;
}

Mat Mat::transpose() const {
    Mat r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    check_same_ring(o);
    if (rows_ != o.rows_)
        throw InputError("hstack row mismatch");
    Mat r(ring_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    check_same_ring(o);
    if (cols_ != o.cols_)
        throw InputError("vstack column mismatch");
    Mat r(ring_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw InputError("vector length mismatch");
    Vec r(rows_, ring_.zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[i] = ring_.add(r[i], ring_.mul(at(i, j), v[j]));
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!ring_.is_zero(x))
            return false;
    return true;
}

bool Mat::is_identity() const {
    return rows_ == cols_ && *this == identity(ring_, rows_);
}

bool Mat::is_scalar(const RingElem& c) const {
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const RingElem want = (i == j) ? c : ring_.zero();
            if (!(at(i, j) == want))
                return false;
        }
    return true;
}

Vec vec_sub_scaled(const Ring& R, const Vec& v, const RingElem& c, const Vec& w) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = R.sub(v[i], R.mul(c, w[i]));
    return r;
}

Vec vec_scaled(const Ring& R, const Vec& v, const RingElem& c) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = R.mul(v[i], c);
    return r;
}

bool vec_is_zero(const Ring& R, const Vec& v) {
    for (const auto& x : v)
        if (!R.is_zero(x))
            return false;
    return true;
}

} // namespace icosa
