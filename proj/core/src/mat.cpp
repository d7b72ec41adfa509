#include "cihomol/mat.hpp"

#include <stdexcept>

namespace cihomol {

Mat::Mat(Fp field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Mat Mat::identity(Fp field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(Fp field, const std::vector<std::vector<std::uint64_t>>& rows,
                   std::size_t cols) {
    Mat m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("Mat: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

std::vector<std::uint64_t> Mat::col(std::size_t c) const {
    std::vector<std::uint64_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
        throw std::invalid_argument("Mat: incompatible product");
    const std::uint64_t p = field_.p();
    Mat out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = e_[i * cols_ + k];
            if (a == 0) continue;
            const std::uint64_t* rrow = rhs.e_.data() + k * rhs.cols_;
            std::uint64_t* orow = out.e_.data() + i * rhs.cols_;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                orow[j] = (orow[j] + a * rrow[j]) % p;
        }
    }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(field_ == rhs.field_))
        throw std::invalid_argument("Mat: incompatible sum");
    Mat out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.add(e_[i], rhs.e_[i]);
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(field_ == rhs.field_))
        throw std::invalid_argument("Mat: incompatible difference");
    Mat out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.sub(e_[i], rhs.e_[i]);
    return out;
}

Mat Mat::scaled(std::uint64_t c) const {
    c = field_.reduce(c);
    Mat out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.mul(e_[i], c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.e_[c * rows_ + r] = e_[r * cols_ + c];
    return out;
}

Mat Mat::pow(std::size_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: pow needs a square matrix");
    Mat acc = Mat::identity(field_, rows_);
    Mat base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<std::uint64_t> Mat::apply(std::span<const std::uint64_t> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat: vector length mismatch");
    const std::uint64_t p = field_.p();
    std::vector<std::uint64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = e_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + row[c] * v[c]) % p;
        out[r] = acc;
    }
    return out;
}

bool Mat::is_zero() const {
    for (auto x : e_)
        if (x) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || !(a.field() == b.field()))
        throw std::invalid_argument("hstack: row mismatch");
    Mat out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
    }
    return out;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field()))
        throw std::invalid_argument("vstack: column mismatch");
    Mat out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b(r, c));
    return out;
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    const Fp f = m.field();
    const std::uint64_t p = f.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { sel = i; break; }
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::uint64_t t = a(r, j);
                a.set(r, j, a(sel, j));
                a.set(sel, j, t);
            }
        std::uint64_t s = f.inv(a(r, c));
        if (s != 1)
            for (std::size_t j = c; j < a.cols(); ++j) a.set(r, j, f.mul(a(r, j), s));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            std::uint64_t t = a(i, c);
            if (t == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set(i, j, f.sub(a(i, j), (t * a(r, j)) % p));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots), r};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
    RrefResult r = rref(m);
    const Fp f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Mat out(f, m.cols() - r.rank, m.cols());
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        out.set(k, c, 1);
        for (std::size_t i = 0; i < r.rank; ++i)
            out.set(k, r.pivots[i], f.neg(r.matrix(i, c)));
        ++k;
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> solve(const Mat& m,
                                                std::span<const std::uint64_t> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Mat aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
        aug.set(r, m.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    std::vector<std::uint64_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        x[rr.pivots[i]] = rr.matrix(i, m.cols());
    return x;
}

RowSpace::RowSpace(Mat basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

RowSpace RowSpace::from_rows(const Mat& rows) {
    RrefResult r = rref(rows);
    Mat b(rows.field(), r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < rows.cols(); ++c) b.set(i, c, r.matrix(i, c));
    return RowSpace(std::move(b), std::move(r.pivots));
}

RowSpace RowSpace::zero(Fp field, std::size_t ambient) {
    return RowSpace(Mat(field, 0, ambient), {});
}

bool RowSpace::contains(std::span<const std::uint64_t> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("RowSpace: ambient mismatch");
    const Fp f = basis_.field();
    std::vector<std::uint64_t> rem(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::uint64_t c = rem[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient(); ++j)
            rem[j] = f.sub(rem[j], f.mul(c, basis_(i, j)));
    }
    for (auto x : rem)
        if (x) return false;
    return true;
}

bool RowSpace::contains_all(const RowSpace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

std::vector<std::uint64_t> RowSpace::coords(std::span<const std::uint64_t> v) const {
    if (!contains(v)) throw std::invalid_argument("RowSpace: vector not in subspace");
    std::vector<std::uint64_t> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

RowSpace RowSpace::sum(const RowSpace& other) const {
    return from_rows(vstack(basis_, other.basis()));
}

} // namespace cihomol
