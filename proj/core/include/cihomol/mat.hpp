#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cihomol/fp.hpp"

namespace cihomol {

/// Dense matrix over F_p, row-major, entries always reduced mod p.
/// Immutable use is the norm downstream; mutation is for construction only.
class Mat {
public:
    Mat(Fp field, std::size_t rows, std::size_t cols);

    static Mat identity(Fp field, std::size_t n);
    static Mat from_rows(Fp field, const std::vector<std::vector<std::uint64_t>>& rows,
                         std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Fp& field() const { return field_; }

    std::uint64_t operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint64_t v) {
        e_[r * cols_ + c] = field_.reduce(v);
    }

    std::span<const std::uint64_t> row(std::size_t r) const {
        return {e_.data() + r * cols_, cols_};
    }
    std::vector<std::uint64_t> col(std::size_t c) const;
    const std::vector<std::uint64_t>& entries() const { return e_; }

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(std::uint64_t c) const;
    Mat transpose() const;
    Mat pow(std::size_t k) const; // square matrices only

    std::vector<std::uint64_t> apply(std::span<const std::uint64_t> v) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Mat& rhs) const = default;

private:
    Fp field_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> e_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct RrefResult {
    Mat matrix;
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
    std::size_t rank;
};

/// Reduced row-echelon form. Pivoting is deterministic: for each column,
/// left to right, the first unused row with a nonzero entry becomes the
/// pivot row. The result is the unique RREF of the row space.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space {v : m v = 0}, one vector per row.
/// Row count is cols(m) - rank(m); the vector attached to free column f
/// has a 1 in position f and zeros in the other free columns.
Mat kernel_basis(const Mat& m);

/// One solution x of m x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero. Throws std::invalid_argument when
/// b.size() != rows(m).
std::optional<std::vector<std::uint64_t>> solve(const Mat& m,
                                                std::span<const std::uint64_t> b);

/// A subspace of F_p^n held as its canonical RREF row basis.
class RowSpace {
public:
    static RowSpace from_rows(const Mat& rows);
    static RowSpace zero(Fp field, std::size_t ambient);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const std::uint64_t> v) const;
    bool contains_all(const RowSpace& other) const;
    /// Coordinates of v in the basis rows; requires contains(v).
    std::vector<std::uint64_t> coords(std::span<const std::uint64_t> v) const;

    RowSpace sum(const RowSpace& other) const;

    bool operator==(const RowSpace&) const = default;

private:
    RowSpace(Mat basis, std::vector<std::size_t> pivots);
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace cihomol
