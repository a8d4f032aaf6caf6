#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "char2/field.hpp"

namespace char2 {

/// Dense matrix over GF(2^k), stored as k bit-planes with word-packed rows.
/// Vectors are row vectors throughout; an operator A acts by v -> v*A.
class GfMat {
public:
    GfMat() = default;
    GfMat(const Field* F, int rows, int cols);

    static GfMat identity(const Field* F, int n);

    const Field* field() const { return F_; }
    // swap in an identical field instance (same modulus and degree)
    void rebind_field(const Field* F);
    int rows() const { return nr_; }
    int cols() const { return nc_; }

    FElem get(int i, int j) const;
    void set(int i, int j, FElem v);

    bool is_zero() const;
    bool operator==(const GfMat& o) const;
    bool operator!=(const GfMat& o) const { return !(*this == o); }

    GfMat operator+(const GfMat& o) const;
    GfMat operator*(const GfMat& o) const;
    GfMat transposed() const;
    GfMat scaled(FElem c) const;
    void add_assign(const GfMat& o);

    // row operations
    void row_addmul(int dst, int src, FElem c);       // row dst += c * row src
    void row_addmul_from(int dst, const GfMat& other, int src, FElem c);
    void row_scale(int r, FElem c);
    void swap_rows(int a, int b);
    GfMat row(int r) const;                            // 1 x nc slice
    void set_row(int r, const GfMat& v);

    GfMat submatrix(int r0, int nrows, int c0, int ncols) const;

    // in-place reduced row echelon form; returns pivot column list
    std::vector<int> rref();
    int rank() const;
    // basis (as rows) of { x : this * x^T = 0 }
    GfMat right_nullspace() const;
    // basis (as rows) of { v : v * this = 0 }
    GfMat kernel() const { return transposed().right_nullspace(); }
    GfMat inverse() const;

    GfMat kron(const GfMat& o) const;
    static GfMat vstack(const std::vector<GfMat>& parts);

    // first nonzero entry scanning row-major, 0 if none
    FElem first_nonzero() const;

    // least X with X * A = *this, row by row; nullopt when some row of
    // *this lies outside the row space of A
    std::optional<GfMat> solve_left(const GfMat& A) const;

private:
    std::uint64_t* plane_row(int p, int r) {
        return data_.data() + (static_cast<std::size_t>(p) * nr_ + r) * wpr_;
    }
    const std::uint64_t* plane_row(int p, int r) const {
        return data_.data() + (static_cast<std::size_t>(p) * nr_ + r) * wpr_;
    }

    const Field* F_ = nullptr;
    int nr_ = 0, nc_ = 0, k_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Incrementally built echelonized basis of row vectors (spinning support).
class EchelonBasis {
public:
    explicit EchelonBasis(const Field* F, int dim);
    // reduce v against the basis; if independent, insert and return true
    bool insert(GfMat v);
    int size() const { return static_cast<int>(pivots_.size()); }
    int dim() const { return dim_; }
    // current basis as a size() x dim matrix
    GfMat basis() const;
    const GfMat& vec(int i) const { return vecs_[i]; }
    // express v in terms of the basis if possible
    bool reduces_to_zero(GfMat v) const;

private:
    const Field* F_;
    int dim_;
    std::vector<GfMat> vecs_;    // each 1 x dim, normalized at pivot
    std::vector<int> pivots_;
};

}  // namespace char2
