#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glq/field.hpp"

namespace glq {

// Dense matrix over an interned FieldSpec, row-major, exact arithmetic.
// Matrices act on column vectors from the left; column vectors are n×1 Mats.
// Zero-sized dimensions are legal (the 0×n and n×0 cases show up for empty
// block paddings) and all operations handle them.
class Mat {
  public:
    Mat() : f_(nullptr), rows_(0), cols_(0) {}
    Mat(const FieldSpec& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, 0) {}

    static Mat identity(const FieldSpec& f, int n);

    const FieldSpec& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint16_t val(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }
    void setval(int i, int j, uint16_t x) { v_[static_cast<size_t>(i) * cols_ + j] = x; }
    Scalar at(int i, int j) const { return Scalar(*f_, val(i, j)); }
    void set(int i, int j, Scalar s);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat inverse() const;  // throws Singular
    bool is_zero() const;
    bool is_identity() const;
    bool invertible() const;

    Mat row(int i) const;
    Mat col(int j) const;
    // Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
    Mat block(int r0, int c0, int nr, int nc) const;
    void paste(int r0, int c0, const Mat& m);

    // Stack rows of a on top of rows of b (same column count).
    static Mat vstack(const Mat& a, const Mat& b);
    static Mat hstack(const Mat& a, const Mat& b);

    // Canonical byte key for hashing; entries packed base q.
    uint64_t pack_key() const;

  private:
    const FieldSpec* f_;
    int rows_, cols_;
    std::vector<uint16_t> v_;
};

struct RrefResult {
    Mat reduced;
    std::vector<int> pivots;
    int rank;
};

// Reduced row echelon form by Gauss-Jordan elimination; row space preserved.
RrefResult rref(const Mat& a);

int rank(const Mat& a);

// Basis of {x : a x = 0} returned as rows of a (nullity × cols) matrix, in
// the standard free-column order (deterministic).
Mat nullspace_rows(const Mat& a);

struct AffineSolution {
    Mat particular;      // one solution, as a column
    Mat nullspace_rows;  // basis of the homogeneous solutions, as rows
};

// Full solution set of a x = b (b a column); nullopt iff inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& a, const Mat& b);

// Block-structured assembly. Each cell is zero, identity, or a given matrix;
// identity cells must be square per the layout.
struct BlockCell {
    enum Kind { Zero, Id, Given } kind = Zero;
    Mat mat;  // only for Given

    static BlockCell zero() { return {}; }
    static BlockCell id() { return {Id, Mat()}; }
    static BlockCell given(Mat m) { return {Given, std::move(m)}; }
};

struct BlockLayout {
    const FieldSpec* field = nullptr;
    std::vector<int> row_blocks;
    std::vector<int> col_blocks;
    std::vector<std::vector<BlockCell>> cells;  // row_blocks.size() × col_blocks.size()
};

Mat block_assemble(const BlockLayout& layout);

// diag(1_extra_minus, m, 1_extra_plus)
Mat pad_diag(const Mat& m, int extra_minus, int extra_plus);

}  // namespace glq
