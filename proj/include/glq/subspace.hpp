#pragma once

#include <vector>

#include "glq/matrix.hpp"

namespace glq {

// A subspace of F_q^n held as its reduced-row-echelon basis; the RREF matrix
// is a unique normal form, so equality of subspaces is equality of bases.
class Subspace {
  public:
    // Span of the rows of `vectors` inside F^ambient.
    Subspace(const FieldSpec& f, int ambient, const Mat& vectors);

    static Subspace zero(const FieldSpec& f, int ambient);
    static Subspace full(const FieldSpec& f, int ambient);

    const FieldSpec& field() const { return *f_; }
    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Mat& row_vector) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    const FieldSpec* f_;
    int ambient_;
    Mat basis_;
    std::vector<int> pivots_;
};

Subspace span(const Mat& vectors, int ambient);
Subspace sub_sum(const Subspace& s, const Subspace& t);
Subspace sub_intersect(const Subspace& s, const Subspace& t);

// All subspaces of F_q^n, each exactly once, ordered by rank then by the
// enumeration of pivot sets and free entries. Guarded by q^n <= 2^20.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int n);

}  // namespace glq
