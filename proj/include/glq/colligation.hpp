#pragma once

#include "glq/matrix.hpp"

namespace glq {

// A block matrix (a b; c d) of size (m + inner) with a fixed outer size m,
// considered up to conjugation by the inner block group and up to padding by
// diag(mat, 1_k). The transfer function below is the practical class
// invariant at this scale.
class Colligation {
  public:
    Colligation(int m, Mat mat);

    static Colligation identity(const FieldSpec& f, int m, int inner);

    int m() const { return m_; }
    int inner() const { return inner_; }
    const Mat& mat() const { return mat_; }
    const FieldSpec& field() const { return mat_.field(); }

    Mat a() const { return mat_.block(0, 0, m_, m_); }
    Mat b() const { return mat_.block(0, m_, m_, inner_); }
    Mat c() const { return mat_.block(m_, 0, inner_, m_); }
    Mat d() const { return mat_.block(m_, m_, inner_, inner_); }

    Colligation pad(int extra) const;

  private:
    int m_, inner_;
    Mat mat_;
};

// Block product with inner size the sum of the operands' inner sizes:
// (ap, b, aq / cp, d, cq / r, 0, t).
Colligation circ(const Colligation& g, const Colligation& h);

// a + lambda b (1 - lambda d)^{-1} c; SingularPencil when 1 - lambda d is
// not invertible.
Mat transfer(const Colligation& g, Scalar lambda);

bool transfer_defined(const Colligation& g, Scalar lambda);

// Conjugates the inner block by h and sweeps every lambda in the field where
// both transfer functions are defined; true iff they agree everywhere.
bool transfer_conjugation_invariance(const Colligation& g, const Mat& h_inner);

}  // namespace glq
