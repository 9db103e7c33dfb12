#include "glq/colligation.hpp"

namespace glq {

Colligation::Colligation(int m, Mat mat) : m_(m), mat_(std::move(mat)) {
    if (m < 0 || mat_.rows() != mat_.cols() || mat_.rows() < m)
        throw BlockMismatch("colligation needs a square matrix of size >= m");
    inner_ = mat_.rows() - m_;
    if (!mat_.invertible()) throw Singular("colligation matrix is singular");
}

Colligation Colligation::identity(const FieldSpec& f, int m, int inner) {
    return Colligation(m, Mat::identity(f, m + inner));
}

Colligation Colligation::pad(int extra) const {
    if (extra < 0) throw DimMismatch("negative padding");
    BlockLayout layout;
    layout.field = &mat_.field();
    layout.row_blocks = {mat_.rows(), extra};
    layout.col_blocks = {mat_.cols(), extra};
    layout.cells = {{BlockCell::given(mat_), BlockCell::zero()},
                    {BlockCell::zero(), BlockCell::id()}};
    return Colligation(m_, block_assemble(layout));
}

Colligation circ(const Colligation& g, const Colligation& h) {
    if (&g.field() != &h.field()) throw FieldMismatch("circ across fields");
    if (g.m() != h.m()) throw BlockMismatch("circ requires equal outer block sizes");
    const FieldSpec& f = g.field();
    Mat a = g.a(), b = g.b(), c = g.c(), d = g.d();
    Mat p = h.a(), q = h.b(), r = h.c(), t = h.d();

    BlockLayout layout;
    layout.field = &f;
    layout.row_blocks = {g.m(), g.inner(), h.inner()};
    layout.col_blocks = {g.m(), g.inner(), h.inner()};
    layout.cells = {
        {BlockCell::given(a * p), BlockCell::given(b), BlockCell::given(a * q)},
        {BlockCell::given(c * p), BlockCell::given(d), BlockCell::given(c * q)},
        {BlockCell::given(r), BlockCell::zero(), BlockCell::given(t)}};
    return Colligation(g.m(), block_assemble(layout));
}

namespace {

// 1 - lambda d
Mat pencil(const Colligation& g, Scalar lambda) {
    const FieldSpec& f = g.field();
    Mat m = Mat::identity(f, g.inner());
    Mat d = g.d();
    for (int i = 0; i < g.inner(); ++i)
        for (int j = 0; j < g.inner(); ++j)
            m.setval(i, j, f.sub(m.val(i, j), f.mul(lambda.index(), d.val(i, j))));
    return m;
}

}  // namespace

bool transfer_defined(const Colligation& g, Scalar lambda) {
    return pencil(g, lambda).invertible();
}

Mat transfer(const Colligation& g, Scalar lambda) {
    Mat pen = pencil(g, lambda);
    if (!pen.invertible()) throw SingularPencil("1 - lambda d is singular at this lambda");
    Mat result = g.b() * pen.inverse() * g.c();
    const FieldSpec& f = g.field();
    Mat a = g.a();
    for (int i = 0; i < g.m(); ++i)
        for (int j = 0; j < g.m(); ++j)
            result.setval(i, j, f.add(a.val(i, j), f.mul(lambda.index(), result.val(i, j))));
    return result;
}

bool transfer_conjugation_invariance(const Colligation& g, const Mat& h_inner) {
    if (h_inner.rows() != g.inner() || h_inner.cols() != g.inner())
        throw DimMismatch("conjugator must match the inner block");
    const FieldSpec& f = g.field();
    Mat conj = pad_diag(h_inner, g.m(), 0);
    Colligation gc(g.m(), conj * g.mat() * conj.inverse());
    for (Scalar lam : f.elements()) {
        bool d1 = transfer_defined(g, lam), d2 = transfer_defined(gc, lam);
        if (d1 != d2) return false;
        if (d1 && transfer(g, lam) != transfer(gc, lam)) return false;
    }
    return true;
}

}  // namespace glq
