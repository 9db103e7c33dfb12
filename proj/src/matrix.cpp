#include "glq/matrix.hpp"

namespace glq {

Mat Mat::identity(const FieldSpec& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.setval(i, i, 1);
    return m;
}

void Mat::set(int i, int j, Scalar s) {
    if (&s.field() != f_) throw FieldMismatch("entry from a different field");
    setval(i, j, s.index());
}

Mat Mat::operator*(const Mat& o) const {
    if (f_ != o.f_) throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_) throw DimMismatch("matrix product dimension mismatch");
    Mat r(*f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint16_t a = val(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                uint16_t b = o.val(k, j);
                if (b == 0) continue;
                r.setval(i, j, f_->add(r.val(i, j), f_->mul(a, b)));
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (f_ != o.f_) throw FieldMismatch("matrix sum across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix sum dimension mismatch");
    Mat r(*f_, rows_, cols_);
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = f_->add(v_[i], o.v_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (f_ != o.f_) throw FieldMismatch("matrix difference across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix difference dimension mismatch");
    Mat r(*f_, rows_, cols_);
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = f_->sub(v_[i], o.v_[i]);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
}

Mat Mat::transpose() const {
    Mat r(*f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.setval(j, i, val(i, j));
    return r;
}

bool Mat::is_zero() const {
    for (uint16_t x : v_)
        if (x) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (val(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat::invertible() const { return rows_ == cols_ && rank(*this) == rows_; }

Mat Mat::row(int i) const { return block(i, 0, 1, cols_); }
Mat Mat::col(int j) const { return block(0, j, rows_, 1); }

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat r(*f_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.setval(i, j, val(r0 + i, c0 + j));
    return r;
}

void Mat::paste(int r0, int c0, const Mat& m) {
    if (f_ != &m.field()) throw FieldMismatch("paste across fields");
    if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw DimMismatch("paste out of range");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) setval(r0 + i, c0 + j, m.val(i, j));
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (&a.field() != &b.field()) throw FieldMismatch("vstack across fields");
    if (a.cols() != b.cols()) throw DimMismatch("vstack column mismatch");
    Mat r(a.field(), a.rows() + b.rows(), a.cols());
    r.paste(0, 0, a);
    r.paste(a.rows(), 0, b);
    return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (&a.field() != &b.field()) throw FieldMismatch("hstack across fields");
    if (a.rows() != b.rows()) throw DimMismatch("hstack row mismatch");
    Mat r(a.field(), a.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(0, a.cols(), b);
    return r;
}

uint64_t Mat::pack_key() const {
    uint64_t key = 0;
    for (uint16_t x : v_) key = key * f_->q() + x;
    return key;
}

RrefResult rref(const Mat& a) {
    const FieldSpec& f = a.field();
    Mat m = a;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.val(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) {
                uint16_t t = m.val(r, j);
                m.setval(r, j, m.val(piv, j));
                m.setval(piv, j, t);
            }
        uint16_t s = f.inv(m.val(r, c));
        for (int j = c; j < m.cols(); ++j) m.setval(r, j, f.mul(s, m.val(r, j)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            uint16_t t = m.val(i, c);
            if (!t) continue;
            for (int j = c; j < m.cols(); ++j)
                m.setval(i, j, f.sub(m.val(i, j), f.mul(t, m.val(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

int rank(const Mat& a) { return rref(a).rank; }

Mat Mat::inverse() const {
    if (rows_ != cols_) throw Singular("inverse of a non-square matrix");
    Mat aug = hstack(*this, identity(*f_, rows_));
    RrefResult r = rref(aug);
    // invertible iff every pivot lands in the left block
    for (int c : r.pivots)
        if (c >= cols_) throw Singular("matrix is singular");
    if (r.rank != rows_) throw Singular("matrix is singular");
    return r.reduced.block(0, cols_, rows_, cols_);
}

Mat nullspace_rows(const Mat& a) {
    RrefResult r = rref(a);
    const FieldSpec& f = a.field();
    int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivots) is_pivot[c] = true;
    Mat out(f, n - r.rank, n);
    int k = 0;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        out.setval(k, j, 1);
        for (int i = 0; i < r.rank; ++i) out.setval(k, r.pivots[i], f.neg(r.reduced.val(i, j)));
        ++k;
    }
    return out;
}

std::optional<AffineSolution> solve_affine(const Mat& a, const Mat& b) {
    if (b.cols() != 1 || b.rows() != a.rows()) throw DimMismatch("solve_affine needs a column of matching height");
    const FieldSpec& f = a.field();
    Mat aug = Mat::hstack(a, b);
    RrefResult r = rref(aug);
    for (int c : r.pivots)
        if (c == a.cols()) return std::nullopt;  // pivot in the constant column
    Mat particular(f, a.cols(), 1);
    for (int i = 0; i < r.rank; ++i) particular.setval(r.pivots[i], 0, r.reduced.val(i, a.cols()));
    return AffineSolution{std::move(particular), nullspace_rows(a)};
}

Mat block_assemble(const BlockLayout& layout) {
    if (!layout.field) throw LayoutInconsistent("layout has no field");
    const FieldSpec& f = *layout.field;
    size_t nr = layout.row_blocks.size(), nc = layout.col_blocks.size();
    if (layout.cells.size() != nr) throw LayoutInconsistent("cell grid height mismatch");
    int total_r = 0, total_c = 0;
    for (int h : layout.row_blocks) {
        if (h < 0) throw LayoutInconsistent("negative block height");
        total_r += h;
    }
    for (int w : layout.col_blocks) {
        if (w < 0) throw LayoutInconsistent("negative block width");
        total_c += w;
    }
    Mat out(f, total_r, total_c);
    int r0 = 0;
    for (size_t bi = 0; bi < nr; ++bi) {
        if (layout.cells[bi].size() != nc) throw LayoutInconsistent("cell grid width mismatch");
        int c0 = 0;
        for (size_t bj = 0; bj < nc; ++bj) {
            const BlockCell& cell = layout.cells[bi][bj];
            int h = layout.row_blocks[bi], w = layout.col_blocks[bj];
            switch (cell.kind) {
                case BlockCell::Zero:
                    break;
                case BlockCell::Id:
                    if (h != w) throw LayoutInconsistent("identity cell must be square");
                    for (int i = 0; i < h; ++i) out.setval(r0 + i, c0 + i, 1);
                    break;
                case BlockCell::Given:
                    if (cell.mat.rows() != h || cell.mat.cols() != w)
                        throw LayoutInconsistent("given cell dimensions mismatch");
                    if (&cell.mat.field() != &f) throw LayoutInconsistent("given cell field mismatch");
                    out.paste(r0, c0, cell.mat);
                    break;
            }
            c0 += w;
        }
        r0 += layout.row_blocks[bi];
    }
    return out;
}

Mat pad_diag(const Mat& m, int extra_minus, int extra_plus) {
    if (extra_minus < 0 || extra_plus < 0) throw DimMismatch("negative padding");
    BlockLayout layout;
    layout.field = &m.field();
    layout.row_blocks = {extra_minus, m.rows(), extra_plus};
    layout.col_blocks = {extra_minus, m.cols(), extra_plus};
    layout.cells = {{BlockCell::id(), BlockCell::zero(), BlockCell::zero()},
                    {BlockCell::zero(), BlockCell::given(m), BlockCell::zero()},
                    {BlockCell::zero(), BlockCell::zero(), BlockCell::id()}};
    return block_assemble(layout);
}

}  // namespace glq
