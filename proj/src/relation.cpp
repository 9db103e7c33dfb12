#include "glq/relation.hpp"

#include <cassert>

namespace glq {

namespace {

// Keep the columns [c0, c0+nc) of each basis row and re-span.
Subspace project_columns(const Subspace& s, int c0, int nc) {
    Mat rows(s.field(), s.dim(), nc);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < nc; ++j) rows.setval(i, j, s.basis().val(i, c0 + j));
    return Subspace(s.field(), nc, rows);
}

// Intersect s with the coordinate block [c0, c0+nc) (all other coordinates
// zero) and read the result inside that block.
Subspace slice_intersection(const Subspace& s, int c0, int nc) {
    const FieldSpec& f = s.field();
    int n = s.ambient();
    Mat blockbasis(f, nc, n);
    for (int i = 0; i < nc; ++i) blockbasis.setval(i, c0 + i, 1);
    Subspace inter = sub_intersect(s, Subspace(f, n, blockbasis));
    return project_columns(inter, c0, nc);
}

}  // namespace

LinRel::LinRel(int src_dim, int tgt_dim, Subspace space)
    : m_(src_dim), n_(tgt_dim), space_(std::move(space)) {
    if (space_.ambient() != m_ + n_) throw DimMismatch("relation subspace has wrong ambient dimension");
}

LinRel LinRel::zero_rel(const FieldSpec& f, int m, int n) {
    return LinRel(m, n, Subspace::zero(f, m + n));
}

LinRel LinRel::full_rel(const FieldSpec& f, int m, int n) {
    return LinRel(m, n, Subspace::full(f, m + n));
}

LinRel LinRel::graph(const Mat& t) {
    const FieldSpec& f = t.field();
    int m = t.cols(), n = t.rows();
    Mat rows(f, m, m + n);
    for (int i = 0; i < m; ++i) {
        rows.setval(i, i, 1);
        for (int j = 0; j < n; ++j) rows.setval(i, m + j, t.val(j, i));
    }
    return LinRel(m, n, Subspace(f, m + n, rows));
}

LinRel LinRel::identity(const FieldSpec& f, int n) { return graph(Mat::identity(f, n)); }

LinRel LinRel::compose(const LinRel& p) const {
    if (&field() != &p.field()) throw FieldMismatch("relation composition across fields");
    if (p.n_ != m_) throw DimMismatch("relation composition dimension mismatch");
    const FieldSpec& f = field();
    const int mv = p.m_, mw = m_, my = n_;
    const int amb = mv + mw + my;

    // P ⊕ Y inside V ⊕ W ⊕ Y
    Mat a(f, p.dim() + my, amb);
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < mv + mw; ++j) a.setval(i, j, p.space_.basis().val(i, j));
    for (int i = 0; i < my; ++i) a.setval(p.dim() + i, mv + mw + i, 1);

    // V ⊕ Q inside V ⊕ W ⊕ Y
    Mat b(f, mv + dim(), amb);
    for (int i = 0; i < mv; ++i) b.setval(i, i, 1);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < mw + my; ++j) b.setval(mv + i, mv + j, space_.basis().val(i, j));

    Subspace inter = sub_intersect(Subspace(f, amb, a), Subspace(f, amb, b));

    // drop the middle W block
    Mat rows(f, inter.dim(), mv + my);
    for (int i = 0; i < inter.dim(); ++i) {
        for (int j = 0; j < mv; ++j) rows.setval(i, j, inter.basis().val(i, j));
        for (int j = 0; j < my; ++j) rows.setval(i, mv + j, inter.basis().val(i, mv + mw + j));
    }
    return LinRel(mv, my, Subspace(f, mv + my, rows));
}

LinRel LinRel::pseudoinverse() const {
    const FieldSpec& f = field();
    Mat rows(f, dim(), m_ + n_);
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < n_; ++j) rows.setval(i, j, space_.basis().val(i, m_ + j));
        for (int j = 0; j < m_; ++j) rows.setval(i, n_ + j, space_.basis().val(i, j));
    }
    return LinRel(n_, m_, Subspace(f, m_ + n_, rows));
}

Subspace LinRel::kernel() const { return slice_intersection(space_, 0, m_); }
Subspace LinRel::indef() const { return slice_intersection(space_, m_, n_); }
Subspace LinRel::domain() const { return project_columns(space_, 0, m_); }
Subspace LinRel::image() const { return project_columns(space_, m_, n_); }

int LinRel::rank() const {
    int rk = dim() - kernel().dim() - indef().dim();
    assert(rk == domain().dim() - kernel().dim());
    assert(rk == image().dim() - indef().dim());
    return rk;
}

bool LinRel::contains_pair(const Mat& v_row, const Mat& w_row) const {
    Mat joint = Mat::hstack(v_row, w_row);
    return space_.contains(joint);
}

std::vector<LinRel> enumerate_relations(const FieldSpec& f, int m, int n) {
    std::vector<LinRel> out;
    for (Subspace& s : enumerate_subspaces(f, m + n)) out.push_back(LinRel(m, n, std::move(s)));
    return out;
}

}  // namespace glq
