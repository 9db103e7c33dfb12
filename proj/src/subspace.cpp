#include "glq/subspace.hpp"

#include <algorithm>

namespace glq {

Subspace::Subspace(const FieldSpec& f, int ambient, const Mat& vectors) : f_(&f), ambient_(ambient) {
    if (vectors.rows() > 0 && vectors.cols() != ambient) throw DimMismatch("vector length != ambient dimension");
    if (vectors.rows() == 0) {
        basis_ = Mat(f, 0, ambient);
        return;
    }
    RrefResult r = rref(vectors);
    basis_ = r.reduced.block(0, 0, r.rank, ambient);
    pivots_ = std::move(r.pivots);
}

Subspace Subspace::zero(const FieldSpec& f, int ambient) { return Subspace(f, ambient, Mat(f, 0, ambient)); }

Subspace Subspace::full(const FieldSpec& f, int ambient) {
    return Subspace(f, ambient, Mat::identity(f, ambient));
}

bool Subspace::contains(const Mat& row_vector) const {
    if (row_vector.rows() != 1 || row_vector.cols() != ambient_) throw DimMismatch("membership test needs a row vector of ambient length");
    // Reduce against the RREF basis and check what is left.
    Mat v = row_vector;
    for (int i = 0; i < basis_.rows(); ++i) {
        uint16_t c = v.val(0, pivots_[i]);
        if (!c) continue;
        for (int j = 0; j < ambient_; ++j) v.setval(0, j, f_->sub(v.val(0, j), f_->mul(c, basis_.val(i, j))));
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimMismatch("ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return f_ == o.f_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace span(const Mat& vectors, int ambient) { return Subspace(vectors.field(), ambient, vectors); }

Subspace sub_sum(const Subspace& s, const Subspace& t) {
    if (&s.field() != &t.field() || s.ambient() != t.ambient()) throw DimMismatch("sum of subspaces of different spaces");
    return Subspace(s.field(), s.ambient(), Mat::vstack(s.basis(), t.basis()));
}

// Zassenhaus: row-reduce [S S; T 0]; rows with zero left half carry an
// intersection basis in their right half.
Subspace sub_intersect(const Subspace& s, const Subspace& t) {
    if (&s.field() != &t.field() || s.ambient() != t.ambient()) throw DimMismatch("intersection of subspaces of different spaces");
    const FieldSpec& f = s.field();
    int n = s.ambient();
    Mat top = Mat::hstack(s.basis(), s.basis());
    Mat bot = Mat::hstack(t.basis(), Mat(f, t.dim(), n));
    RrefResult r = rref(Mat::vstack(top, bot));
    Mat inter(f, 0, n);
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = r.reduced.val(i, j) == 0;
        if (left_zero) inter = Mat::vstack(inter, r.reduced.block(i, n, 1, n));
    }
    return Subspace(f, n, inter);
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int n) {
    double size = 1;
    for (int i = 0; i < n; ++i) size *= f.q();
    if (size > (1 << 20)) throw TooLarge("q^n too large for subspace enumeration");

    std::vector<Subspace> out;
    const int q = f.q();
    for (int k = 0; k <= n; ++k) {
        // pivot column subsets of size k, lexicographic
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            // free positions: to the right of each pivot, excluding pivot columns
            std::vector<std::pair<int, int>> free_pos;
            {
                std::vector<bool> is_piv(n, false);
                for (int c : piv) is_piv[c] = true;
                for (int i = 0; i < k; ++i)
                    for (int j = piv[i] + 1; j < n; ++j)
                        if (!is_piv[j]) free_pos.emplace_back(i, j);
            }
            long fills = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) fills *= q;
            for (long idx = 0; idx < fills; ++idx) {
                Mat basis(f, k, n);
                for (int i = 0; i < k; ++i) basis.setval(i, piv[i], 1);
                long t = idx;
                for (auto [i, j] : free_pos) {
                    basis.setval(i, j, static_cast<uint16_t>(t % q));
                    t /= q;
                }
                out.push_back(Subspace(f, n, basis));
            }
            // next pivot combination
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && piv[i] == n - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace glq
