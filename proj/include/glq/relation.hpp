#pragma once

#include <vector>

#include "glq/subspace.hpp"

namespace glq {

// A linear relation V ⇉ W over F_q: a subspace of V ⊕ W with V = F^m first
// and W = F^n second. Generalizes the graph of an operator; composition,
// the four subspace invariants and the rank follow the relation calculus.
class LinRel {
  public:
    LinRel(int src_dim, int tgt_dim, Subspace space);

    static LinRel zero_rel(const FieldSpec& f, int m, int n);
    static LinRel full_rel(const FieldSpec& f, int m, int n);
    // Graph {(v, Tv)} of the operator given by the n×m matrix T.
    static LinRel graph(const Mat& t);
    static LinRel identity(const FieldSpec& f, int n);

    const FieldSpec& field() const { return space_.field(); }
    int src_dim() const { return m_; }
    int tgt_dim() const { return n_; }
    const Subspace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    // this ∘ p: pairs (v, y) admitting w with (v, w) ∈ p and (w, y) ∈ this.
    LinRel compose(const LinRel& p) const;

    // Coordinate-block swap (w, v) for (v, w); an involution.
    LinRel pseudoinverse() const;

    Subspace kernel() const;  // space ∩ (V ⊕ 0), read in V
    Subspace indef() const;   // space ∩ (0 ⊕ W), read in W
    Subspace domain() const;  // projection to V
    Subspace image() const;   // projection to W
    int rank() const;         // dim − dim ker − dim indef

    // Is the simple pair (v, w) an element of the relation?
    bool contains_pair(const Mat& v_row, const Mat& w_row) const;

    bool operator==(const LinRel& o) const {
        return m_ == o.m_ && n_ == o.n_ && space_ == o.space_;
    }
    bool operator!=(const LinRel& o) const { return !(*this == o); }

  private:
    int m_, n_;
    Subspace space_;
};

// All relations F^m ⇉ F^n, i.e. all subspaces of F^{m+n}. Guarded like
// enumerate_subspaces.
std::vector<LinRel> enumerate_relations(const FieldSpec& f, int m, int n);

}  // namespace glq
