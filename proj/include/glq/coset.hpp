#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glq/relation.hpp"

namespace glq {

// An object of the category: a pair of integers lo <= hi marking the segment
// [lo+1, hi] of the integer line; size() is the dimension of the middle
// block.
struct ObjectA {
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo; }
    bool operator==(const ObjectA& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const ObjectA& o) const { return !(*this == o); }
};

// b precedes a iff the segment of b is contained in the segment of a.
inline bool precedes(ObjectA b, ObjectA a) { return a.lo <= b.lo && b.hi <= a.hi; }

// A finite invertible matrix representing a morphism beta -> alpha, blocked
// (row_minus | alpha.size | row_plus) × (col_minus | beta.size | col_plus).
// The paddings satisfy row_minus - alpha.lo == col_minus - beta.lo and
// row_plus + alpha.hi == col_plus + beta.hi, which forces the matrix square.
class Window {
  public:
    Window(ObjectA alpha, ObjectA beta, int row_minus, int row_plus, int col_minus, int col_plus,
           Mat mat);

    ObjectA alpha() const { return alpha_; }
    ObjectA beta() const { return beta_; }
    int row_minus() const { return row_minus_; }
    int row_plus() const { return row_plus_; }
    int col_minus() const { return col_minus_; }
    int col_plus() const { return col_plus_; }
    const Mat& mat() const { return mat_; }
    const FieldSpec& field() const { return mat_.field(); }

    // Block a_ij of the 3×3 split, 1-based indices.
    Mat block(int i, int j) const;

  private:
    ObjectA alpha_, beta_;
    int row_minus_, row_plus_, col_minus_, col_plus_;
    Mat mat_;
};

// Unit morphism window 1_alpha (zero paddings, identity matrix).
Window unit_window(const FieldSpec& f, ObjectA alpha);

// diag(1_extra_minus, w, 1_extra_plus); same double coset.
Window pad(const Window& w, int extra_minus, int extra_plus);

// A morphism beta -> alpha of the double-coset category, stored by its
// complete invariant: the characteristic relation chi (source dimension
// beta.size, target dimension alpha.size) and the non-negative integer eta.
// eta must satisfy eta >= beta.lo - alpha.lo + dim ker chi - dim indef chi.
class Coset {
  public:
    Coset(ObjectA alpha, ObjectA beta, LinRel chi, int eta);

    ObjectA alpha() const { return alpha_; }
    ObjectA beta() const { return beta_; }
    const LinRel& chi() const { return chi_; }
    int eta() const { return eta_; }
    const FieldSpec& field() const { return chi_.field(); }

    // Lower bound on eta for the stored relation.
    int eta_lower_bound() const;

    bool operator==(const Coset& o) const {
        return alpha_ == o.alpha_ && beta_ == o.beta_ && chi_ == o.chi_ && eta_ == o.eta_;
    }
    bool operator!=(const Coset& o) const { return !(*this == o); }

  private:
    ObjectA alpha_, beta_;
    LinRel chi_;
    int eta_;
};

Coset unit_coset(const FieldSpec& f, ObjectA alpha);

// Invariant extraction: chi from the middle-block equation of the window,
// eta as the rank of the lower-left block.
Coset coset_from_window(const Window& w);

// Matrix route of the star product: pads the operands to a common interface,
// interleaves them and multiplies. coset_from_window(star_matrix(a, b)) ==
// star(coset_from_window(a), coset_from_window(b)).
Window star_matrix(const Window& a, const Window& b);

// Invariant route of the star product.
Coset star(const Coset& a, const Coset& b);

// The involution a -> a* (matrix route: A -> A^{-1}).
Coset involute(const Coset& a);

// Central elements: identity relation with eta = k.
Coset zeta(const FieldSpec& f, ObjectA alpha, int k);
Window zeta_window(const FieldSpec& f, ObjectA alpha, int k);

// Canonical morphisms of the ordered-category structure, beta ≺ alpha:
// lambda: beta -> alpha (unit-matrix window), mu = lambda*, theta = lambda*mu.
struct OrderedTriple {
    Coset lambda;
    Coset mu;
    Coset theta;
};
OrderedTriple lambda_mu_theta(const FieldSpec& f, ObjectA alpha, ObjectA beta);

// The 3×3 table of block sizes of the canonical 0-1 representative.
// Row sums are (row_minus, alpha.size, row_plus), column sums
// (col_minus, beta.size, col_plus). Corner convention:
//   k[0][1] = dim ker chi, k[1][0] = dim indef chi, k[1][1] = rk chi,
//   k[2][0] = eta, k[0][2] = eta of the involuted coset.
struct KappaTable {
    int k[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    int row_minus = 0, row_plus = 0, col_minus = 0, col_plus = 0;
};

// Completion of the table from the four corner values per the cone
// inequalities; nullopt iff no valid table exists (eta below its bound).
std::optional<KappaTable> try_complete_kappa(ObjectA alpha, ObjectA beta, int ker, int indef,
                                             int rk, int eta);

KappaTable canonical_kappa(const Coset& c);

// The 0-1 window J_kappa determined by a table.
Window kappa_window(const FieldSpec& f, ObjectA alpha, ObjectA beta, const KappaTable& kt);

// J_kappa conjugated by block-diagonal basis changes so that
// coset_from_window(canonical_window(c)) == c exactly.
Window canonical_window(const Coset& c);

// Exponent e such that the point mass of the canonical measure on chi is p^e.
long measure_weight(const Coset& c);

// All cosets beta -> alpha with eta up to eta_max (from its lower bound).
std::vector<Coset> enumerate_cosets(ObjectA beta, ObjectA alpha, int eta_max, const FieldSpec& f);

// Two-line diagram: source slots on top, target slots below, strokes for the
// paired part of the canonical decomposition, black circles for kernel and
// indefiniteness slots, eta trailing ⊘ glyphs.
std::string render_diagram(const Coset& c);

// The 0-1 matrix J_beta(nu, mu) swapping the two outer padding pairs.
Mat j_beta_matrix(const FieldSpec& f, int beta_size, int nu, int mu);

}  // namespace glq
