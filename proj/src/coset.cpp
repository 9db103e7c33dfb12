#include "glq/coset.hpp"

#include <algorithm>
#include <cassert>

namespace glq {

namespace {

// Append `row` to `acc` if it enlarges the row space; returns true if added.
bool sift_row(Mat& acc, const Mat& row) {
    Mat cand = acc.rows() ? Mat::vstack(acc, row) : row;
    if (rank(cand) > acc.rows()) {
        acc = rref(cand).reduced.block(0, 0, acc.rows() + 1, acc.cols());
        return true;
    }
    return false;
}

}  // namespace

Window::Window(ObjectA alpha, ObjectA beta, int row_minus, int row_plus, int col_minus,
               int col_plus, Mat mat)
    : alpha_(alpha), beta_(beta), row_minus_(row_minus), row_plus_(row_plus),
      col_minus_(col_minus), col_plus_(col_plus), mat_(std::move(mat)) {
    if (alpha.lo > alpha.hi || beta.lo > beta.hi) throw InvariantViolation("object with lo > hi");
    if (row_minus < 0 || row_plus < 0 || col_minus < 0 || col_plus < 0)
        throw InvariantViolation("negative window padding");
    if (row_minus - alpha.lo != col_minus - beta.lo || row_plus + alpha.hi != col_plus + beta.hi)
        throw InvariantViolation("window paddings incompatible with the objects");
    if (mat_.rows() != row_minus + alpha.size() + row_plus ||
        mat_.cols() != col_minus + beta.size() + col_plus)
        throw DimMismatch("window matrix size does not match the block data");
    if (!mat_.invertible()) throw Singular("window matrix is singular");
}

Mat Window::block(int i, int j) const {
    const int r[3] = {row_minus_, alpha_.size(), row_plus_};
    const int c[3] = {col_minus_, beta_.size(), col_plus_};
    int r0 = 0, c0 = 0;
    for (int t = 0; t < i - 1; ++t) r0 += r[t];
    for (int t = 0; t < j - 1; ++t) c0 += c[t];
    return mat_.block(r0, c0, r[i - 1], c[j - 1]);
}

Window unit_window(const FieldSpec& f, ObjectA alpha) {
    return Window(alpha, alpha, 0, 0, 0, 0, Mat::identity(f, alpha.size()));
}

Window pad(const Window& w, int extra_minus, int extra_plus) {
    if (extra_minus < 0 || extra_plus < 0) throw DimMismatch("negative padding");
    return Window(w.alpha(), w.beta(), w.row_minus() + extra_minus, w.row_plus() + extra_plus,
                  w.col_minus() + extra_minus, w.col_plus() + extra_plus,
                  pad_diag(w.mat(), extra_minus, extra_plus));
}

Coset::Coset(ObjectA alpha, ObjectA beta, LinRel chi, int eta)
    : alpha_(alpha), beta_(beta), chi_(std::move(chi)), eta_(eta) {
    if (chi_.src_dim() != beta.size() || chi_.tgt_dim() != alpha.size())
        throw DimMismatch("relation dimensions do not match the objects");
    if (eta_ < 0 || eta_ < eta_lower_bound())
        throw InvariantViolation("eta below its lower bound");
}

int Coset::eta_lower_bound() const {
    return beta_.lo - alpha_.lo + chi_.kernel().dim() - chi_.indef().dim();
}

Coset unit_coset(const FieldSpec& f, ObjectA alpha) {
    return Coset(alpha, alpha, LinRel::identity(f, alpha.size()), 0);
}

Coset coset_from_window(const Window& w) {
    const FieldSpec& f = w.field();
    const int c1 = w.col_minus(), c2 = w.beta().size();
    const int r2 = w.alpha().size();

    Mat a21 = w.block(2, 1), a22 = w.block(2, 2);
    Mat a31 = w.block(3, 1), a32 = w.block(3, 2);

    // (v, u) with u = a21 y + a22 v over solutions of a31 y + a32 v = 0.
    Mat constraint = Mat::hstack(a31, a32);
    Mat kernel = nullspace_rows(constraint);  // rows (y | v) of length c1 + c2

    Mat chi_rows(f, kernel.rows(), c2 + r2);
    for (int i = 0; i < kernel.rows(); ++i) {
        Mat y = kernel.block(i, 0, 1, c1).transpose();
        Mat v = kernel.block(i, c1, 1, c2).transpose();
        Mat u = a21 * y + a22 * v;  // column of height r2
        for (int j = 0; j < c2; ++j) chi_rows.setval(i, j, v.val(j, 0));
        for (int j = 0; j < r2; ++j) chi_rows.setval(i, c2 + j, u.val(j, 0));
    }
    LinRel chi(c2, r2, Subspace(f, c2 + r2, chi_rows));
    return Coset(w.alpha(), w.beta(), chi, rank(a31));
}

Window star_matrix(const Window& a, const Window& b) {
    if (a.beta() != b.alpha()) throw NotComposable("source of the first operand must equal target of the second");
    if (&a.field() != &b.field()) throw FieldMismatch("star across fields");
    const FieldSpec& f = a.field();

    // pad both to a common interface over beta
    const int cm = std::max(a.col_minus(), b.row_minus());
    const int cp = std::max(a.col_plus(), b.row_plus());
    Window wa = pad(a, cm - a.col_minus(), cp - a.col_plus());
    Window wb = pad(b, cm - b.row_minus(), cp - b.row_plus());

    const int bs = a.beta().size();
    const int na_m = wa.row_minus(), na_p = wa.row_plus();
    const int kb_m = wb.col_minus(), kb_p = wb.col_plus();

    BlockLayout ao;
    ao.field = &f;
    ao.row_blocks = {cm, na_m, wa.alpha().size(), na_p, cp};
    ao.col_blocks = {cm, cm, bs, cp, cp};
    ao.cells.assign(5, std::vector<BlockCell>(5));
    ao.cells[0][0] = BlockCell::id();
    ao.cells[4][4] = BlockCell::id();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ao.cells[1 + i][1 + j] = BlockCell::given(wa.block(i + 1, j + 1));

    BlockLayout bd;
    bd.field = &f;
    bd.row_blocks = {cm, cm, bs, cp, cp};
    bd.col_blocks = {kb_m, cm, wb.beta().size(), cp, kb_p};
    bd.cells.assign(5, std::vector<BlockCell>(5));
    bd.cells[1][1] = BlockCell::id();
    bd.cells[3][3] = BlockCell::id();
    const int rowmap[3] = {0, 2, 4}, colmap[3] = {0, 2, 4};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            bd.cells[rowmap[i]][colmap[j]] = BlockCell::given(wb.block(i + 1, j + 1));

    Mat product = block_assemble(ao) * block_assemble(bd);
    return Window(a.alpha(), b.beta(), cm + na_m, na_p + cp, kb_m + cm, cp + kb_p,
                  std::move(product));
}

Coset star(const Coset& a, const Coset& b) {
    if (a.beta() != b.alpha()) throw NotComposable("source of the first operand must equal target of the second");
    if (&a.field() != &b.field()) throw FieldMismatch("star across fields");
    LinRel chi = a.chi().compose(b.chi());
    Subspace ib = b.chi().indef();
    Subspace da = a.chi().domain();
    int eta = a.eta() + b.eta() + ib.dim() - sub_intersect(ib, da).dim();
    return Coset(a.alpha(), b.beta(), std::move(chi), eta);
}

Coset involute(const Coset& a) {
    int eta = a.eta() + a.chi().indef().dim() - a.chi().kernel().dim() - a.beta().lo + a.alpha().lo;
    return Coset(a.beta(), a.alpha(), a.chi().pseudoinverse(), eta);
}

Window zeta_window(const FieldSpec& f, ObjectA alpha, int k) {
    if (k < 0) throw InvariantViolation("zeta exponent must be non-negative");
    BlockLayout layout;
    layout.field = &f;
    layout.row_blocks = {k, alpha.size(), k};
    layout.col_blocks = {k, alpha.size(), k};
    layout.cells.assign(3, std::vector<BlockCell>(3));
    layout.cells[0][2] = BlockCell::id();
    layout.cells[1][1] = BlockCell::id();
    layout.cells[2][0] = BlockCell::id();
    return Window(alpha, alpha, k, k, k, k, block_assemble(layout));
}

Coset zeta(const FieldSpec& f, ObjectA alpha, int k) {
    if (k < 0) throw InvariantViolation("zeta exponent must be non-negative");
    return Coset(alpha, alpha, LinRel::identity(f, alpha.size()), k);
}

OrderedTriple lambda_mu_theta(const FieldSpec& f, ObjectA alpha, ObjectA beta) {
    if (!precedes(beta, alpha)) throw NotComparable("beta must precede alpha");
    const int d_minus = beta.lo - alpha.lo;
    const int d_plus = alpha.hi - beta.hi;
    Window lw(alpha, beta, 0, 0, d_minus, d_plus, Mat::identity(f, alpha.size()));
    Coset lambda = coset_from_window(lw);
    Coset mu = involute(lambda);
    Coset theta = star(lambda, mu);
    return OrderedTriple{std::move(lambda), std::move(mu), std::move(theta)};
}

std::optional<KappaTable> try_complete_kappa(ObjectA alpha, ObjectA beta, int ker, int indef,
                                             int rk, int eta) {
    if (ker < 0 || indef < 0 || rk < 0 || eta < 0) return std::nullopt;
    KappaTable t;
    t.k[0][1] = ker;
    t.k[1][0] = indef;
    t.k[1][1] = rk;
    t.k[2][0] = eta;
    t.k[1][2] = alpha.size() - indef - rk;
    t.k[2][1] = beta.size() - ker - rk;
    if (t.k[1][2] < 0 || t.k[2][1] < 0) return std::nullopt;
    t.k[0][0] = 0;
    t.k[2][2] = 0;
    t.k[0][2] = indef + eta - beta.lo - ker + alpha.lo;
    if (t.k[0][2] < 0) return std::nullopt;
    t.row_minus = t.k[0][0] + t.k[0][1] + t.k[0][2];
    t.row_plus = t.k[2][0] + t.k[2][1] + t.k[2][2];
    t.col_minus = t.k[0][0] + t.k[1][0] + t.k[2][0];
    t.col_plus = t.k[0][2] + t.k[1][2] + t.k[2][2];
    return t;
}

KappaTable canonical_kappa(const Coset& c) {
    auto t = try_complete_kappa(c.alpha(), c.beta(), c.chi().kernel().dim(),
                                c.chi().indef().dim(), c.chi().rank(), c.eta());
    if (!t) throw InvariantViolation("kappa completion failed for a valid coset");
    return *t;
}

Window kappa_window(const FieldSpec& f, ObjectA alpha, ObjectA beta, const KappaTable& kt) {
    BlockLayout layout;
    layout.field = &f;
    layout.row_blocks.resize(9);
    layout.col_blocks.resize(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            layout.row_blocks[3 * i + j] = kt.k[i][j];  // row group i, sub-block j
            layout.col_blocks[3 * j + i] = kt.k[i][j];  // col group j, sub-block i
        }
    layout.cells.assign(9, std::vector<BlockCell>(9));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) layout.cells[3 * i + j][3 * j + i] = BlockCell::id();
    return Window(alpha, beta, kt.row_minus, kt.row_plus, kt.col_minus, kt.col_plus,
                  block_assemble(layout));
}

Window canonical_window(const Coset& c) {
    const FieldSpec& f = c.field();
    const int m = c.beta().size(), n = c.alpha().size();
    KappaTable kt = canonical_kappa(c);
    Window j = kappa_window(f, c.alpha(), c.beta(), kt);

    // Source-side basis adapted to ker ⊆ dom, then completed; target side to
    // indef plus the images of the dom extension, then completed. All picks
    // run in RREF row order, so the result is deterministic.
    Subspace ker = c.chi().kernel();
    Subspace dom = c.chi().domain();
    Mat src_rows = ker.basis();
    std::vector<int> ext_idx;
    {
        Mat acc = ker.basis();
        for (int i = 0; i < dom.dim(); ++i)
            if (sift_row(acc, dom.basis().row(i))) ext_idx.push_back(i);
    }
    Mat paired_targets(f, 0, n);
    const Mat& cb = c.chi().space().basis();
    Mat cb_left_t = cb.block(0, 0, cb.rows(), m).transpose();
    for (int i : ext_idx) {
        Mat v = dom.basis().row(i);
        src_rows = Mat::vstack(src_rows, v);
        auto sol = solve_affine(cb_left_t, v.transpose());
        if (!sol) throw InvariantViolation("domain vector not reachable in the relation");
        Mat u = (sol->particular.transpose() * cb).block(0, m, 1, n);
        paired_targets = Mat::vstack(paired_targets, u);
    }
    // complete the source basis with standard vectors
    {
        Mat acc = rref(src_rows).reduced;
        for (int e = 0; e < m && src_rows.rows() < m; ++e) {
            Mat unit(f, 1, m);
            unit.setval(0, e, 1);
            if (sift_row(acc, unit)) src_rows = Mat::vstack(src_rows, unit);
        }
    }
    Mat tgt_rows = Mat::vstack(c.chi().indef().basis(), paired_targets);
    if (rank(tgt_rows) != tgt_rows.rows())
        throw InvariantViolation("indef basis and paired images are dependent");
    {
        Mat acc = rref(tgt_rows).reduced;
        for (int e = 0; e < n && tgt_rows.rows() < n; ++e) {
            Mat unit(f, 1, n);
            unit.setval(0, e, 1);
            if (sift_row(acc, unit)) tgt_rows = Mat::vstack(tgt_rows, unit);
        }
    }

    // S maps the chosen source basis to the standard one, R likewise on the
    // target; columns of the inverse matrices are the basis vectors.
    Mat s = src_rows.transpose().inverse();
    Mat r = tgt_rows.transpose().inverse();
    Mat conjugated = pad_diag(r, kt.row_minus, kt.row_plus).inverse() * j.mat() *
                     pad_diag(s, kt.col_minus, kt.col_plus);
    return Window(c.alpha(), c.beta(), kt.row_minus, kt.row_plus, kt.col_minus, kt.col_plus,
                  std::move(conjugated));
}

long measure_weight(const Coset& c) { return c.beta().lo - c.eta() - c.chi().indef().dim(); }

std::vector<Coset> enumerate_cosets(ObjectA beta, ObjectA alpha, int eta_max, const FieldSpec& f) {
    std::vector<Coset> out;
    for (LinRel& rel : enumerate_relations(f, beta.size(), alpha.size())) {
        int lb = std::max(0, beta.lo - alpha.lo + rel.kernel().dim() - rel.indef().dim());
        for (int eta = lb; eta <= eta_max; ++eta) out.push_back(Coset(alpha, beta, rel, eta));
    }
    return out;
}

std::string render_diagram(const Coset& c) {
    KappaTable kt = canonical_kappa(c);
    const int ker = kt.k[0][1], indef = kt.k[1][0], rk = kt.k[1][1];
    const ObjectA a = c.alpha(), b = c.beta();
    const int lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
    const int width = hi - lo;

    // In the canonical decomposition the source slots run kernel, paired,
    // annihilated and the target slots indefiniteness, paired, unreached;
    // only the paired slots are drawn white.
    std::vector<std::string> src(width, "  "), mid(width, "  "), tgt(width, "  ");
    for (int s = 1; s <= b.size(); ++s) {
        int col = b.lo + s - 1 - lo;
        src[col] = (s > ker && s <= ker + rk) ? "○ " : "● ";
    }
    for (int s = 1; s <= a.size(); ++s) {
        int col = a.lo + s - 1 - lo;
        tgt[col] = (s > indef && s <= indef + rk) ? "○ " : "● ";
    }
    for (int t = 1; t <= rk; ++t) {
        int sc = b.lo + ker + t - 1 - lo;
        int tc = a.lo + indef + t - 1 - lo;
        mid[sc] = (tc == sc) ? "│ " : (tc > sc ? "╲ " : "╱ ");
    }

    auto join = [](const std::vector<std::string>& cells) {
        std::string line;
        for (const auto& cell : cells) line += cell;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line;
    };
    std::string bottom = join(tgt);
    for (int i = 0; i < c.eta(); ++i) bottom += bottom.empty() ? "⊘" : " ⊘";
    return join(src) + "\n" + join(mid) + "\n" + bottom + "\n";
}

Mat j_beta_matrix(const FieldSpec& f, int beta_size, int nu, int mu) {
    BlockLayout layout;
    layout.field = &f;
    layout.row_blocks = {nu, nu, beta_size, mu, mu};
    layout.col_blocks = {nu, nu, beta_size, mu, mu};
    layout.cells.assign(5, std::vector<BlockCell>(5));
    layout.cells[0][1] = BlockCell::id();
    layout.cells[1][0] = BlockCell::id();
    layout.cells[2][2] = BlockCell::id();
    layout.cells[3][4] = BlockCell::id();
    layout.cells[4][3] = BlockCell::id();
    return block_assemble(layout);
}

}  // namespace glq
