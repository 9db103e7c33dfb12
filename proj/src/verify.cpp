#include "glq/verify.hpp"

#include <chrono>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "glq/io.hpp"
#include "glq/rng.hpp"

namespace glq {
namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

ObjectA random_object(Rng& rng, int max_block) {
    int lo = rng.range(-1, 1);
    return ObjectA{lo, lo + rng.below(max_block + 1)};
}

Window random_window(Rng& rng, const FieldSpec& f, ObjectA alpha, ObjectA beta, int max_pad) {
    int rm = std::max(0, alpha.lo - beta.lo) + rng.below(max_pad + 1);
    int rp = std::max(0, beta.hi - alpha.hi) + rng.below(max_pad + 1);
    int cm = rm - alpha.lo + beta.lo;
    int cp = rp + alpha.hi - beta.hi;
    int n = rm + alpha.size() + rp;
    return Window(alpha, beta, rm, rp, cm, cp, rng.invertible(f, n));
}

// One generator of the block subgroup at split (s1, s2, s3), per family:
// 0 = diag(mu, 1, nu), 1 = upper-left unipotent, 2 = corner unipotent,
// 3 = right unipotent.
Mat random_generator(Rng& rng, const FieldSpec& f, int s1, int s2, int s3, int family) {
    int n = s1 + s2 + s3;
    Mat g = Mat::identity(f, n);
    switch (family) {
        case 0:
            g.paste(0, 0, rng.invertible(f, s1));
            g.paste(s1 + s2, s1 + s2, rng.invertible(f, s3));
            break;
        case 1:
            g.paste(0, s1, rng.matrix(f, s1, s2));
            break;
        case 2:
            g.paste(0, s1 + s2, rng.matrix(f, s1, s3));
            break;
        case 3:
            g.paste(s1, s1 + s2, rng.matrix(f, s2, s3));
            break;
        default:
            throw Error("unknown generator family");
    }
    return g;
}

std::string describe_pair(const Window& a, const Window& b) {
    return "A:\n" + window_to_text(a) + "B:\n" + window_to_text(b);
}

int xi(const Coset& c) { return c.eta() + c.chi().indef().dim(); }

}  // namespace

void CheckReport::fail(const std::string& witness) {
    ++failures;
    if (witnesses.size() < 3) witnesses.push_back(witness);
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j{{"name", name},
                     {"trials", trials},
                     {"failures", failures},
                     {"seed", seed},
                     {"witnesses", witnesses}};
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << name << ": " << (passed() ? "PASS" : "FAIL") << " (trials=" << trials
       << ", failures=" << failures << ", seed=" << seed << ")";
    if (!notes.empty()) os << " [" << notes << "]";
    return os.str();
}

CheckReport merge(const std::string& name, const std::vector<CheckReport>& parts) {
    CheckReport out;
    out.name = name;
    for (const CheckReport& p : parts) {
        out.trials += p.trials;
        out.failures += p.failures;
        out.elapsed_seconds += p.elapsed_seconds;
        out.seed = p.seed;
        for (const std::string& w : p.witnesses)
            if (out.witnesses.size() < 3) out.witnesses.push_back(w);
        if (!p.notes.empty()) out.notes += (out.notes.empty() ? "" : "; ") + p.notes;
    }
    return out;
}

CheckReport check_well_definedness(const FieldSpec& f, int max_block, int max_pad,
                                   long trials_per_family, uint64_t seed) {
    Timer timer;
    CheckReport rep;
    rep.name = "well-definedness";
    rep.seed = seed;
    for (int family = 0; family < 4; ++family) {
        for (long t = 0; t < trials_per_family; ++t) {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(family) * 1000003 + t));
            ObjectA alpha = random_object(rng, max_block);
            ObjectA beta = random_object(rng, max_block);
            ObjectA gamma = random_object(rng, max_block);
            Window a = random_window(rng, f, alpha, beta, max_pad);
            Window b = random_window(rng, f, beta, gamma, max_pad);
            Coset base = coset_from_window(star_matrix(a, b));

            auto compare = [&](const Window& pa, const Window& pb, const char* tag) {
                ++rep.trials;
                if (coset_from_window(star_matrix(pa, pb)) != base)
                    rep.fail(std::string("family ") + std::to_string(family) + " " + tag + "\n" +
                             describe_pair(a, b));
            };
            // right multiplication of A by Q_beta
            Mat phi = random_generator(rng, f, a.col_minus(), beta.size(), a.col_plus(), family);
            compare(Window(alpha, beta, a.row_minus(), a.row_plus(), a.col_minus(), a.col_plus(),
                           a.mat() * phi),
                    b, "A*phi");
            // left multiplication of B by Q_beta
            Mat psi = random_generator(rng, f, b.row_minus(), beta.size(), b.row_plus(), family);
            compare(a,
                    Window(beta, gamma, b.row_minus(), b.row_plus(), b.col_minus(), b.col_plus(),
                           psi * b.mat()),
                    "psi*B");
            // left multiplication of A by Q_alpha
            Mat lam = random_generator(rng, f, a.row_minus(), alpha.size(), a.row_plus(), family);
            compare(Window(alpha, beta, a.row_minus(), a.row_plus(), a.col_minus(), a.col_plus(),
                           lam * a.mat()),
                    b, "lam*A");
            // right multiplication of B by Q_gamma
            Mat rho = random_generator(rng, f, b.col_minus(), gamma.size(), b.col_plus(), family);
            compare(a,
                    Window(beta, gamma, b.row_minus(), b.row_plus(), b.col_minus(), b.col_plus(),
                           b.mat() * rho),
                    "B*rho");
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

CheckReport check_associativity(const FieldSpec& f, AssocMode mode, long budget, uint64_t seed) {
    Timer timer;
    CheckReport rep;
    rep.name = "associativity";
    rep.seed = seed;
    if (mode == AssocMode::Exhaustive) {
        const int eta_max = budget > 0 ? static_cast<int>(budget) : 1;
        for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2)
                for (int d3 = -1; d3 <= 1; ++d3) {
                    ObjectA alpha{0, 1};
                    ObjectA beta{d1, d1 + 1};
                    ObjectA gamma{d1 + d2, d1 + d2 + 1};
                    ObjectA delta{d1 + d2 + d3, d1 + d2 + d3 + 1};
                    auto as = enumerate_cosets(beta, alpha, eta_max, f);
                    auto bs = enumerate_cosets(gamma, beta, eta_max, f);
                    auto cs = enumerate_cosets(delta, gamma, eta_max, f);
                    for (const Coset& a : as)
                        for (const Coset& b : bs)
                            for (const Coset& c : cs) {
                                ++rep.trials;
                                if (star(star(a, b), c) != star(a, star(b, c)))
                                    rep.fail(coset_to_json(a).dump() + "\n" +
                                             coset_to_json(b).dump() + "\n" +
                                             coset_to_json(c).dump());
                            }
                }
    } else {
        for (long t = 0; t < budget; ++t) {
            Rng rng(Rng::derive(seed, 0xA550C000 + t));
            ObjectA alpha = random_object(rng, 2);
            ObjectA beta = random_object(rng, 2);
            ObjectA gamma = random_object(rng, 2);
            ObjectA delta = random_object(rng, 2);
            Window a = random_window(rng, f, alpha, beta, 1);
            Window b = random_window(rng, f, beta, gamma, 1);
            Window c = random_window(rng, f, gamma, delta, 1);
            ++rep.trials;
            Coset left = coset_from_window(star_matrix(star_matrix(a, b), c));
            Coset right = coset_from_window(star_matrix(a, star_matrix(b, c)));
            Coset inv_left = star(star(coset_from_window(a), coset_from_window(b)),
                                  coset_from_window(c));
            Coset inv_right = star(coset_from_window(a),
                                   star(coset_from_window(b), coset_from_window(c)));
            if (left != right || inv_left != inv_right || left != inv_left)
                rep.fail(describe_pair(a, b) + "C:\n" + window_to_text(c));
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

CheckReport check_isomorphism(const FieldSpec& f, long trials, uint64_t seed, int max_block,
                              int max_pad) {
    Timer timer;
    CheckReport rep;
    rep.name = "isomorphism";
    rep.seed = seed;
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, 0x150C000 + t));
        ObjectA alpha = random_object(rng, max_block);
        ObjectA beta = random_object(rng, max_block);
        ObjectA gamma = random_object(rng, max_block);
        Window a = random_window(rng, f, alpha, beta, max_pad);
        Window b = random_window(rng, f, beta, gamma, max_pad);
        Coset ca = coset_from_window(a);
        Coset cb = coset_from_window(b);
        Coset matrix_route = coset_from_window(star_matrix(a, b));
        Coset invariant_route = star(ca, cb);
        ++rep.trials;
        if (matrix_route != invariant_route) {
            rep.fail("matrix vs invariant\n" + describe_pair(a, b));
            continue;
        }
        // the xi form of the correction term
        int expected_xi = xi(ca) + xi(cb) -
                          sub_intersect(ca.chi().kernel(), cb.chi().indef()).dim();
        ++rep.trials;
        if (xi(invariant_route) != expected_xi) rep.fail("xi identity\n" + describe_pair(a, b));
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

namespace {

// Elementary generators of the subgroup of invertible (s1+s2+s3) block
// matrices (* * *; 0 1 *; 0 0 *): transvections and scalings in the two
// outer diagonal blocks plus single-entry unipotents in the three free
// blocks.
std::vector<Mat> block_subgroup_generators(const FieldSpec& f, int s1, int s2, int s3) {
    const int n = s1 + s2 + s3;
    const int q = f.q();
    std::vector<Mat> gens;
    auto add_entry = [&](int i, int j, int c) {
        Mat g = Mat::identity(f, n);
        g.setval(i, j, static_cast<uint16_t>(c));
        gens.push_back(std::move(g));
    };
    for (auto [off, s] : {std::pair{0, s1}, std::pair{s1 + s2, s3}}) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                if (i == j) continue;
                for (int c = 1; c < q; ++c) add_entry(off + i, off + j, c);
            }
        for (int i = 0; i < s; ++i)
            for (int u = 2; u < q; ++u) add_entry(off + i, off + i, u);
    }
    for (int i = 0; i < s1; ++i)
        for (int j = s1; j < s1 + s2; ++j)
            for (int c = 1; c < q; ++c) add_entry(i, j, c);
    for (int i = 0; i < s1; ++i)
        for (int j = s1 + s2; j < n; ++j)
            for (int c = 1; c < q; ++c) add_entry(i, j, c);
    for (int i = s1; i < s1 + s2; ++i)
        for (int j = s1 + s2; j < n; ++j)
            for (int c = 1; c < q; ++c) add_entry(i, j, c);
    return gens;
}

long count_kappa_tables(const CompletenessSizes& s) {
    long count = 0;
    for (int k11 = 0; k11 <= s.row_minus; ++k11)
        for (int k12 = 0; k12 + k11 <= s.row_minus; ++k12) {
            int k13 = s.row_minus - k11 - k12;
            for (int k21 = 0; k21 <= s.a_size; ++k21)
                for (int k22 = 0; k22 + k21 <= s.a_size; ++k22) {
                    int k23 = s.a_size - k21 - k22;
                    for (int k31 = 0; k31 <= s.row_plus; ++k31)
                        for (int k32 = 0; k32 + k31 <= s.row_plus; ++k32) {
                            int k33 = s.row_plus - k31 - k32;
                            if (k11 + k21 + k31 == s.col_minus && k12 + k22 + k32 == s.b_size &&
                                k13 + k23 + k33 == s.col_plus)
                                ++count;
                        }
                }
        }
    return count;
}

}  // namespace

CheckReport check_completeness_bruteforce(const FieldSpec& f, const CompletenessSizes& sizes) {
    Timer timer;
    CheckReport rep;
    rep.name = "completeness";

    const int n = sizes.row_minus + sizes.a_size + sizes.row_plus;
    if (n != sizes.col_minus + sizes.b_size + sizes.col_plus)
        throw DimMismatch("completeness sizes are not square");
    const int q = f.q();

    double total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    if (total > double(1 << 20)) throw TooLarge("matrix space too large for exhaustion");
    double group = 1;
    {
        double qn = 1;
        for (int i = 0; i < n; ++i) qn *= q;
        double qi = 1;
        for (int i = 0; i < n; ++i) {
            group *= (qn - qi);
            qi *= q;
        }
    }
    if (group > 25000) throw TooLarge("group too large for orbit BFS");

    ObjectA alpha{0, sizes.a_size};
    int beta_lo = sizes.col_minus - sizes.row_minus;
    ObjectA beta{beta_lo, beta_lo + sizes.b_size};

    // enumerate the full group
    std::vector<Mat> elems;
    std::unordered_map<uint64_t, int> index;
    {
        long cells = n * n;
        long count = 1;
        for (long i = 0; i < cells; ++i) count *= q;
        for (long code = 0; code < count; ++code) {
            Mat m(f, n, n);
            long t = code;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    m.setval(i, j, static_cast<uint16_t>(t % q));
                    t /= q;
                }
            if (rank(m) == n) {
                index[m.pack_key()] = static_cast<int>(elems.size());
                elems.push_back(std::move(m));
            }
        }
    }

    auto gens_a = block_subgroup_generators(f, sizes.row_minus, sizes.a_size, sizes.row_plus);
    auto gens_b = block_subgroup_generators(f, sizes.col_minus, sizes.b_size, sizes.col_plus);

    std::vector<int> component(elems.size(), -1);
    int orbit_count = 0;
    for (size_t start = 0; start < elems.size(); ++start) {
        if (component[start] >= 0) continue;
        int id = orbit_count++;
        std::queue<int> queue;
        component[start] = id;
        queue.push(static_cast<int>(start));
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            auto visit = [&](const Mat& m) {
                int idx = index.at(m.pack_key());
                if (component[idx] < 0) {
                    component[idx] = id;
                    queue.push(idx);
                }
            };
            for (const Mat& g : gens_a) visit(g * elems[cur]);
            for (const Mat& g : gens_b) visit(elems[cur] * g);
        }
    }

    // invariants constant on orbits and injective across orbits
    auto invariants_of = [&](const Mat& m) {
        Window w(alpha, beta, sizes.row_minus, sizes.row_plus, sizes.col_minus, sizes.col_plus, m);
        return coset_from_window(w);
    };
    std::vector<std::optional<Coset>> orbit_coset(orbit_count);
    for (size_t i = 0; i < elems.size(); ++i) {
        Coset c = invariants_of(elems[i]);
        ++rep.trials;
        auto& slot = orbit_coset[component[i]];
        if (!slot)
            slot = c;
        else if (*slot != c)
            rep.fail("invariants differ inside one orbit:\n" + mat_to_text(elems[i]));
    }
    for (int i = 0; i < orbit_count; ++i)
        for (int j = i + 1; j < orbit_count; ++j) {
            ++rep.trials;
            if (*orbit_coset[i] == *orbit_coset[j])
                rep.fail("two orbits share the same invariants: " +
                         coset_to_json(*orbit_coset[i]).dump());
        }

    // independent count of realizable (chi, eta) pairs at these sizes
    long predicted = 0;
    for (const LinRel& rel : enumerate_relations(f, sizes.b_size, sizes.a_size)) {
        int ker = rel.kernel().dim(), indef = rel.indef().dim(), rk = rel.rank();
        int lo = std::max(0, ker - indef + sizes.col_minus - sizes.row_minus);
        int hi = std::min(sizes.col_minus - indef,
                          sizes.row_plus - (sizes.b_size - ker - rk));
        if (hi >= lo) predicted += hi - lo + 1;
    }
    ++rep.trials;
    if (orbit_count != predicted)
        rep.fail("orbit count " + std::to_string(orbit_count) + " != predicted invariant count " +
                 std::to_string(predicted));

    long kappa_tables = count_kappa_tables(sizes);
    // The kappa-table count equals the orbit count exactly when every
    // GL(a)×GL(b) orbit of relations is a single point.
    if (q == 2 && sizes.a_size <= 1 && sizes.b_size <= 1) {
        ++rep.trials;
        if (orbit_count != kappa_tables)
            rep.fail("orbit count " + std::to_string(orbit_count) + " != kappa table count " +
                     std::to_string(kappa_tables));
    }

    rep.notes = "orbits=" + std::to_string(orbit_count) +
                " predicted=" + std::to_string(predicted) +
                " kappa_tables=" + std::to_string(kappa_tables) +
                " group=" + std::to_string(elems.size());
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

CheckReport check_involution(const FieldSpec& f, int eta_max) {
    Timer timer;
    CheckReport rep;
    rep.name = "involution";
    for (int d1 = -1; d1 <= 1; ++d1)
        for (int d2 = -1; d2 <= 1; ++d2) {
            ObjectA alpha{0, 1};
            ObjectA beta{d1, d1 + 1};
            ObjectA gamma{d1 + d2, d1 + d2 + 1};
            auto as = enumerate_cosets(beta, alpha, eta_max, f);
            auto bs = enumerate_cosets(gamma, beta, eta_max, f);
            for (const Coset& a : as) {
                ++rep.trials;
                try {
                    if (involute(involute(a)) != a) rep.fail("a** != a: " + coset_to_json(a).dump());
                } catch (const Error& e) {
                    rep.fail(std::string("involution threw: ") + e.what());
                }
            }
            for (const Coset& a : as)
                for (const Coset& b : bs) {
                    ++rep.trials;
                    try {
                        if (involute(star(a, b)) != star(involute(b), involute(a)))
                            rep.fail("(a*b)^* != b^* a^*:\n" + coset_to_json(a).dump() + "\n" +
                                     coset_to_json(b).dump());
                    } catch (const Error& e) {
                        rep.fail(std::string("involution threw: ") + e.what());
                    }
                }
        }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

CheckReport check_zeta_lmt(const FieldSpec& f, int max_obj, int k_max, int eta_max) {
    Timer timer;
    CheckReport rep;
    rep.name = "structure";

    std::vector<ObjectA> objects;
    for (int lo = -2; lo <= 2; ++lo)
        for (int hi = lo; hi <= std::min(lo + max_obj, 2); ++hi) objects.push_back(ObjectA{lo, hi});

    for (ObjectA alpha : objects) {
        for (int k = 0; k <= k_max; ++k) {
            ++rep.trials;
            Coset zk = zeta(f, alpha, k);
            if (coset_from_window(zeta_window(f, alpha, k)) != zk)
                rep.fail("zeta window invariants mismatch");
            if (zk.eta() != k) rep.fail("eta(zeta) != k");
            if (involute(zk) != zk) rep.fail("zeta not self-adjoint");
            for (int l = 0; l <= k_max; ++l) {
                ++rep.trials;
                if (star(zeta(f, alpha, k), zeta(f, alpha, l)) != zeta(f, alpha, k + l))
                    rep.fail("zeta^k * zeta^l != zeta^{k+l}");
            }
        }
    }

    // centrality against every enumerated morphism
    for (ObjectA alpha : objects)
        for (ObjectA beta : objects)
            for (const Coset& a : enumerate_cosets(beta, alpha, eta_max, f))
                for (int k = 0; k <= k_max; ++k) {
                    ++rep.trials;
                    if (star(zeta(f, alpha, k), a) != star(a, zeta(f, beta, k)))
                        rep.fail("zeta fails to commute: " + coset_to_json(a).dump());
                }

    // ordered-category identities
    for (ObjectA alpha : objects)
        for (ObjectA beta : objects) {
            if (!precedes(beta, alpha)) continue;
            OrderedTriple t = lambda_mu_theta(f, alpha, beta);
            ++rep.trials;
            if (star(t.lambda, t.mu) != t.theta) rep.fail("lambda*mu != theta");
            if (star(t.mu, t.lambda) != unit_coset(f, beta)) rep.fail("mu*lambda != 1_beta");
            if (star(t.theta, t.theta) != t.theta) rep.fail("theta not idempotent");
            if (involute(t.lambda) != t.mu) rep.fail("lambda^* != mu");
            if (involute(t.theta) != t.theta) rep.fail("theta not self-adjoint");
            if (beta == alpha && t.lambda != unit_coset(f, alpha))
                rep.fail("lambda at equal objects is not the unit");
            for (ObjectA gamma : objects) {
                if (!precedes(gamma, beta)) continue;
                OrderedTriple u = lambda_mu_theta(f, beta, gamma);
                OrderedTriple v = lambda_mu_theta(f, alpha, gamma);
                ++rep.trials;
                if (star(t.lambda, u.lambda) != v.lambda) rep.fail("lambda chain identity");
                if (star(u.mu, t.mu) != v.mu) rep.fail("mu chain identity");
                if (star(t.theta, v.theta) != v.theta) rep.fail("theta absorption identity");
            }
        }

    rep.elapsed_seconds = timer.seconds();
    return rep;
}

CheckReport check_structure(const FieldSpec& f, int max_obj, int k_max, int eta_max) {
    return merge("structure", {check_zeta_lmt(f, max_obj, k_max, eta_max),
                               check_involution(f, std::min(eta_max, 1))});
}

CheckReport check_cone(const FieldSpec& f, int max_obj, int eta_extra) {
    Timer timer;
    CheckReport rep;
    rep.name = "cone";

    std::vector<ObjectA> objects;
    for (int lo = -2; lo <= 2; ++lo)
        for (int hi = lo; hi <= std::min(lo + max_obj, 2); ++hi) objects.push_back(ObjectA{lo, hi});

    for (ObjectA alpha : objects)
        for (ObjectA beta : objects)
            for (const LinRel& rel : enumerate_relations(f, beta.size(), alpha.size())) {
                int ker = rel.kernel().dim(), indef = rel.indef().dim(), rk = rel.rank();
                int bound = beta.lo - alpha.lo + ker - indef;
                for (int eta = 0; eta <= std::max(bound, 0) + eta_extra; ++eta) {
                    ++rep.trials;
                    auto table = try_complete_kappa(alpha, beta, ker, indef, rk, eta);
                    bool expected = eta >= bound;
                    if (table.has_value() != expected) {
                        rep.fail("completion dichotomy broken at eta=" + std::to_string(eta) +
                                 " rel=" + relation_to_json(rel).dump());
                        continue;
                    }
                    if (!table) continue;
                    const KappaTable& t = *table;
                    bool ok = true;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) ok = ok && t.k[i][j] >= 0;
                    ok = ok && t.k[0][0] + t.k[0][1] + t.k[0][2] == t.row_minus;
                    ok = ok && t.k[1][0] + t.k[1][1] + t.k[1][2] == alpha.size();
                    ok = ok && t.k[2][0] + t.k[2][1] + t.k[2][2] == t.row_plus;
                    ok = ok && t.k[0][0] + t.k[1][0] + t.k[2][0] == t.col_minus;
                    ok = ok && t.k[0][1] + t.k[1][1] + t.k[2][1] == beta.size();
                    ok = ok && t.k[0][2] + t.k[1][2] + t.k[2][2] == t.col_plus;
                    ok = ok && t.row_minus - alpha.lo == t.col_minus - beta.lo;
                    ok = ok && t.row_plus + alpha.hi == t.col_plus + beta.hi;
                    if (!ok) {
                        rep.fail("inconsistent kappa table: " + kappa_to_json(t).dump());
                        continue;
                    }
                    // canonical representative reproduces the coset exactly
                    Coset c(alpha, beta, rel, eta);
                    ++rep.trials;
                    if (coset_from_window(canonical_window(c)) != c)
                        rep.fail("canonical window round trip failed: " + coset_to_json(c).dump());
                }
            }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

CheckReport check_colligation(const FieldSpec& f, int m, int max_inner, long trials,
                              uint64_t seed) {
    Timer timer;
    CheckReport rep;
    rep.name = "colligation";
    rep.seed = seed;
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, 0xC0111 + t));
        int mm = m >= 1 ? 1 + rng.below(m) : 0;
        Colligation g(mm, rng.invertible(f, mm + rng.below(max_inner + 1)));
        Colligation h(mm, rng.invertible(f, mm + rng.below(max_inner + 1)));
        Colligation gh = circ(g, h);
        for (Scalar lam : f.elements()) {
            bool dg = transfer_defined(g, lam), dh = transfer_defined(h, lam);
            ++rep.trials;
            if (transfer_defined(gh, lam) != (dg && dh)) {
                rep.fail("pencil locus of the product is not the union of loci");
                continue;
            }
            if (dg && dh && transfer(gh, lam) != transfer(g, lam) * transfer(h, lam))
                rep.fail("transfer multiplicativity failed:\n" + colligation_to_text(g) +
                         colligation_to_text(h) + "lambda=" + lam.to_text());
        }
        // conjugation invariance of the inner block
        ++rep.trials;
        if (!transfer_conjugation_invariance(g, rng.invertible(f, g.inner())))
            rep.fail("conjugation changed the transfer function:\n" + colligation_to_text(g));
        // padding invariance
        Colligation gp = g.pad(1);
        for (Scalar lam : f.elements()) {
            if (!transfer_defined(g, lam) || !transfer_defined(gp, lam)) continue;
            ++rep.trials;
            if (transfer(g, lam) != transfer(gp, lam))
                rep.fail("padding changed the transfer function:\n" + colligation_to_text(g));
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

namespace {

long gaussian_binomial(int n, int k, int q) {
    // G(n, k) = G(n-1, k-1) + q^k G(n-1, k)
    std::vector<std::vector<long>> g(n + 1, std::vector<long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) g[i][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            long qk = 1;
            for (int e = 0; e < j; ++e) qk *= q;
            g[i][j] = g[i - 1][j - 1] + qk * g[i - 1][j];
        }
    return g[n][k];
}

}  // namespace

CheckReport check_foundations() {
    Timer timer;
    CheckReport rep;
    rep.name = "foundations";

    const std::pair<int, int> fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
    for (auto [p, l] : fields) {
        const FieldSpec& f = FieldSpec::make(p, l);
        auto elems = f.elements();
        for (Scalar a : elems)
            for (Scalar b : elems) {
                ++rep.trials;
                if (a + b != b + a || a * b != b * a) rep.fail("commutativity failed");
                for (Scalar c : elems) {
                    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) ||
                        a * (b + c) != a * b + a * c) {
                        rep.fail("field axiom failed at q=" + std::to_string(f.q()));
                        break;
                    }
                }
            }
        for (Scalar a : elems) {
            ++rep.trials;
            if (!a.is_zero() && a * a.inv() != f.one()) rep.fail("inverse failed");
            Scalar power = a;
            for (int i = 1; i < f.q(); ++i) power = power * a;
            if (power != a) rep.fail("Frobenius a^q != a");
        }
    }

    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::make(q, 1);
        for (int n = 0; n <= 4; ++n) {
            long expected = 0;
            for (int k = 0; k <= n; ++k) expected += gaussian_binomial(n, k, q);
            ++rep.trials;
            if (static_cast<long>(enumerate_subspaces(f, n).size()) != expected)
                rep.fail("subspace count mismatch at n=" + std::to_string(n) +
                         " q=" + std::to_string(q));
        }
    }

    {
        const FieldSpec& f = FieldSpec::make(2, 1);
        auto rels = enumerate_relations(f, 1, 1);
        for (const LinRel& a : rels)
            for (const LinRel& b : rels)
                for (const LinRel& c : rels) {
                    ++rep.trials;
                    if (a.compose(b).compose(c) != a.compose(b.compose(c)))
                        rep.fail("relation composition not associative");
                }
    }

    rep.elapsed_seconds = timer.seconds();
    return rep;
}

}  // namespace verify
}  // namespace glq
