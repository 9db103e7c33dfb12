#include <doctest.h>

#include <set>

#include "glq/io.hpp"
#include "glq/rng.hpp"
#include "glq/subspace.hpp"

using namespace glq;

namespace {

// Enumerate the element set of a subspace (small ambient only).
std::set<long> element_set(const Subspace& s) {
    const FieldSpec& f = s.field();
    std::set<long> out;
    long count = 1;
    for (int i = 0; i < s.dim(); ++i) count *= f.q();
    for (long code = 0; code < count; ++code) {
        Mat v(f, 1, s.ambient());
        long t = code;
        for (int i = 0; i < s.dim(); ++i) {
            uint16_t c = static_cast<uint16_t>(t % f.q());
            t /= f.q();
            for (int j = 0; j < s.ambient(); ++j)
                v.setval(0, j, f.add(v.val(0, j), f.mul(c, s.basis().val(i, j))));
        }
        long key = 0;
        for (int j = 0; j < s.ambient(); ++j) key = key * f.q() + v.val(0, j);
        out.insert(key);
    }
    return out;
}

long gaussian_binomial(int n, int k, int q) {
    // product formula evaluated exactly
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long qn = 1, qd = 1;
        for (int t = 0; t < n - i; ++t) qn *= q;
        for (int t = 0; t < i + 1; ++t) qd *= q;
        num *= qn - 1;
        den *= qd - 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("span basics") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Subspace empty = span(Mat(f2, 0, 3), 3);
    CHECK(empty.dim() == 0);
    CHECK(empty == Subspace::zero(f2, 3));

    Subspace s = span(parse_mat("1 0; 1 1", f2), 2);
    CHECK(s.dim() == 2);
    CHECK(sub_sum(s, s) == s);
    CHECK(sub_intersect(s, s) == s);
}

TEST_CASE("two lines in the plane meet at zero") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Subspace a = span(parse_mat("1 0", f2), 2);
    Subspace b = span(parse_mat("1 1", f2), 2);
    Subspace meet = sub_intersect(a, b);
    CHECK(meet.dim() == 0);
    // oracle: memberships over all four vectors
    std::set<long> inter;
    for (long x : element_set(a))
        if (element_set(b).count(x)) inter.insert(x);
    CHECK(inter.size() == 1);  // only zero
}

TEST_CASE("dimension formula on random pairs") {
    Rng rng(17);
    for (const FieldSpec* f : {&FieldSpec::make(2, 1), &FieldSpec::make(3, 1)})
        for (int trial = 0; trial < 60; ++trial) {
            int n = rng.range(0, 4);
            Subspace s = span(rng.matrix(*f, rng.range(0, 3), n), n);
            Subspace t = span(rng.matrix(*f, rng.range(0, 3), n), n);
            CHECK(sub_sum(s, t).dim() + sub_intersect(s, t).dim() == s.dim() + t.dim());
            // intersection elements lie in both
            Subspace meet = sub_intersect(s, t);
            for (int i = 0; i < meet.dim(); ++i) {
                CHECK(s.contains(meet.basis().row(i)));
                CHECK(t.contains(meet.basis().row(i)));
            }
        }
}

TEST_CASE("basis identity agrees with double inclusion") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    auto all = enumerate_subspaces(f2, 3);
    for (const Subspace& s : all)
        for (const Subspace& t : all)
            CHECK((s == t) == (s.contains(t) && t.contains(s)));
}

TEST_CASE("enumeration counts match an independent subset oracle") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CHECK(enumerate_subspaces(f2, 0).size() == 1);
    CHECK(enumerate_subspaces(f2, 1).size() == 2);

    auto subs = enumerate_subspaces(f2, 2);
    CHECK(subs.size() == 5);
    // oracle: subsets of F_2^2 containing 0 and closed under addition
    std::set<std::set<long>> oracle;
    for (int mask = 0; mask < 16; ++mask) {
        if (!(mask & 1)) continue;  // must contain 0
        std::set<long> vecs;
        for (int v = 0; v < 4; ++v)
            if (mask & (1 << v)) vecs.insert(v);
        bool closed = true;
        for (long a : vecs)
            for (long b : vecs) closed = closed && vecs.count(a ^ b);
        if (closed) oracle.insert(vecs);
    }
    CHECK(oracle.size() == 5);
    std::set<std::set<long>> got;
    for (const Subspace& s : subs) got.insert(element_set(s));
    CHECK(got == oracle);
}

TEST_CASE("enumeration counts match Gaussian binomials") {
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::make(q, 1);
        for (int n = 0; n <= 4; ++n) {
            long expected = 0;
            for (int k = 0; k <= n; ++k) expected += gaussian_binomial(n, k, q);
            CHECK(static_cast<long>(enumerate_subspaces(f, n).size()) == expected);
        }
    }
}

TEST_CASE("enumeration is duplicate-free and guarded") {
    const FieldSpec& f3 = FieldSpec::make(3, 1);
    auto subs = enumerate_subspaces(f3, 3);
    std::set<std::string> keys;
    for (const Subspace& s : subs) keys.insert(mat_to_text(s.basis()) + "#" + std::to_string(s.dim()));
    CHECK(keys.size() == subs.size());
    CHECK_THROWS_AS(enumerate_subspaces(FieldSpec::make(2, 1), 25), TooLarge);
}
