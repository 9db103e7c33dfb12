#include <doctest.h>

#include <set>

#include "glq/field.hpp"

using namespace glq;

namespace {

// Test-side polynomial oracle over Z_p, independent of the library:
// coefficient vectors constant-term first.
std::vector<int> oracle_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    auto deg = [](const std::vector<int>& v) {
        int d = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) d = static_cast<int>(i);
        return d;
    };
    int dm = deg(m);
    while (deg(a) >= dm) {
        int da = deg(a);
        int c = a[da];
        for (int i = 0; i <= dm; ++i) a[da - dm + i] = ((a[da - dm + i] - c * m[i]) % p + p) % p;
    }
    a.resize(dm > 0 ? dm : 1);
    return a;
}

bool oracle_irreducible(const std::vector<int>& m, int p) {
    auto deg = [](const std::vector<int>& v) {
        int d = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) d = static_cast<int>(i);
        return d;
    };
    int n = deg(m);
    for (int d = 1; d < n; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<int> div(d + 1, 0);
            long t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            div[d] = 1;
            auto r = oracle_mod(m, div, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("prime fields need no modulus search") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<int>{0, 1});
    const FieldSpec& f3 = FieldSpec::make(3, 1);
    CHECK(f3.q() == 3);
}

TEST_CASE("F4 modulus is the unique irreducible quadratic") {
    // oracle: enumerate monic quadratics over Z_2 and keep the irreducible
    std::vector<std::vector<int>> irreducible;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            std::vector<int> m{c0, c1, 1};
            if (oracle_irreducible(m, 2)) irreducible.push_back(m);
        }
    REQUIRE(irreducible.size() == 1);
    CHECK(irreducible[0] == std::vector<int>{1, 1, 1});
    CHECK(FieldSpec::make(2, 2).modulus() == irreducible[0]);
}

TEST_CASE("extension arithmetic reduces modulo the modulus") {
    const FieldSpec& f4 = FieldSpec::make(2, 2);
    Scalar x = f4.element(2);  // coefficients (0, 1)
    // oracle: x^2 mod (x^2+x+1)
    auto r = oracle_mod({0, 0, 1}, f4.modulus(), 2);
    CHECK(r == std::vector<int>{1, 1});
    CHECK((x * x) == f4.element(3));  // 1 + x
}

TEST_CASE("basic scalar arithmetic") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CHECK((f2.one() + f2.one()).is_zero());
    const FieldSpec& f3 = FieldSpec::make(3, 1);
    CHECK(f3.element(2).inv() == f3.element(2));
    CHECK_THROWS_AS(f3.zero().inv(), ZeroInverse);
    CHECK_THROWS_AS(f2.one() + f3.one(), FieldMismatch);
}

TEST_CASE("enumeration starts 0, 1 and is closed") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    auto e2 = f2.elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].is_one());

    const FieldSpec& f4 = FieldSpec::make(2, 2);
    auto e4 = f4.elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0].is_zero());
    CHECK(e4[1].is_one());
    std::set<uint16_t> seen;
    for (Scalar a : e4) seen.insert(a.index());
    CHECK(seen.size() == 4);
    for (Scalar a : e4)
        for (Scalar b : e4) {
            CHECK(seen.count((a + b).index()));
            CHECK(seen.count((a * b).index()));
        }
}

TEST_CASE("field axioms exhaustive for q up to 9") {
    for (auto [p, l] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        const FieldSpec& f = FieldSpec::make(p, l);
        auto elems = f.elements();
        for (Scalar a : elems) {
            for (Scalar b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (Scalar c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
            if (!a.is_zero()) CHECK(a * a.inv() == f.one());
            Scalar power = a;
            for (int i = 1; i < f.q(); ++i) power = power * a;
            CHECK(power == a);  // a^q = a
        }
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::make(2, 0), DegreeMismatch);
    // x^2 + 1 = (x+1)^2 over Z_2
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<int>{1, 0, 1}), ReducibleModulus);
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<int>{1, 1}), DegreeMismatch);
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<int>{1, 1, 2}), DegreeMismatch);  // not monic mod 2
}

TEST_CASE("interning gives one instance per presentation") {
    const FieldSpec& a = FieldSpec::make(2, 2);
    const FieldSpec& b = FieldSpec::make(2, 2, std::vector<int>{1, 1, 1});
    CHECK(&a == &b);
}

TEST_CASE("scalar text form") {
    const FieldSpec& f3 = FieldSpec::make(3, 1);
    CHECK(f3.element(2).to_text() == "2");
    CHECK(f3.parse("2") == 2);
    const FieldSpec& f4 = FieldSpec::make(2, 2);
    CHECK(f4.element(3).to_text() == "1:1");
    CHECK(f4.parse("1:1") == 3);
    CHECK(f4.parse("0:1") == 2);
    CHECK(f4.parse("1") == 1);  // short form pads high coefficients
    CHECK_THROWS_AS(f4.parse("1:1:1"), ParseError);
    CHECK_THROWS_AS(f3.parse("x"), ParseError);
    for (Scalar s : FieldSpec::make(3, 2).elements())
        CHECK(FieldSpec::make(3, 2).parse(s.to_text()) == s.index());
}
