#include <doctest.h>

#include "glq/io.hpp"
#include "glq/rng.hpp"
#include "glq/verify.hpp"

using namespace glq;
using namespace glq::verify;

TEST_CASE("foundations battery") {
    CheckReport rep = check_foundations();
    CHECK(rep.failures == 0);
    CHECK(rep.trials > 0);
}

TEST_CASE("well-definedness at small scale, and the vacuous case") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CheckReport rep = check_well_definedness(f2, 2, 2, 25, 99);
    CHECK(rep.failures == 0);
    CHECK(rep.trials == 25 * 4 * 4);
    CheckReport empty = check_well_definedness(f2, 2, 2, 0, 99);
    CHECK(empty.passed());
    CHECK(empty.trials == 0);
}

TEST_CASE("perturbing by the identity generator keeps the window itself") {
    const FieldSpec& f3 = FieldSpec::make(3, 1);
    Window a = zeta_window(f3, ObjectA{0, 1}, 1);
    Window b = unit_window(f3, ObjectA{0, 1});
    Mat before = star_matrix(a, b).mat();
    Window a_same(a.alpha(), a.beta(), a.row_minus(), a.row_plus(), a.col_minus(), a.col_plus(),
                  a.mat() * Mat::identity(f3, a.mat().cols()));
    CHECK(star_matrix(a_same, b).mat() == before);
}

TEST_CASE("associativity checks") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CheckReport ex = check_associativity(f2, AssocMode::Exhaustive, 1, 0);
    CHECK(ex.failures == 0);
    CHECK(ex.trials > 10000);
    CheckReport rnd = check_associativity(FieldSpec::make(3, 1), AssocMode::Random, 30, 1234);
    CHECK(rnd.failures == 0);
    CHECK(rnd.trials == 30);
}

TEST_CASE("isomorphism check across the three small fields") {
    for (const FieldSpec* f :
         {&FieldSpec::make(2, 1), &FieldSpec::make(3, 1), &FieldSpec::make(2, 2)}) {
        CheckReport rep = check_isomorphism(*f, 40, 4321, 2, 2);
        CHECK(rep.failures == 0);
    }
}

TEST_CASE("completeness at the frozen truncation") {
    CheckReport rep = check_completeness_bruteforce(FieldSpec::make(2, 1), CompletenessSizes{});
    CHECK(rep.failures == 0);
    CHECK(rep.notes.find("orbits=6") != std::string::npos);
    CHECK(rep.notes.find("kappa_tables=6") != std::string::npos);
}

TEST_CASE("completeness rejects oversized requests") {
    CompletenessSizes big{2, 2, 2, 2, 2, 2};
    CHECK_THROWS_AS(check_completeness_bruteforce(FieldSpec::make(2, 1), big), TooLarge);
    CompletenessSizes lopsided{1, 1, 1, 1, 2, 1};
    CHECK_THROWS_AS(check_completeness_bruteforce(FieldSpec::make(2, 1), lopsided), DimMismatch);
}

TEST_CASE("completeness across nontrivial orbit structure") {
    // q = 3 splits some kappa classes into several cosets; the predicted
    // count follows the orbit count while the table count stays behind
    CheckReport rep = check_completeness_bruteforce(FieldSpec::make(3, 1), CompletenessSizes{});
    CHECK(rep.failures == 0);
    CHECK(rep.notes.find("orbits=8") != std::string::npos);
    CHECK(rep.notes.find("kappa_tables=6") != std::string::npos);
}

TEST_CASE("structure and cone batteries at reduced size") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CheckReport st = check_structure(f2, 1, 2, 1);
    CHECK(st.failures == 0);
    CheckReport cone = check_cone(f2, 1, 2);
    CHECK(cone.failures == 0);
}

TEST_CASE("colligation battery") {
    CheckReport rep = check_colligation(FieldSpec::make(5, 1), 2, 3, 40, 777);
    CHECK(rep.failures == 0);
}

TEST_CASE("reports serialize reproducibly") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    CheckReport a = check_well_definedness(f2, 2, 2, 10, 5);
    CheckReport b = check_well_definedness(f2, 2, 2, 10, 5);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_json().contains("seed"));
    CHECK_FALSE(a.to_json().contains("elapsed"));  // timing stays out of the serialized form
}

TEST_CASE("merged reports accumulate") {
    CheckReport x, y;
    x.name = "x";
    x.trials = 3;
    y.name = "y";
    y.trials = 4;
    y.fail("w");
    CheckReport m = merge("xy", {x, y});
    CHECK(m.trials == 7);
    CHECK(m.failures == 1);
    CHECK_FALSE(m.passed());
    CHECK(m.witnesses.size() == 1);
}
