#include <doctest.h>

#include "glq/io.hpp"
#include "glq/rng.hpp"

using namespace glq;

TEST_CASE("matrix text round trip") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat m = parse_mat("1 0; 1 1", f2);
    CHECK(mat_to_text(m) == "1 0; 1 1");
    CHECK(parse_mat(mat_to_text(m), f2) == m);

    const FieldSpec& f4 = FieldSpec::make(2, 2);
    Rng rng(71);
    Mat e = rng.matrix(f4, 3, 2);
    CHECK(parse_mat(mat_to_text(e), f4) == e);

    CHECK_THROWS_AS(parse_mat("", f2), ParseError);
    CHECK_THROWS_AS(parse_mat("1 0; 1", f2), ParseError);
    CHECK_THROWS_AS(parse_mat("1 z", f2), ParseError);
}

TEST_CASE("window text round trip") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Window z = zeta_window(f2, ObjectA{0, 1}, 1);
    std::string text = window_to_text(z);
    CHECK(text == "1 1 1 / 1 1 1\n0 0 1; 0 1 0; 1 0 0\n");
    Window back = parse_window(text, f2, 0);
    CHECK(back.mat() == z.mat());
    CHECK(back.alpha() == z.alpha());
    CHECK(back.beta() == z.beta());

    // the target offset shifts both objects together
    Window shifted = parse_window(text, f2, -1);
    CHECK(shifted.alpha() == ObjectA{-1, 0});
    CHECK(shifted.beta() == ObjectA{-1, 0});

    CHECK_THROWS_AS(parse_window("1 1\n1\n", f2, 0), ParseError);
    CHECK_THROWS_AS(parse_window("1 1 1 / 1 1 2\n0 0 1; 0 1 0; 1 0 0\n", f2, 0), ParseError);
    CHECK_THROWS_AS(parse_window("1 1 1 / 1 1 1\n0 0 1; 0 1 0\n", f2, 0), ParseError);
}

TEST_CASE("colligation text round trip") {
    const FieldSpec& f3 = FieldSpec::make(3, 1);
    Colligation g(1, parse_mat("0 1; 1 0", f3));
    CHECK(colligation_to_text(g) == "1 1\n0 1; 1 0\n");
    Colligation back = parse_colligation(colligation_to_text(g), f3);
    CHECK(back.m() == 1);
    CHECK(back.mat() == g.mat());
    CHECK_THROWS_AS(parse_colligation("2 2\n1 0; 0 1\n", f3), ParseError);
}

TEST_CASE("relation json round trip") {
    const FieldSpec& f4 = FieldSpec::make(2, 2);
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        int m = rng.range(0, 2), n = rng.range(0, 2);
        LinRel r(m, n, span(rng.matrix(f4, rng.range(0, m + n), m + n), m + n));
        nlohmann::json j = relation_to_json(r);
        CHECK(relation_from_json(j, f4) == r);
    }
    CHECK_THROWS_AS(relation_from_json(nlohmann::json{{"m", 1}}, f4), ParseError);
}

TEST_CASE("coset json round trip carries the field") {
    const FieldSpec& f4 = FieldSpec::make(2, 2);
    Coset z = zeta(f4, ObjectA{-1, 1}, 2);
    nlohmann::json j = coset_to_json(z);
    CHECK(j["eta"] == 2);
    CHECK(j["field"]["p"] == 2);
    CHECK(j["field"]["l"] == 2);
    Coset back = coset_from_json(j);
    CHECK(back == z);
    CHECK(&back.field() == &f4);
}

TEST_CASE("field json") {
    const FieldSpec& f9 = FieldSpec::make(3, 2);
    const FieldSpec& back = field_from_json(field_to_json(f9));
    CHECK(&back == &f9);
    CHECK_THROWS_AS(field_from_json(nlohmann::json{{"p", 3}}), ParseError);
}

TEST_CASE("kappa table rendering") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    KappaTable t = canonical_kappa(zeta(f2, ObjectA{0, 1}, 1));
    CHECK(kappa_to_text(t) == "0 0 1\n0 1 0\n1 0 0\nrows 1 . 1  cols 1 . 1\n");
    nlohmann::json j = kappa_to_json(t);
    CHECK(j["kappa"][2][0] == 1);
    CHECK(j["row_minus"] == 1);
}
