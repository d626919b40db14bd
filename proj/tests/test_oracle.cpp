#include <doctest.h>

#include "common.hpp"
#include "knotquiver/oracle.hpp"

using namespace kq;

TEST_CASE("determinants of small polynomial matrices") {
    const LaurentPoly t = LaurentPoly::monomial(1, 2);
    const LaurentPoly one = LaurentPoly::constant(1);
    CHECK(determinant({}) == one);
    CHECK(determinant({{t}}) == t);
    CHECK(determinant({{t, one}, {one, t}}) == t * t - one);
    CHECK(determinant({{LaurentPoly(), one}, {one, LaurentPoly()}}) == -one);
    CHECK(determinant({{one, one}, {one, one}}).is_zero());
}

TEST_CASE("Alexander polynomials of the corpus") {
    for (const CorpusEntry& e : read_corpus(corpus_path())) {
        REQUIRE(e.expected);
        const LaurentPoly det = alexander_det(parse_pd(e.pd));
        const auto coeffs = t_coefficients(det);
        REQUIRE(coeffs);
        CHECK(*coeffs == std::vector<BigInt>(e.expected->begin(), e.expected->end()));
    }
}

TEST_CASE("the determinant does not depend on the deleted adjacent regions") {
    const LinkDiagram d = corpus_diagram("10_66");
    const LaurentPoly det = alexander_det(d);
    for (const auto& pair : adjacent_region_pairs(d)) CHECK(dot_eq(alexander_det(d, pair), det));
}

TEST_CASE("non-adjacent regions are rejected") {
    const LinkDiagram d = corpus_diagram("figure-eight");
    const auto adjacent = adjacent_region_pairs(d);
    for (int a = 0; a < d.region_count(); ++a)
        for (int b = a + 1; b < d.region_count(); ++b) {
            const bool adj = std::find(adjacent.begin(), adjacent.end(), std::make_pair(a, b)) != adjacent.end();
            if (!adj) CHECK_THROWS(alexander_det(d, {a, b}));
        }
}

TEST_CASE("links have vanishing Alexander polynomial at one") {
    for (const std::vector<int>& cf : {std::vector<int>{2}, {4}, {2, 2, 2}, {3, 1, 3}}) {
        const LinkDiagram d = two_bridge(cf);
        if (d.components() == 2) CHECK(alexander_det(d).at_one() == 0);
        else CHECK(abs(alexander_det(d).at_one()) == 1);
    }
}

TEST_CASE("three-way agreement on every segment") {
    for (const CorpusEntry& e : read_corpus(corpus_path())) {
        const VerificationReport r = verify_alexander_agreement(parse_pd(e.pd));
        CHECK(r.determinant_consistent);
        CHECK(r.pass());
        CHECK(r.to_json().at("pass").get<bool>());
    }
}
