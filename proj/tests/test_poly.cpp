#include <doctest.h>

#include <random>

#include "knotquiver/poly.hpp"

using namespace kq;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-6, 6), coeff(-9, 9), count(0, 5);
    LaurentPoly p;
    for (int k = count(rng); k > 0; --k) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("ring laws hold on random Laurent polynomials") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly::constant(1) == a);
        if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("exact division rejects non-divisors") {
    const LaurentPoly p = LaurentPoly::from_t_coeffs({1, 1});
    const LaurentPoly q = LaurentPoly::from_t_coeffs({1, 0, 1});
    CHECK_THROWS_AS(q.exact_div(p), std::domain_error);
    CHECK_THROWS(p.exact_div(LaurentPoly()));
}

TEST_CASE("normalization and equality up to units") {
    const LaurentPoly fig8 = LaurentPoly::from_t_coeffs({-1, 3, -1}, -1);
    CHECK(normalize(fig8) == LaurentPoly::from_t_coeffs({1, -3, 1}));
    CHECK(dot_eq(fig8, LaurentPoly::from_t_coeffs({1, -3, 1}, 5)));
    CHECK_FALSE(dot_eq(fig8, LaurentPoly::from_t_coeffs({1, -1, 1})));
    CHECK(dot_eq(LaurentPoly::from_t_coeffs({1, 2}), LaurentPoly::from_t_coeffs({2, 1})));
    CHECK(normalize(LaurentPoly()).is_zero());
    CHECK(LaurentPoly().to_text() == "0");
    CHECK(normalize(fig8).to_text() == "1 - 3t + t^2");
}

TEST_CASE("coefficients, central coefficient and value at one") {
    const LaurentPoly p = LaurentPoly::from_t_coeffs({3, -9, 16, -19, 16, -9, 3}, -3);
    const auto coeffs = t_coefficients(p);
    REQUIRE(coeffs);
    CHECK(coeffs->size() == 7);
    CHECK((*coeffs)[3] == -19);
    CHECK(central_coefficient(p) == BigInt(-19));
    CHECK(p.at_one() == 1);
    CHECK_FALSE(central_coefficient(LaurentPoly::from_t_coeffs({1, 2})));
    CHECK_FALSE(t_coefficients(LaurentPoly::monomial(1, 0) + LaurentPoly::monomial(1, 1)));
}

TEST_CASE("multivariate polynomials parse and print") {
    const MultiPoly f = parse_multipoly("1 + y_2 + y_{16}^2 y_3 \\\\ + y_2", 16);
    CHECK(f.term_count() == 3);
    CHECK(f.coeff(Exponents{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == 2);
    CHECK(f.total_degree() == 3);
    CHECK(f.constant_term() == 1);
    CHECK_FALSE(f.all_coefficients_one());
    CHECK(f.to_text() == "1 + 2*y2 + y3*y16^2");
    CHECK_THROWS(parse_multipoly("1 + x_2", 4));
    CHECK_THROWS(parse_multipoly("y_9", 4));
}

TEST_CASE("specialization substitutes -t or -1/t") {
    MultiPoly f(2);
    f.add_term({0, 0});
    f.add_term({1, 0});
    f.add_term({1, 1});
    const std::vector<SegmentClass> classes = {SegmentClass::UnderToOver, SegmentClass::OverToUnder};
    const LaurentPoly y1 = y_specialization(classes[0]);
    const LaurentPoly y2 = y_specialization(classes[1]);
    CHECK(y1 * y2 == LaurentPoly::constant(1));
    CHECK(y_specialization(SegmentClass::Same) == LaurentPoly::constant(-1));
    CHECK(specialize(f, classes) == LaurentPoly::constant(1) + y1 + y1 * y2);
    CHECK(alternating_sum(f) == 1);
}

TEST_CASE("polynomial from dimension vectors") {
    const MultiPoly f = polynomial_from_vectors({{0, 0}, {1, 0}, {1, 2}}, 2);
    CHECK(f.term_count() == 3);
    CHECK(f.all_coefficients_one());
    REQUIRE(f.top_monomials().size() == 1);
    CHECK(monomial_text(f.top_monomials().front()) == "y1*y2^2");
}
