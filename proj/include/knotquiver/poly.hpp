#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kq {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in a single variable s, with the convention s^2 = t.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const BigInt& c);
    static LaurentPoly monomial(const BigInt& c, int s_exp);
    // Builds sum c_k t^(first_t_exp + k).
    static LaurentPoly from_t_coeffs(const std::vector<long long>& coeffs, int first_t_exp = 0);

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    BigInt coeff(int s_exp) const;
    bool all_exponents_even() const;

    // Value at s = 1 (so t = 1).
    BigInt at_one() const;
    // s -> s^{-1}
    LaurentPoly reversed() const;
    LaurentPoly shifted(int s_exp) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact division; throws std::domain_error when the divisor does not divide.
    LaurentPoly exact_div(const LaurentPoly& divisor) const;

    // "1 - 3t + t^2" style when every exponent is even, otherwise in s.
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    void add_term(int e, const BigInt& c);
    std::map<int, BigInt> terms_;
};

// Representative with minimal exponent 0 and positive constant term.
LaurentPoly normalize(const LaurentPoly& p);
// Equality up to a signed power of t and up to t <-> t^{-1}.
bool dot_eq(const LaurentPoly& p, const LaurentPoly& q);
// Coefficients in t of normalize(p), lowest degree first; nullopt if odd s-exponents remain.
std::optional<std::vector<BigInt>> t_coefficients(const LaurentPoly& p);
// Central coefficient of the symmetric form a0 + a1(t^-1 + t) + ...; nullopt if breadth in t is odd
// or the polynomial is not symmetric.
std::optional<BigInt> central_coefficient(const LaurentPoly& p);

using Exponents = std::vector<int>;

// Polynomial in y_1..y_m with nonnegative exponents. Index k of an exponent vector is y_{k+1}.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    BigInt coeff(const Exponents& e) const;
    BigInt constant_term() const;
    bool all_coefficients_one() const;
    int total_degree() const;
    std::vector<Exponents> top_monomials() const;

    void add_term(const Exponents& e, const BigInt& c = 1);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Terms ordered by total degree, then lexicographically by reversed exponent;
    // inside a monomial variables appear by increasing index: "1 + y2 + y2*y5^2".
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    int nvars_ = 0;
    std::map<Exponents, BigInt> terms_;
};

// Parses TeX-ish sums such as "1 + y_2 + y_{16}^2 y_3" (the notation used in the literature).
// Whitespace and "\\" line breaks are ignored; coefficients must be omitted (all 1) or integers.
MultiPoly parse_multipoly(const std::string& text, int nvars);
std::string monomial_text(const Exponents& e);

// Substitution value of y_j in Z[s^{+-1}].
enum class SegmentClass { UnderToOver, OverToUnder, Same };
LaurentPoly y_specialization(SegmentClass c);
LaurentPoly specialize(const MultiPoly& f, const std::vector<SegmentClass>& classes);

// F evaluated at every y_j = -1.
BigInt alternating_sum(const MultiPoly& f);
MultiPoly polynomial_from_vectors(const std::vector<Exponents>& vectors, int nvars);

}  // namespace kq
