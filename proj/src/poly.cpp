#include "knotquiver/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kq {

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, int s_exp) {
    LaurentPoly p;
    p.add_term(s_exp, c);
    return p;
}

LaurentPoly LaurentPoly::from_t_coeffs(const std::vector<long long>& coeffs, int first_t_exp) {
    LaurentPoly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(2 * (first_t_exp + static_cast<int>(k)), coeffs[k]);
    return p;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponent range");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponent range");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int s_exp) const {
    auto it = terms_.find(s_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::all_exponents_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

BigInt LaurentPoly::at_one() const {
    BigInt v = 0;
    for (const auto& [e, c] : terms_) v += c;
    return v;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int s_exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s_exp, c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exp();
    const BigInt& dc = divisor.terms_.rbegin()->second;
    const int dspan = dlead - divisor.min_exp();
    while (!rem.is_zero()) {
        if (rem.max_exp() - rem.min_exp() < dspan) throw std::domain_error("inexact polynomial division");
        const int e = rem.max_exp();
        const BigInt& c = rem.terms_.rbegin()->second;
        if (c % dc != 0) throw std::domain_error("inexact polynomial division");
        LaurentPoly q = monomial(c / dc, e - dlead);
        quot += q;
        rem -= q * divisor;
    }
    return quot;
}

namespace {

std::string power_text(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    const bool in_t = all_exponents_even();
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int ve = in_t ? e / 2 : e;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const std::string var = power_text(in_t ? "t" : "s", ve);
        if (var.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << var;
        }
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [e, c] : terms_) j.push_back({{"s_exp", e}, {"coef", c.str()}});
    return j;
}

LaurentPoly normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r = p.shifted(-p.min_exp());
    if (r.coeff(0) < 0) r = -r;
    return r;
}

bool dot_eq(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    const LaurentPoly np = normalize(p);
    return np == normalize(q) || np == normalize(q.reversed());
}

std::optional<std::vector<BigInt>> t_coefficients(const LaurentPoly& p) {
    if (p.is_zero()) return std::vector<BigInt>{};
    const LaurentPoly n = normalize(p);
    if (!n.all_exponents_even()) return std::nullopt;
    std::vector<BigInt> out(n.max_exp() / 2 + 1);
    for (const auto& [e, c] : n.terms()) out[e / 2] = c;
    return out;
}

std::optional<BigInt> central_coefficient(const LaurentPoly& p) {
    auto coeffs = t_coefficients(p);
    if (!coeffs || coeffs->empty()) return std::nullopt;
    const auto& c = *coeffs;
    if (c.size() % 2 == 0) return std::nullopt;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != c[c.size() - 1 - k]) return std::nullopt;
    return c[c.size() / 2];
}

BigInt MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::constant_term() const { return coeff(Exponents(nvars_, 0)); }

bool MultiPoly::all_coefficients_one() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

static int degree_of(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
    return best;
}

std::vector<Exponents> MultiPoly::top_monomials() const {
    std::vector<Exponents> out;
    const int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (degree_of(e) == d) out.push_back(e);
    return out;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has wrong length");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("negative exponent in polynomial");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

std::string monomial_text(const Exponents& e) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "y" + std::to_string(k + 1);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

namespace {

// Ordered by degree first so the text reads like the hand-written listings.
std::vector<std::pair<Exponents, BigInt>> display_order(const std::map<Exponents, BigInt>& terms) {
    std::vector<std::pair<Exponents, BigInt>> v(terms.begin(), terms.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        const int da = degree_of(a.first), db = degree_of(b.first);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
    });
    return v;
}

}  // namespace

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : display_order(terms_)) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const std::string m = monomial_text(e);
        if (m == "1") os << mag;
        else if (mag == 1) os << m;
        else os << mag << "*" << m;
    }
    return os.str();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : display_order(terms_)) terms.push_back({{"exp", e}, {"coef", c.str()}});
    return {{"nvars", nvars_}, {"terms", terms}};
}

MultiPoly parse_multipoly(const std::string& text, int nvars) {
    std::string s;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char ch = text[k];
        if (ch == '\\' && k + 1 < text.size() && text[k + 1] == '\\') {
            ++k;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') continue;
        s += ch;
    }
    MultiPoly p(nvars);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + why);
    };
    auto read_int = [&]() {
        if (pos < s.size() && s[pos] == '{') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start || pos >= s.size() || s[pos] != '}') fail("bad braced integer");
            int v = std::stoi(s.substr(start, pos - start));
            ++pos;
            return v;
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    };
    if (s.empty()) fail("empty input");
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        BigInt coef = 1;
        bool any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef = read_int();
            any = true;
        }
        Exponents e(nvars, 0);
        while (pos < s.size() && s[pos] == 'y') {
            ++pos;
            if (pos < s.size() && s[pos] == '_') ++pos;
            int var = read_int();
            if (var < 1 || var > nvars) fail("variable index out of range");
            int ex = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                ex = read_int();
            }
            e[var - 1] += ex;
            any = true;
        }
        if (!any) fail("empty term");
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail(std::string("unexpected character '") + s[pos] + "'");
        p.add_term(e, sign * coef);
    }
    return p;
}

LaurentPoly y_specialization(SegmentClass c) {
    switch (c) {
        case SegmentClass::UnderToOver: return LaurentPoly::monomial(-1, 2);
        case SegmentClass::OverToUnder: return LaurentPoly::monomial(-1, -2);
        case SegmentClass::Same: return LaurentPoly::constant(-1);
    }
    throw std::logic_error("unknown segment class");
}

LaurentPoly specialize(const MultiPoly& f, const std::vector<SegmentClass>& classes) {
    if (static_cast<int>(classes.size()) < f.nvars()) throw std::invalid_argument("segment classes do not cover all variables");
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        // every y_j specializes to -s^k, so a monomial is a signed power of s
        int s_exp = 0;
        int sign_count = 0;
        for (int k = 0; k < f.nvars(); ++k) {
            if (e[k] == 0) continue;
            const int unit = classes[k] == SegmentClass::UnderToOver ? 2 : classes[k] == SegmentClass::OverToUnder ? -2 : 0;
            s_exp += unit * e[k];
            sign_count += e[k];
        }
        out += LaurentPoly::monomial(sign_count % 2 ? BigInt(-c) : c, s_exp);
    }
    return out;
}

BigInt alternating_sum(const MultiPoly& f) {
    BigInt v = 0;
    for (const auto& [e, c] : f.terms()) v += degree_of(e) % 2 ? BigInt(-c) : c;
    return v;
}

MultiPoly polynomial_from_vectors(const std::vector<Exponents>& vectors, int nvars) {
    MultiPoly p(nvars);
    for (const auto& v : vectors) p.add_term(v, 1);
    return p;
}

}  // namespace kq
