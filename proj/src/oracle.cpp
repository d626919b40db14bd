#include "knotquiver/oracle.hpp"

#include <set>
#include <stdexcept>

#include "knotquiver/states.hpp"

namespace kq {

AlexanderMatrix alexander_matrix(const LinkDiagram& d) {
    AlexanderMatrix m;
    m.rows = d.crossing_count();
    m.cols = d.region_count();
    m.entries.assign(m.rows, std::vector<LaurentPoly>(m.cols));
    const std::array<LaurentPoly, 4> corner_entry = {LaurentPoly::monomial(1, 2), LaurentPoly::constant(-1),
                                                     LaurentPoly::constant(1), LaurentPoly::monomial(-1, 2)};
    for (int c = 0; c < m.rows; ++c)
        for (int s = 0; s < 4; ++s) m.entries[c][d.corner(c, s)] += corner_entry[s];
    return m;
}

// Fraction-free elimination: after step k every remaining entry is a k x k minor, so the division
// by the previous pivot is exact.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::constant(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    LaurentPoly prev = LaurentPoly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return LaurentPoly();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<std::pair<int, int>> adjacent_region_pairs(const LinkDiagram& d) {
    std::vector<std::pair<int, int>> out;
    std::set<std::pair<int, int>> seen;
    for (int j = 1; j <= d.segment_count(); ++j) {
        auto [a, b] = d.sides(j);
        if (a > b) std::swap(a, b);
        if (a != b && seen.insert({a, b}).second) out.push_back({a, b});
    }
    return out;
}

LaurentPoly alexander_det(const LinkDiagram& d, std::pair<int, int> deleted) {
    auto [a, b] = deleted;
    if (a > b) std::swap(a, b);
    bool adjacent = false;
    for (const auto& p : adjacent_region_pairs(d)) adjacent = adjacent || p == std::make_pair(a, b);
    if (!adjacent) throw std::invalid_argument("deleted regions do not share a segment");
    AlexanderMatrix full = alexander_matrix(d);
    std::vector<std::vector<LaurentPoly>> minor;
    for (const auto& row : full.entries) {
        std::vector<LaurentPoly> r;
        for (int c = 0; c < full.cols; ++c)
            if (c != a && c != b) r.push_back(row[c]);
        minor.push_back(r);
    }
    return determinant(minor);
}

LaurentPoly alexander_det(const LinkDiagram& d) { return alexander_det(d, d.sides(1)); }

bool VerificationReport::pass() const {
    if (!determinant_consistent) return false;
    for (const SegmentCheck& s : segments)
        if (!s.pass()) return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["determinant"] = normalize(determinant).to_text();
    j["determinant_consistent"] = determinant_consistent;
    nlohmann::json segs = nlohmann::json::array();
    for (const SegmentCheck& s : segments)
        segs.push_back({{"segment", s.segment},
                        {"specialization", normalize(s.specialization).to_text()},
                        {"state_sum", normalize(s.state_sum).to_text()},
                        {"pass", s.pass()}});
    j["segments"] = segs;
    j["pass"] = pass();
    return j;
}

VerificationReport verify_alexander_agreement(const LinkDiagram& d, int pairs) {
    VerificationReport report;
    const auto candidates = adjacent_region_pairs(d);
    for (int k = 0; k < pairs && k < static_cast<int>(candidates.size()); ++k) {
        const LaurentPoly det = alexander_det(d, candidates[k]);
        if (k == 0) report.determinant = det;
        else if (!dot_eq(det, report.determinant)) report.determinant_consistent = false;
        report.determinant_pairs.push_back({candidates[k], det});
    }
    const std::vector<SegmentClass> classes = segment_classes(d);
    for (int i = 1; i <= d.segment_count(); ++i) {
        const StateLattice lat = build_lattice(d, i);
        SegmentCheck check;
        check.segment = i;
        check.specialization = specialize(f_polynomial(lat), classes);
        check.state_sum = state_sum_alexander(d, lat);
        check.spec_matches = dot_eq(check.specialization, report.determinant);
        check.state_sum_matches = dot_eq(check.state_sum, report.determinant);
        report.segments.push_back(check);
    }
    return report;
}

}  // namespace kq
