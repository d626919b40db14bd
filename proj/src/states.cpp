#include "knotquiver/states.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace kq {

namespace {

void check_segment(const LinkDiagram& d, int i) {
    if (i < 1 || i > d.segment_count())
        throw std::invalid_argument("segment " + std::to_string(i) + " out of range 1.." + std::to_string(d.segment_count()));
}

}  // namespace

std::vector<KauffmanState> enumerate_states(const LinkDiagram& d, int i) {
    check_segment(d, i);
    const int n = d.crossing_count();
    const auto [left, right] = d.sides(i);
    std::vector<std::vector<int>> options(n);
    std::vector<std::vector<int>> crossings_at(d.region_count());
    for (int c = 0; c < n; ++c) {
        std::set<int> rs;
        for (int s = 0; s < 4; ++s) rs.insert(d.corner(c, s));
        for (int r : rs) {
            crossings_at[r].push_back(c);
            if (r != left && r != right) options[c].push_back(r);
        }
    }
    std::vector<KauffmanState> out;
    std::vector<bool> used(d.region_count(), false);
    used[left] = used[right] = true;
    std::vector<int> marker(n, -1);
    // A free region must keep at least one unassigned incident crossing.
    auto feasible = [&](int next) {
        for (int r = 0; r < d.region_count(); ++r) {
            if (used[r]) continue;
            bool ok = false;
            for (int c : crossings_at[r])
                if (c >= next) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int c) -> void {
        if (c == n) {
            out.push_back({i, marker});
            return;
        }
        for (int r : options[c]) {
            if (used[r]) continue;
            used[r] = true;
            marker[c] = r;
            if (feasible(c + 1)) self(self, c + 1);
            used[r] = false;
        }
        marker[c] = -1;
    };
    if (d.region_count() == n + 2 && left != right) rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Transposition> transpositions(const LinkDiagram& d, const KauffmanState& s) {
    std::vector<Transposition> out;
    for (int j = 1; j <= d.segment_count(); ++j) {
        const Segment& seg = d.segment(j);
        const int x = seg.tail.crossing, y = seg.head.crossing;
        if (x == y) continue;
        const auto [r1, r2] = d.sides(j);
        if (s.marker[x] == r2 && s.marker[y] == r1) {
            Transposition t{j, MoveDirection::Up, s};
            t.result.marker[x] = r1;
            t.result.marker[y] = r2;
            out.push_back(t);
        } else if (s.marker[x] == r1 && s.marker[y] == r2) {
            Transposition t{j, MoveDirection::Down, s};
            t.result.marker[x] = r2;
            t.result.marker[y] = r1;
            out.push_back(t);
        }
    }
    return out;
}

int StateLattice::index_of(const KauffmanState& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || !(*it == s)) return -1;
    return static_cast<int>(it - states.begin());
}

StateLattice build_lattice(const LinkDiagram& d, int i) {
    StateLattice lat;
    lat.base_segment = i;
    lat.segment_count = d.segment_count();
    lat.states = enumerate_states(d, i);
    const int count = static_cast<int>(lat.states.size());
    if (count == 0) throw std::logic_error("no Kauffman states (diagram is not prime or not connected)");
    std::vector<std::vector<std::pair<int, int>>> up(count);  // (segment, upper)
    std::vector<int> indegree(count, 0);
    for (int k = 0; k < count; ++k)
        for (const Transposition& t : transpositions(d, lat.states[k])) {
            if (t.direction != MoveDirection::Up) continue;
            const int u = lat.index_of(t.result);
            if (u < 0) throw std::logic_error("transposition leaves the set of states");
            up[k].push_back({t.segment, u});
            lat.covers.push_back({k, u, t.segment});
            ++indegree[u];
        }
    for (int k = 0; k < count; ++k) {
        if (indegree[k] == 0) {
            if (lat.minimal != -1) throw std::logic_error("state poset has several minimal elements");
            lat.minimal = k;
        }
        if (up[k].empty()) {
            if (lat.maximal != -1) throw std::logic_error("state poset has several maximal elements");
            lat.maximal = k;
        }
    }
    if (lat.minimal == -1 || lat.maximal == -1) throw std::logic_error("state poset has no minimum or maximum");

    lat.heights.assign(count, {});
    lat.paths.assign(count, {});
    lat.alternate_paths.assign(count, {});
    std::vector<bool> seen(count, false);
    lat.heights[lat.minimal].assign(d.segment_count(), 0);
    seen[lat.minimal] = true;
    std::deque<int> queue{lat.minimal};
    while (!queue.empty()) {
        const int k = queue.front();
        queue.pop_front();
        for (auto [j, u] : up[k]) {
            std::vector<int> h = lat.heights[k];
            ++h[j - 1];
            std::vector<int> path = lat.paths[k];
            path.push_back(j);
            if (seen[u]) {
                if (lat.heights[u] != h) throw std::logic_error("height vector depends on the path");
                if (lat.alternate_paths[u].empty() && path != lat.paths[u]) lat.alternate_paths[u] = path;
                continue;
            }
            seen[u] = true;
            lat.heights[u] = h;
            lat.paths[u] = path;
            queue.push_back(u);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::logic_error("some states are not above the minimal state");
    return lat;
}

nlohmann::json StateLattice::to_json() const {
    nlohmann::json j;
    j["base_segment"] = base_segment;
    nlohmann::json ss = nlohmann::json::array();
    for (std::size_t k = 0; k < states.size(); ++k) {
        nlohmann::json markers = nlohmann::json::object();
        for (std::size_t c = 0; c < states[k].marker.size(); ++c) markers[std::to_string(c)] = states[k].marker[c];
        ss.push_back({{"index", k}, {"markers", markers}, {"height", heights[k]}});
    }
    j["states"] = ss;
    nlohmann::json cs = nlohmann::json::array();
    for (const Cover& c : covers) cs.push_back({{"lower", c.lower}, {"upper", c.upper}, {"segment", c.segment}});
    j["covers"] = cs;
    j["minimal"] = minimal;
    j["maximal"] = maximal;
    return j;
}

// Each crossing has a bottom region between its two incoming strands and a top region between its
// two outgoing strands; the two side regions carry weight 1. A positive crossing puts W at the
// bottom and B at the top, a negative crossing the reverse. The sign is carried by the bottom
// marker: counting B markers instead does not flip across transpositions whose ratio is B^2 or W^2.
StateWeight marker_weight(const LinkDiagram& d, int crossing, int region) {
    const Crossing& x = d.crossing(crossing);
    const int bottom = d.corner(crossing, x.sign > 0 ? 0 : 1);
    const int top = d.corner(crossing, x.sign > 0 ? 2 : 3);
    StateWeight w;
    if (region != bottom && region != top) return w;
    if ((region == bottom) == (x.sign > 0)) w.w_exp = 1;
    else w.b_exp = 1;
    if (region == bottom) w.sigma = -1;
    return w;
}

StateWeight state_weight(const LinkDiagram& d, const KauffmanState& s) {
    StateWeight total;
    for (std::size_t c = 0; c < s.marker.size(); ++c) {
        const StateWeight w = marker_weight(d, static_cast<int>(c), s.marker[c]);
        total.w_exp += w.w_exp;
        total.b_exp += w.b_exp;
        total.sigma *= w.sigma;
    }
    return total;
}

LaurentPoly state_sum_alexander(const LinkDiagram& d, const StateLattice& lat) {
    LaurentPoly sum;
    for (const KauffmanState& s : lat.states) {
        const StateWeight w = state_weight(d, s);
        sum += LaurentPoly::monomial(w.sigma, w.s_exp());
    }
    return sum;
}

LaurentPoly state_sum_alexander(const LinkDiagram& d, int i) {
    LaurentPoly sum;
    for (const KauffmanState& s : enumerate_states(d, i)) {
        const StateWeight w = state_weight(d, s);
        sum += LaurentPoly::monomial(w.sigma, w.s_exp());
    }
    return sum;
}

void check_weight_invariants(const LinkDiagram& d, const StateLattice& lat) {
    std::vector<StateWeight> ws;
    for (const KauffmanState& s : lat.states) ws.push_back(state_weight(d, s));
    const std::vector<SegmentClass> classes = segment_classes(d);
    for (const Cover& c : lat.covers) {
        const StateWeight& lo = ws[c.lower];
        const StateWeight& hi = ws[c.upper];
        if (lo.sigma != -hi.sigma) throw std::logic_error("sign does not flip across a transposition");
        const LaurentPoly ratio = LaurentPoly::monomial(-1, hi.s_exp() - lo.s_exp());
        if (ratio != y_specialization(classes[c.segment - 1]))
            throw std::logic_error("weight ratio at segment " + std::to_string(c.segment) + " differs from -y_j");
    }
}

MultiPoly f_polynomial(const StateLattice& lat) {
    std::vector<Exponents> vs(lat.heights.begin(), lat.heights.end());
    return polynomial_from_vectors(vs, lat.segment_count);
}

}  // namespace kq
