#include "knotquiver/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kq {

namespace {

int mod4(int s) { return ((s % 4) + 4) % 4; }

struct ArcEnds {
    std::vector<Endpoint> ends;
};

// Decide, for every (crossing, slot), whether the arc there leaves the crossing.
// Under-strands are fixed by the PD convention; over-strands follow by propagation
// (an arc leaves at exactly one of its two ends, a strand entering at k leaves at k+2).
std::vector<std::array<int, 4>> orient(const std::vector<std::array<int, 4>>& pd,
                                       const std::map<int, ArcEnds>& arcs) {
    const int n = static_cast<int>(pd.size());
    // -1 unknown, 0 incoming, 1 outgoing
    std::vector<std::array<int, 4>> out(n, {-1, -1, -1, -1});
    std::vector<Endpoint> stack;
    auto set = [&](Endpoint e, int v) {
        int& cur = out[e.crossing][e.slot];
        if (cur == -1) {
            cur = v;
            stack.push_back(e);
        } else if (cur != v) {
            throw std::invalid_argument("inconsistent orientation at arc " + std::to_string(pd[e.crossing][e.slot]));
        }
    };
    auto drain = [&]() {
        while (!stack.empty()) {
            Endpoint e = stack.back();
            stack.pop_back();
            const int v = out[e.crossing][e.slot];
            set({e.crossing, mod4(e.slot + 2)}, 1 - v);
            const auto& ends = arcs.at(pd[e.crossing][e.slot]).ends;
            const Endpoint other = ends[0] == e ? ends[1] : ends[0];
            set(other, 1 - v);
        }
    };
    for (int c = 0; c < n; ++c) {
        set({c, 0}, 0);
        set({c, 2}, 1);
    }
    drain();
    // Components that never pass under: orient so that labels increase along the strand
    // when the PD follows that habit, otherwise enter at the first occurrence.
    for (const auto& [label, ae] : arcs) {
        const Endpoint first = ae.ends[0];
        if (out[first.crossing][first.slot] != -1) continue;
        const Endpoint second = ae.ends[1];
        const int across = pd[second.crossing][mod4(second.slot + 2)];
        const bool forward = across == label + 1;
        set(first, forward ? 1 : 0);
        drain();
    }
    return out;
}

}  // namespace

const Segment& LinkDiagram::segment(int j) const {
    if (j < 1 || j > segment_count()) throw std::out_of_range("unknown segment id " + std::to_string(j));
    return segments_[j - 1];
}

bool LinkDiagram::is_tail(int j, int c, int slot) const {
    const Segment& s = segment(j);
    return s.tail.crossing == c && s.tail.slot == mod4(slot);
}

std::pair<int, int> LinkDiagram::sides(int j) const {
    const Segment& s = segment(j);
    return {corner(s.tail.crossing, s.tail.slot + 1), corner(s.tail.crossing, s.tail.slot)};
}

std::vector<int> LinkDiagram::region_segments(int r) const {
    std::vector<int> out;
    for (const auto& [j, side] : regions_.at(r).boundary) out.push_back(j);
    return out;
}

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& pd) {
    if (pd.empty()) throw std::invalid_argument("PD code has no crossings");
    LinkDiagram d;
    d.pd_ = pd;
    const int n = static_cast<int>(pd.size());
    std::map<int, ArcEnds> arcs;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (pd[c][s] <= 0) throw std::invalid_argument("arc labels must be positive");
            arcs[pd[c][s]].ends.push_back({c, s});
        }
    for (const auto& [label, ae] : arcs)
        if (ae.ends.size() != 2)
            throw std::invalid_argument("arc label " + std::to_string(label) + " used " +
                                        std::to_string(ae.ends.size()) + " times (expected 2)");

    const auto out = orient(pd, arcs);
    std::map<int, Endpoint> tail, head;
    for (const auto& [label, ae] : arcs) {
        const bool o0 = out[ae.ends[0].crossing][ae.ends[0].slot] == 1;
        const bool o1 = out[ae.ends[1].crossing][ae.ends[1].slot] == 1;
        if (o0 == o1) throw std::invalid_argument("arc " + std::to_string(label) + " is outgoing (or incoming) at both ends");
        tail[label] = o0 ? ae.ends[0] : ae.ends[1];
        head[label] = o0 ? ae.ends[1] : ae.ends[0];
    }

    // Number segments along each component, starting from its lowest unseen label.
    std::vector<int> order;
    std::map<int, int> component_of;
    std::set<int> seen;
    int comp = 0;
    for (const auto& [start, unused] : arcs) {
        if (seen.count(start)) continue;
        int a = start;
        while (!seen.count(a)) {
            seen.insert(a);
            order.push_back(a);
            component_of[a] = comp;
            const Endpoint h = head[a];
            a = pd[h.crossing][mod4(h.slot + 2)];
        }
        ++comp;
    }
    d.components_ = comp;
    for (std::size_t k = 0; k < order.size(); ++k) d.arc_to_segment_[order[k]] = static_cast<int>(k) + 1;

    d.crossings_.resize(n);
    for (int c = 0; c < n; ++c) {
        Crossing& x = d.crossings_[c];
        x.id = c;
        for (int s = 0; s < 4; ++s) {
            x.arc[s] = pd[c][s];
            x.segment[s] = d.arc_to_segment_[pd[c][s]];
            x.outgoing[s] = out[c][s] == 1;
        }
        x.sign = x.outgoing[1] ? 1 : -1;
    }
    d.segments_.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        Segment& s = d.segments_[k];
        const int a = order[k];
        s.id = static_cast<int>(k) + 1;
        s.arc_label = a;
        s.tail = tail[a];
        s.head = head[a];
        s.tail_passage = (s.tail.slot % 2 == 0) ? Passage::Under : Passage::Over;
        s.head_passage = (s.head.slot % 2 == 0) ? Passage::Under : Passage::Over;
        s.component = component_of[a];
    }
    d.recompute_regions();
    return d;
}

void LinkDiagram::recompute_regions() {
    regions_ = compute_regions(*this);
    corner_.assign(crossings_.size(), {-1, -1, -1, -1});
    for (const Region& r : regions_)
        for (const Endpoint& e : r.corners) corner_[e.crossing][e.slot] = r.id;
}

std::vector<Region> compute_regions(const LinkDiagram& d) {
    const int n = d.crossing_count();
    std::vector<std::array<int, 4>> owner(n, {-1, -1, -1, -1});
    std::vector<Region> regions;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (owner[c][s] != -1) continue;
            Region r;
            r.id = static_cast<int>(regions.size());
            // Arrive at crossing cc through slot ss with the face on the left, leave through
            // the next slot clockwise.
            int cc = c, ss = s;
            while (owner[cc][ss] == -1) {
                owner[cc][ss] = r.id;
                r.corners.push_back({cc, ss});
                const int t = mod4(ss - 1);
                const int j = d.crossing(cc).segment[t];
                const Segment& seg = d.segment(j);
                Endpoint next;
                if (seg.tail.crossing == cc && seg.tail.slot == t) {
                    r.boundary.emplace_back(j, Side::Left);
                    next = seg.head;
                } else {
                    r.boundary.emplace_back(j, Side::Right);
                    next = seg.tail;
                }
                cc = next.crossing;
                ss = next.slot;
            }
            regions.push_back(std::move(r));
        }
    // The unbounded face is a drawing choice; take the longest boundary, lowest id on ties.
    if (!regions.empty()) {
        auto it = std::max_element(regions.begin(), regions.end(), [](const Region& a, const Region& b) {
            return a.boundary.size() < b.boundary.size();
        });
        it->is_unbounded = true;
    }
    return regions;
}

ValidationReport validate(const LinkDiagram& d) {
    ValidationReport rep;
    const int n = d.crossing_count();
    for (const Segment& s : d.segments())
        if (s.tail.crossing == s.head.crossing) {
            rep.curl_free = false;
            rep.messages.push_back("curl: segment " + std::to_string(s.id) + " bounds a monogon at crossing " +
                                   std::to_string(s.tail.crossing));
        }
    for (const Region& r : d.regions())
        if (r.boundary.size() == 1 && rep.curl_free) {
            rep.curl_free = false;
            rep.messages.push_back("curl: monogon region " + std::to_string(r.id));
        }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const Segment& s : d.segments()) parent[find(s.tail.crossing)] = find(s.head.crossing);
    for (int c = 0; c < n; ++c)
        if (find(c) != find(0)) {
            rep.connected = false;
            rep.messages.push_back("diagram is disconnected");
            break;
        }
    if (d.region_count() != n + 2) {
        rep.euler_ok = false;
        rep.messages.push_back("region count " + std::to_string(d.region_count()) + " != crossings + 2 = " +
                               std::to_string(n + 2));
    }
    for (int c = 0; c < n; ++c) {
        std::set<int> rs;
        for (int s = 0; s < 4; ++s) rs.insert(d.corner(c, s));
        if (rs.size() < 4) rep.nugatory_crossings.push_back(c);
    }
    rep.messages.push_back("primality assumed, not checked");
    return rep;
}

nlohmann::json ValidationReport::to_json() const {
    return {{"valid", valid()},
            {"curl_free", curl_free},
            {"connected", connected},
            {"euler_ok", euler_ok},
            {"primality_checked", primality_checked},
            {"nugatory_crossings", nugatory_crossings},
            {"messages", messages}};
}

SegmentClass classify_segment(const LinkDiagram& d, int j) {
    const Segment& s = d.segment(j);
    if (s.tail_passage == Passage::Under && s.head_passage == Passage::Over) return SegmentClass::UnderToOver;
    if (s.tail_passage == Passage::Over && s.head_passage == Passage::Under) return SegmentClass::OverToUnder;
    return SegmentClass::Same;
}

std::vector<SegmentClass> segment_classes(const LinkDiagram& d) {
    std::vector<SegmentClass> out;
    for (int j = 1; j <= d.segment_count(); ++j) out.push_back(classify_segment(d, j));
    return out;
}

bool is_alternating(const LinkDiagram& d) {
    for (int j = 1; j <= d.segment_count(); ++j)
        if (classify_segment(d, j) == SegmentClass::Same) return false;
    return true;
}

const char* to_string(SegmentClass c) {
    switch (c) {
        case SegmentClass::UnderToOver: return "UnderToOver";
        case SegmentClass::OverToUnder: return "OverToUnder";
        case SegmentClass::Same: return "Same";
    }
    return "?";
}

std::string LinkDiagram::canonical_pd() const {
    std::vector<std::array<int, 4>> rows;
    for (const Crossing& x : crossings_) rows.push_back(x.segment);
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (const auto& r : rows) os << "X(" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << ")";
    return os.str();
}

nlohmann::json LinkDiagram::to_json() const {
    nlohmann::json j;
    nlohmann::json xs = nlohmann::json::array();
    for (const Crossing& x : crossings_)
        xs.push_back({{"id", x.id}, {"segments", x.segment}, {"arcs", x.arc}, {"sign", x.sign}});
    nlohmann::json ss = nlohmann::json::array();
    for (const Segment& s : segments_)
        ss.push_back({{"id", s.id},
                      {"arc", s.arc_label},
                      {"component", s.component},
                      {"tail", {s.tail.crossing, s.tail.slot}},
                      {"head", {s.head.crossing, s.head.slot}},
                      {"class", to_string(classify_segment(*this, s.id))}});
    nlohmann::json rs = nlohmann::json::array();
    for (const Region& r : regions_) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& [seg, side] : r.boundary) b.push_back({seg, side == Side::Left ? "L" : "R"});
        rs.push_back({{"id", r.id}, {"boundary", b}, {"unbounded", r.is_unbounded}});
    }
    nlohmann::json amap = nlohmann::json::object();
    for (const auto& [a, s] : arc_to_segment_) amap[std::to_string(a)] = s;
    j["crossings"] = xs;
    j["segments"] = ss;
    j["regions"] = rs;
    j["components"] = components_;
    j["arc_to_segment"] = amap;
    return j;
}

std::vector<std::array<int, 4>> parse_pd_code(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed JSON diagram: ") + e.what());
        }
        const nlohmann::json& rows = j.is_object() ? j.at("crossings") : j;
        std::vector<std::array<int, 4>> pd;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 4) throw std::invalid_argument("malformed: crossing needs 4 arcs");
            std::array<int, 4> x{};
            for (int s = 0; s < 4; ++s) {
                if (!row[s].is_number_integer()) throw std::invalid_argument("malformed: arc labels must be integers");
                x[s] = row[s].get<int>();
            }
            pd.push_back(x);
        }
        return pd;
    }
    std::vector<std::array<int, 4>> pd;
    static const std::regex term(R"(X\s*[\(\[]([^\)\]]*)[\)\]])");
    std::string rest;
    std::size_t last = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
        rest += text.substr(last, it->position() - last);
        last = it->position() + it->length();
        std::string body = (*it)[1];
        std::vector<int> vals;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                throw std::invalid_argument("malformed: bad arc label '" + tok + "'");
            vals.push_back(std::stoi(tok));
        }
        if (vals.size() != 4) throw std::invalid_argument("malformed: crossing needs 4 arcs, got " + std::to_string(vals.size()));
        pd.push_back({vals[0], vals[1], vals[2], vals[3]});
    }
    rest += text.substr(last);
    // Allow the Mathematica-style wrapper PD[...] and separating commas.
    std::string leftover;
    for (char ch : rest)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') leftover += ch;
    if (leftover != "" && leftover != "PD[]" && leftover != "PD()")
        throw std::invalid_argument("malformed PD code near '" + leftover.substr(0, 20) + "'");
    if (pd.empty()) throw std::invalid_argument("malformed: no crossings found");
    return pd;
}

LinkDiagram parse_pd(const std::string& text) { return LinkDiagram::from_pd(parse_pd_code(text)); }

std::vector<int> parse_continued_fraction(const std::string& text) {
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    std::istringstream ss(cleaned);
    std::vector<int> cf;
    std::string tok;
    while (ss >> tok) {
        if (tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
            std::stoi(tok) == 0)
            throw std::invalid_argument("continued fraction entries must be positive integers");
        cf.push_back(std::stoi(tok));
    }
    if (cf.empty()) throw std::invalid_argument("empty continued fraction");
    return cf;
}

std::pair<BigInt, BigInt> continued_fraction_value(const std::vector<int>& cf) {
    if (cf.empty()) throw std::invalid_argument("empty continued fraction");
    BigInt num = cf.back(), den = 1;
    for (int k = static_cast<int>(cf.size()) - 2; k >= 0; --k) {
        BigInt nn = BigInt(cf[k]) * num + den;
        den = num;
        num = nn;
    }
    return {num, den};
}

namespace {

// Plat closure of a 4-strand braid, read bottom to top. Each letter is (k, exponent sign) acting on
// positions k, k+1 (0-based). Caps join positions (0,1) and (2,3) at both ends.
std::vector<std::array<int, 4>> plat_closure_pd(const std::vector<std::pair<int, int>>& word) {
    // Half-edges are (crossing, geometric corner) with corners counterclockwise BL=0, BR=1, TR=2, TL=3.
    const int n = static_cast<int>(word.size());
    std::vector<int> parent;
    auto fresh = [&]() {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    };
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<std::array<int, 4>> edge_at(n);
    const int bottom_left = fresh(), bottom_right = fresh();
    std::array<int, 4> dangling{bottom_left, bottom_left, bottom_right, bottom_right};
    for (int c = 0; c < n; ++c) {
        const int k = word[c].first;
        edge_at[c][0] = dangling[k];
        edge_at[c][1] = dangling[k + 1];
        const int tl = fresh(), tr = fresh();
        edge_at[c][3] = tl;
        edge_at[c][2] = tr;
        dangling[k] = tl;
        dangling[k + 1] = tr;
    }
    parent[find(dangling[0])] = find(dangling[1]);
    parent[find(dangling[2])] = find(dangling[3]);

    // Strands pass BL<->TR and BR<->TL. Positive letters put BL->TR over.
    std::map<int, std::vector<Endpoint>> ends;
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < 4; ++g) ends[find(edge_at[c][g])].push_back({c, g});
    for (const auto& [e, v] : ends)
        if (v.size() != 2) throw std::logic_error("plat closure produced a free arc");

    // Walk each component and label arcs in traversal order.
    std::map<int, int> label;
    std::vector<std::array<bool, 4>> out_end(n);
    int next_label = 1;
    std::vector<std::array<bool, 4>> visited(n);
    for (int c0 = 0; c0 < n; ++c0)
        for (int g0 : {0, 1}) {
            if (visited[c0][g0]) continue;
            int c = c0, g = g0;
            // enter crossing c at corner g
            while (!visited[c][g]) {
                visited[c][g] = true;
                out_end[c][g] = false;
                const int go = (g + 2) % 4;
                visited[c][go] = true;
                out_end[c][go] = true;
                const int e = find(edge_at[c][go]);
                label[e] = next_label++;
                const auto& v = ends[e];
                const Endpoint other = (v[0].crossing == c && v[0].slot == go) ? v[1] : v[0];
                c = other.crossing;
                g = other.slot;
            }
        }

    std::vector<std::array<int, 4>> pd(n);
    for (int c = 0; c < n; ++c) {
        const bool positive = word[c].second > 0;
        // over strand corners
        const int over_a = positive ? 0 : 1;
        const int under_in = [&]() {
            for (int g = 0; g < 4; ++g)
                if (g % 2 != over_a % 2 && !out_end[c][g]) return g;
            throw std::logic_error("no incoming under end");
        }();
        for (int s = 0; s < 4; ++s) pd[c][s] = label[find(edge_at[c][(under_in + s) % 4])];
    }
    return pd;
}

}  // namespace

LinkDiagram two_bridge(const std::vector<int>& cf_in) {
    if (cf_in.empty()) throw std::invalid_argument("empty continued fraction");
    for (int a : cf_in)
        if (a < 1) throw std::invalid_argument("continued fraction entries must be positive");
    // The plat form needs an odd number of twist regions; rewrite without changing the value.
    std::vector<int> cf = cf_in;
    if (cf.size() % 2 == 0) {
        if (cf.back() > 1) {
            cf.back() -= 1;
            cf.push_back(1);
        } else {
            cf.pop_back();
            cf.back() += 1;
        }
    }
    std::vector<std::pair<int, int>> word;
    for (std::size_t k = 0; k < cf.size(); ++k)
        for (int r = 0; r < cf[k]; ++r) {
            if (k % 2 == 0) word.emplace_back(1, 1);
            else word.emplace_back(0, -1);
        }
    LinkDiagram d = LinkDiagram::from_pd(plat_closure_pd(word));
    const ValidationReport rep = validate(d);
    if (!rep.valid()) {
        std::string why;
        for (const auto& m : rep.messages) why += m + "; ";
        throw std::invalid_argument("continued fraction gives an invalid diagram: " + why);
    }
    if (!is_alternating(d)) throw std::logic_error("two-bridge construction is not alternating");
    return d;
}

}  // namespace kq
