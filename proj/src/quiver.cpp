#include "knotquiver/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kq {

std::vector<int> Quiver::out_arrows(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows)
        if (a.source == v) out.push_back(a.id);
    return out;
}

std::vector<int> Quiver::in_arrows(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows)
        if (a.target == v) out.push_back(a.id);
    return out;
}

std::vector<const CycleTerm*> Potential::plus() const {
    std::vector<const CycleTerm*> out;
    for (const CycleTerm& t : terms)
        if (t.sign > 0) out.push_back(&t);
    return out;
}

std::vector<const CycleTerm*> Potential::minus() const {
    std::vector<const CycleTerm*> out;
    for (const CycleTerm& t : terms)
        if (t.sign < 0) out.push_back(&t);
    return out;
}

Quiver build_quiver(const LinkDiagram& d) {
    Quiver q;
    q.vertex_count = d.segment_count();
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) {
            Arrow a;
            a.id = 4 * c + s;
            a.source = d.segment_at(c, s);
            a.target = d.segment_at(c, s - 1);
            a.crossing = c;
            a.region = d.corner(c, s);
            a.slot = s;
            q.arrows.push_back(a);
        }
    return q;
}

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
    if (cycle.empty()) return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::vector<int> out(it, cycle.end());
    out.insert(out.end(), cycle.begin(), it);
    return out;
}

int next_in_region(const Quiver& q, int arrow) {
    const Arrow& a = q.arrows.at(arrow);
    int found = -1;
    for (const Arrow& b : q.arrows) {
        if (b.source != a.target || b.region != a.region) continue;
        if (found != -1) throw std::logic_error("segment has the same region on both sides");
        found = b.id;
    }
    if (found == -1) throw std::logic_error("region cycle is broken");
    return found;
}

std::vector<int> crossing_cycle_from(int arrow) {
    const int c = arrow / 4, s = arrow % 4;
    std::vector<int> out;
    for (int k = 0; k < 4; ++k) out.push_back(4 * c + ((s - k) % 4 + 4) % 4);
    return out;
}

std::vector<int> region_cycle_from(const Quiver& q, int arrow) {
    std::vector<int> out{arrow};
    for (int a = next_in_region(q, arrow); a != arrow; a = next_in_region(q, a)) {
        out.push_back(a);
        if (out.size() > q.arrows.size()) throw std::logic_error("region cycle does not close");
    }
    return out;
}

Potential build_potential(const LinkDiagram& d, const Quiver& q) {
    Potential w;
    for (int c = 0; c < d.crossing_count(); ++c) {
        CycleTerm t;
        t.sign = 1;
        t.crossing = c;
        t.arrows = canonical_rotation(crossing_cycle_from(4 * c));
        w.terms.push_back(t);
    }
    std::set<int> done;
    std::map<int, CycleTerm> by_region;
    for (const Arrow& a : q.arrows) {
        if (done.count(a.id)) continue;
        CycleTerm t;
        t.sign = -1;
        t.region = a.region;
        t.arrows = canonical_rotation(region_cycle_from(q, a.id));
        for (int x : t.arrows) done.insert(x);
        by_region[a.region] = t;
    }
    for (auto& [r, t] : by_region) w.terms.push_back(t);
    return w;
}

ReducedQP reduce_two_cycles(const Quiver& q, const Potential& w) {
    ReducedQP red;
    std::vector<CycleTerm> cur;
    std::vector<CycleTerm> bigons;
    for (const CycleTerm& t : w.terms) (t.sign < 0 && t.arrows.size() == 2 ? bigons : cur).push_back(t);
    std::set<int> removed;
    auto holder = [&](int arrow) {
        for (std::size_t k = 0; k < cur.size(); ++k)
            if (std::find(cur[k].arrows.begin(), cur[k].arrows.end(), arrow) != cur[k].arrows.end()) return k;
        throw std::logic_error("bigon arrow missing from the potential");
    };
    // Path following `arrow` around the cycle, back to its source.
    auto rest = [](const CycleTerm& t, int arrow) {
        auto it = std::find(t.arrows.begin(), t.arrows.end(), arrow);
        std::vector<int> r(it + 1, t.arrows.end());
        r.insert(r.end(), t.arrows.begin(), it);
        return r;
    };
    for (const CycleTerm& bigon : bigons) {
        const Arrow& b1 = q.arrows.at(bigon.arrows[0]);
        const Arrow& b2 = q.arrows.at(bigon.arrows[1]);
        if (b1.source != b2.target || b1.target != b2.source || b1.region != b2.region)
            throw std::logic_error("2-cycle does not come from a bigon");
        if (b1.crossing == b2.crossing) throw std::logic_error("bigon with a single crossing");
        const std::size_t k1 = holder(b1.id), k2 = holder(b2.id);
        if (cur[k1].sign < 0 || cur[k2].sign < 0) throw std::logic_error("bigon arrow lies in a second region cycle");
        if (k1 != k2) {
            // W = b1 A + b2 B - b1 b2 + ...: the relations give b2 = A and b1 = B, and the three
            // terms collapse to the cycle A B.
            const std::vector<int> a = rest(cur[k1], b1.id), b = rest(cur[k2], b2.id);
            red.substitutions.push_back({b2.id, a});
            red.substitutions.push_back({b1.id, b});
            CycleTerm joined;
            joined.sign = 1;
            std::vector<int> path = a;
            path.insert(path.end(), b.begin(), b.end());
            joined.arrows = canonical_rotation(path);
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(std::max(k1, k2)));
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(std::min(k1, k2)));
            cur.push_back(joined);
        } else {
            // Both arrows in one cycle b1 X b2 Y: the relations read b2 = X b2 Y and b1 = Y b1 X,
            // so both arrows vanish in the completed algebra and the cycle drops out.
            red.substitutions.push_back({b2.id, {}});
            red.substitutions.push_back({b1.id, {}});
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(k1));
        }
        removed.insert(b1.id);
        removed.insert(b2.id);
    }
    for (const Arrow& a : q.arrows)
        if (!removed.count(a.id)) red.quiver.arrows.push_back(a);
    red.quiver.vertex_count = q.vertex_count;
    red.potential.terms = cur;
    for (const Arrow& a : red.quiver.arrows)
        for (const Arrow& b : red.quiver.arrows)
            if (a.source == b.target && a.target == b.source)
                throw std::logic_error("2-cycle not coming from a bigon survives reduction");
    return red;
}

std::string arrow_name(int id) { return "a" + std::to_string(id); }

nlohmann::json quiver_to_json(const Quiver& q, const Potential& w, const std::vector<Substitution>* subs) {
    nlohmann::json j;
    std::vector<int> vs;
    for (int v = 1; v <= q.vertex_count; ++v) vs.push_back(v);
    j["vertices"] = vs;
    nlohmann::json arrows = nlohmann::json::array();
    for (const Arrow& a : q.arrows)
        arrows.push_back({{"id", a.id}, {"src", a.source}, {"tgt", a.target}, {"crossing", a.crossing}, {"region", a.region}});
    j["arrows"] = arrows;
    nlohmann::json plus = nlohmann::json::array(), minus = nlohmann::json::array();
    for (const CycleTerm& t : w.terms) (t.sign > 0 ? plus : minus).push_back(t.arrows);
    j["potential"] = {{"plus", plus}, {"minus", minus}};
    if (subs) {
        nlohmann::json s = nlohmann::json::array();
        for (const Substitution& x : *subs) s.push_back({{"arrow", x.arrow}, {"path", x.path}});
        j["substitutions"] = s;
    }
    return j;
}

std::pair<Quiver, Potential> quiver_from_json(const nlohmann::json& j) {
    Quiver q;
    q.vertex_count = static_cast<int>(j.at("vertices").size());
    for (const auto& a : j.at("arrows")) {
        Arrow x;
        x.id = a.at("id");
        x.source = a.at("src");
        x.target = a.at("tgt");
        x.crossing = a.at("crossing");
        x.region = a.at("region");
        x.slot = x.id % 4;
        q.arrows.push_back(x);
    }
    Potential w;
    for (const auto& c : j.at("potential").at("plus")) w.terms.push_back({1, c.get<std::vector<int>>()});
    for (const auto& c : j.at("potential").at("minus")) w.terms.push_back({-1, c.get<std::vector<int>>()});
    return {q, w};
}

namespace {

std::string cycle_text(const std::vector<int>& arrows) {
    std::string s;
    for (int a : arrows) s += arrow_name(a);
    return s;
}

}  // namespace

std::string export_quiver(const Quiver& q, const Potential& w, const std::string& format,
                          const std::vector<Substitution>* subs) {
    if (format == "json") return quiver_to_json(q, w, subs).dump(2) + "\n";
    std::ostringstream os;
    if (format == "dot") {
        os << "digraph Q {\n";
        for (int v = 1; v <= q.vertex_count; ++v) os << "  " << v << ";\n";
        for (const Arrow& a : q.arrows)
            os << "  " << a.source << " -> " << a.target << " [label=\"" << arrow_name(a.id) << "\", crossing=" << a.crossing
               << ", region=" << a.region << "];\n";
        os << "}\n";
        return os.str();
    }
    if (format == "text") {
        os << "vertices " << q.vertex_count << "\narrows " << q.arrows.size() << "\n";
        for (const Arrow& a : q.arrows)
            os << arrow_name(a.id) << ": " << a.source << " -> " << a.target << " (crossing " << a.crossing << ", region "
               << a.region << ")\n";
        os << "W =";
        bool first = true;
        for (const CycleTerm& t : w.terms) {
            os << (t.sign > 0 ? (first ? " " : " + ") : (first ? " -" : " - ")) << cycle_text(t.arrows);
            first = false;
        }
        os << "\n";
        if (subs)
            for (const Substitution& s : *subs)
                os << arrow_name(s.arrow) << " = " << (s.path.empty() ? std::string("0") : cycle_text(s.path)) << "\n";
        return os.str();
    }
    throw std::invalid_argument("unsupported format '" + format + "' (expected dot, json or text)");
}

}  // namespace kq
