#include "knotquiver/repr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kq {

Matrix Matrix::identity(int l) {
    Matrix m(l, l);
    for (int r = 0; r < l; ++r) m.at(r, r) = 1;
    return m;
}

Matrix Matrix::shift(int l) {
    Matrix m(l + 1, l + 1);
    for (int r = 0; r < l; ++r) m.at(r, r + 1) = 1;
    return m;
}

Matrix Matrix::drop_first(int l) {
    Matrix m(l, l + 1);
    for (int r = 0; r < l; ++r) m.at(r, r + 1) = 1;
    return m;
}

Matrix Matrix::include_first(int l) {
    Matrix m(l + 1, l);
    for (int r = 0; r < l; ++r) m.at(r, r) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](long long x) { return x == 0; });
}

// Fraction-free elimination; entries stay tiny for the 0/1 matrices used here.
int Matrix::rank() const {
    Matrix a = *this;
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int k = 0; k < cols_; ++k) std::swap(a.at(rank, k), a.at(pivot, k));
        for (int r = rank + 1; r < rows_; ++r) {
            for (int k = c + 1; k < cols_; ++k)
                a.at(r, k) = (a.at(rank, c) * a.at(r, k) - a.at(r, c) * a.at(rank, k)) / prev;
            a.at(r, c) = 0;
        }
        prev = a.at(rank, c);
        ++rank;
    }
    return rank;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix dimension mismatch in composition");
    Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const long long x = at(r, k);
            if (x == 0) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += x * o.at(k, c);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix dimension mismatch in sum");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix dimension mismatch in difference");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
    return out;
}

nlohmann::json Matrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < rows_; ++r) {
        std::vector<long long> row(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                                   data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
        rows.push_back(row);
    }
    return {{"rows", rows_}, {"cols", cols_}, {"entries", rows}};
}

const char* to_string(MapShape s) {
    switch (s) {
        case MapShape::Identity: return "I";
        case MapShape::Shift: return "J";
        case MapShape::DropFirst: return "V";
        case MapShape::IncludeFirst: return "H";
    }
    return "?";
}

int QuiverRep::total_dimension() const { return std::accumulate(dims.begin(), dims.end(), 0); }

nlohmann::json QuiverRep::to_json() const {
    nlohmann::json maps_json = nlohmann::json::array();
    for (std::size_t a = 0; a < maps.size(); ++a) {
        if (maps[a].empty()) continue;
        nlohmann::json m = maps[a].to_json();
        m["arrow"] = a;
        maps_json.push_back(m);
    }
    return {{"dims", dims}, {"maps", maps_json}};
}

QuiverRep zero_rep(const Quiver& q) {
    QuiverRep rep;
    rep.dims.assign(q.vertex_count, 0);
    rep.maps.assign(q.arrows.size(), Matrix());
    return rep;
}

QuiverRep module_from_transpositions(const LinkDiagram& d, const Quiver& q, const std::vector<int>& sequence) {
    QuiverRep rep = zero_rep(q);
    for (int j : sequence) ++rep.dims.at(j - 1);
    for (int p = 0; p < d.crossing_count(); ++p) {
        std::array<int, 4> segs{};
        for (int s = 0; s < 4; ++s) segs[s] = d.segment_at(p, s);
        std::vector<int> at_p;
        for (int j : sequence)
            if (std::find(segs.begin(), segs.end(), j) != segs.end()) at_p.push_back(j);
        if (at_p.empty()) continue;
        const int a_slot = static_cast<int>(std::find(segs.begin(), segs.end(), at_p[0]) - segs.begin());
        // Transpositions at p visit its segments counterclockwise: a, b, c, d, a, ...
        for (std::size_t k = 0; k < at_p.size(); ++k)
            if (at_p[k] != segs[(a_slot + k) % 4])
                throw std::logic_error("transpositions at crossing " + std::to_string(p) + " break the cyclic pattern");
        const int l = static_cast<int>(at_p.size() / 4), r = static_cast<int>(at_p.size() % 4);
        std::array<Matrix, 4> by_role;  // a, b, c, d
        switch (r) {
            case 0:
                by_role = {l > 0 ? Matrix::shift(l - 1) : Matrix(), Matrix::identity(l), Matrix::identity(l),
                           Matrix::identity(l)};
                break;
            case 1:
                by_role = {Matrix::drop_first(l), Matrix::include_first(l), Matrix::identity(l), Matrix::identity(l)};
                break;
            case 2:
                by_role = {Matrix::drop_first(l), Matrix::identity(l + 1), Matrix::include_first(l), Matrix::identity(l)};
                break;
            default:
                by_role = {Matrix::drop_first(l), Matrix::identity(l + 1), Matrix::identity(l + 1),
                           Matrix::include_first(l)};
                break;
        }
        for (int s = 0; s < 4; ++s) {
            const Arrow& arrow = q.arrows.at(4 * p + s);
            Matrix m = by_role[((s - a_slot) % 4 + 4) % 4];
            if (m.rows() != rep.dim(arrow.target) || m.cols() != rep.dim(arrow.source)) {
                if (m.empty() && (rep.dim(arrow.target) == 0 || rep.dim(arrow.source) == 0))
                    m = Matrix(rep.dim(arrow.target), rep.dim(arrow.source));
                else
                    throw std::logic_error("matrix shape disagrees with dimensions at arrow " + std::to_string(arrow.id));
            }
            rep.maps[arrow.id] = m;
        }
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (rep.maps[a].rows() != rep.dim(q.arrows[a].target) || rep.maps[a].cols() != rep.dim(q.arrows[a].source))
            rep.maps[a] = Matrix(rep.dim(q.arrows[a].target), rep.dim(q.arrows[a].source));
    return rep;
}

QuiverRep state_module(const LinkDiagram& d, const Quiver& q, const StateLattice& lat, int k) {
    QuiverRep rep = module_from_transpositions(d, q, lat.paths.at(k));
    if (!lat.alternate_paths.at(k).empty()) {
        const QuiverRep other = module_from_transpositions(d, q, lat.alternate_paths[k]);
        if (other.dims != rep.dims || other.maps != rep.maps)
            throw std::logic_error("state module depends on the transposition sequence");
    }
    return rep;
}

QuiverRep link_module(const LinkDiagram& d, const Quiver& q, const StateLattice& lat) {
    return state_module(d, q, lat, lat.maximal);
}

namespace {

// Composite of the arrows of `path` in order, as a map out of dims(source of the first arrow).
Matrix path_product(const Quiver& q, const QuiverRep& rep, const std::vector<int>& path, int start_vertex) {
    Matrix m = Matrix::identity(rep.dim(start_vertex));
    int at = start_vertex;
    for (int a : path) {
        const Arrow& arrow = q.arrows.at(a);
        if (arrow.source != at) throw std::logic_error("path is not composable");
        m = rep.maps.at(a) * m;
        at = arrow.target;
    }
    return m;
}

std::string path_text(const std::vector<int>& path) {
    std::string s;
    for (int a : path) s += arrow_name(a);
    return s;
}

}  // namespace

bool check_relations(const Quiver& q, const QuiverRep& rep, const Potential& w, std::vector<std::string>* failures) {
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (failures) failures->push_back(msg);
    };
    for (const Arrow& arrow : q.arrows) {
        Matrix total(rep.dim(arrow.source), rep.dim(arrow.target));
        for (const CycleTerm& t : w.terms) {
            for (std::size_t k = 0; k < t.arrows.size(); ++k) {
                if (t.arrows[k] != arrow.id) continue;
                std::vector<int> rest(t.arrows.begin() + static_cast<std::ptrdiff_t>(k) + 1, t.arrows.end());
                rest.insert(rest.end(), t.arrows.begin(), t.arrows.begin() + static_cast<std::ptrdiff_t>(k));
                Matrix m = path_product(q, rep, rest, arrow.target);
                total = t.sign > 0 ? total + m : total - m;
            }
        }
        if (!total.is_zero()) fail("cyclic derivative at " + arrow_name(arrow.id) + " does not vanish");
    }
    for (const CycleTerm& t : w.terms) {
        if (t.crossing < 0) continue;
        for (int a : t.arrows) {
            const std::vector<int> cycle = crossing_cycle_from(a);
            const int v = q.arrows.at(a).source;
            const int l = rep.dim(v);
            if (l == 0) continue;
            if (path_product(q, rep, cycle, v) != Matrix::shift(l - 1))
                fail("crossing cycle " + path_text(cycle) + " does not act as the shift matrix");
        }
    }
    return ok;
}

bool check_cover_ranks(const Quiver& q, const QuiverRep& lower, const QuiverRep& upper, int segment) {
    for (std::size_t v = 0; v < lower.dims.size(); ++v)
        if (upper.dims[v] - lower.dims[v] != (static_cast<int>(v) + 1 == segment ? 1 : 0)) return false;
    for (const Arrow& a : q.arrows) {
        const int before = lower.maps[a.id].rank();
        const int grow = upper.maps[a.id].rank() - before;
        // An arrow out of the segment gains rank unless its image already fills the target.
        const int expected = a.source == segment && before < upper.dim(a.target) ? 1 : 0;
        if (grow != expected) return false;
    }
    return true;
}

bool support_connected(const Quiver& q, const QuiverRep& rep) {
    std::vector<int> parent(q.vertex_count + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arrow& a : q.arrows)
        if (rep.dim(a.source) > 0 && rep.dim(a.target) > 0) parent[find(a.source)] = find(a.target);
    std::set<int> roots;
    for (int v = 1; v <= q.vertex_count; ++v)
        if (rep.dim(v) > 0) roots.insert(find(v));
    return roots.size() <= 1;
}

bool adjacent_dims_close(const Quiver& q, const QuiverRep& rep) {
    for (const Arrow& a : q.arrows)
        if (std::abs(rep.dim(a.source) - rep.dim(a.target)) > 1) return false;
    return true;
}

std::vector<int> Partition::segments_at(int d) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < level.size(); ++j)
        if (level[j] == d) out.push_back(static_cast<int>(j) + 1);
    return out;
}

nlohmann::json Partition::to_json() const {
    nlohmann::json j;
    j["base_segment"] = base_segment;
    j["complete"] = complete;
    const int top = level.empty() ? -1 : *std::max_element(level.begin(), level.end());
    nlohmann::json levels = nlohmann::json::array();
    for (int d = 0; d <= top; ++d) levels.push_back(segments_at(d));
    j["levels"] = levels;
    nlohmann::json ips = nlohmann::json::array();
    for (const InternalPoint& x : internal_points)
        ips.push_back({{"level", x.level}, {"crossing", x.crossing}, {"region", x.region}});
    j["internal_points"] = ips;
    nlohmann::json eps = nlohmann::json::array();
    for (auto [seg, d] : epsilon) eps.push_back({{"segment", seg}, {"level", d}});
    j["epsilon"] = eps;
    nlohmann::json ext = nlohmann::json::array();
    for (auto [d, c] : external_points) ext.push_back({{"level", d}, {"crossing", c}});
    j["external_points"] = ext;
    return j;
}

// Peels the diagram level by level. K'(d) collects the unassigned segments sharing a region with
// K(d-1). The boundary of the assigned part is then walked, keeping the assigned segments on one
// side; a crossing with all four segments in K'(d) that the walk passes twice before turning back
// is an internal point x, and the region R(x) at x on the inner side of the walk brings its
// remaining segments into K(d).
Partition partition(const LinkDiagram& d, int i) {
    const int m = d.segment_count();
    Partition part;
    part.base_segment = i;
    part.level.assign(m, -1);
    const auto [left, right] = d.sides(i);
    for (int r : {left, right})
        for (int j : d.region_segments(r)) part.level[j - 1] = 0;
    auto assigned = [&](int j) { return part.level[j - 1] >= 0; };
    std::set<std::tuple<int, int, int>> internal;
    std::set<std::pair<int, int>> external;
    for (int level = 1; std::count(part.level.begin(), part.level.end(), -1) > 0; ++level) {
        std::set<int> kp;
        for (int r = 0; r < d.region_count(); ++r) {
            const std::vector<int> segs = d.region_segments(r);
            const bool touches = std::any_of(segs.begin(), segs.end(), [&](int j) { return part.level[j - 1] == level - 1; });
            if (!touches) continue;
            for (int j : segs)
                if (!assigned(j)) kp.insert(j);
        }
        if (kp.empty()) {
            part.complete = false;
            break;
        }
        std::set<int> face_done;
        for (int r = 0; r < d.region_count(); ++r)
            for (int j : d.region_segments(r))
                if (assigned(j)) face_done.insert(r);
        std::set<std::pair<int, int>> darts;
        for (int c = 0; c < d.crossing_count(); ++c)
            for (int s = 0; s < 4; ++s)
                if (!assigned(d.segment_at(c, s)) && face_done.count(d.corner(c, s))) darts.insert({c, s});
        std::set<std::pair<int, int>> seen;
        std::map<int, int> added;
        for (const auto& start : darts) {
            if (seen.count(start)) continue;
            std::vector<std::array<int, 3>> walk;  // (crossing, arrival slot, departure slot)
            std::pair<int, int> cur = start;
            while (!seen.count(cur)) {
                seen.insert(cur);
                const auto [c, s] = cur;
                int t = s - 1;
                while (assigned(d.segment_at(c, t))) --t;
                t = ((t % 4) + 4) % 4;
                walk.push_back({c, s, t});
                if (s == t) external.insert({level, c});
                const Segment& seg = d.segment(d.segment_at(c, t));
                const Endpoint other = (seg.tail.crossing == c && seg.tail.slot == t) ? seg.head : seg.tail;
                cur = {other.crossing, other.slot};
            }
            const std::size_t len = walk.size();
            for (std::size_t k = 0; k < len; ++k) {
                const auto [c, s, t] = walk[k];
                bool all_in = true;
                for (int u = 0; u < 4; ++u) all_in = all_in && kp.count(d.segment_at(c, u));
                if (!all_in) continue;
                bool again = false;
                for (std::size_t l = 1; l < len; ++l) {
                    const auto& next = walk[(k + l) % len];
                    if (next[0] == c) {
                        again = true;
                        break;
                    }
                    if (next[1] == next[2]) break;
                }
                if (!again) continue;
                const int region = d.corner(c, t);
                internal.insert({level, c, region});
                for (int j : d.region_segments(region))
                    if (!assigned(j) && !kp.count(j)) added[j] = level;
            }
        }
        for (int j : kp) part.level[j - 1] = level;
        for (auto [j, lv] : added) {
            part.level[j - 1] = lv;
            part.epsilon.push_back({j, lv});
        }
    }
    for (auto [lv, c, r] : internal) part.internal_points.push_back({lv, c, r});
    part.external_points.assign(external.begin(), external.end());
    return part;
}

QuiverRep geometric_link_module(const LinkDiagram& d, const Quiver& q, const Partition& p) {
    (void)d;
    QuiverRep rep = zero_rep(q);
    for (int j = 1; j <= q.vertex_count; ++j) rep.dims[j - 1] = std::max(0, p.level.at(j - 1));
    std::set<std::tuple<int, int, int>> internal;
    for (const InternalPoint& x : p.internal_points) internal.insert({x.crossing, x.region, x.level});
    for (const Arrow& a : q.arrows) {
        const int du = rep.dim(a.source), dv = rep.dim(a.target);
        Matrix m;
        if (du == dv + 1) m = Matrix::drop_first(dv);
        else if (du + 1 == dv) m = Matrix::include_first(du);
        else if (du == dv) m = (du > 0 && internal.count({a.crossing, a.region, du})) ? Matrix::shift(du - 1) : Matrix::identity(du);
        else throw std::logic_error("levels differ by more than one along arrow " + arrow_name(a.id));
        rep.maps[a.id] = m;
    }
    return rep;
}

nlohmann::json LevelGraph::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (auto [c, r] : edges) e.push_back({c, r});
    return {{"level", level},
            {"crossing_vertices", crossing_vertices},
            {"region_vertices", region_vertices},
            {"edges", e},
            {"crossing_degree_at_most_two", crossing_degree_at_most_two},
            {"bijection_with_internal_points", bijection_with_internal_points},
            {"one_crossing_leaf_per_component", one_crossing_leaf_per_component},
            {"is_forest", is_forest}};
}

std::vector<LevelGraph> level_graphs(const LinkDiagram& d, const Quiver& q, const Partition& p) {
    std::vector<LevelGraph> out;
    const int top = p.level.empty() ? 0 : *std::max_element(p.level.begin(), p.level.end());
    for (int level = 1; level <= top; ++level) {
        LevelGraph g;
        g.level = level;
        auto in_level = [&](int j) { return p.level[j - 1] == level; };
        for (int c = 0; c < d.crossing_count(); ++c) {
            bool all = true;
            for (int s = 0; s < 4; ++s) all = all && in_level(d.segment_at(c, s));
            if (all) g.crossing_vertices.push_back(c);
        }
        for (int r = 0; r < d.region_count(); ++r) {
            const std::vector<int> segs = d.region_segments(r);
            if (std::all_of(segs.begin(), segs.end(), in_level)) g.region_vertices.push_back(r);
        }
        std::set<std::pair<int, int>> edges;
        for (const Arrow& a : q.arrows)
            if (std::count(g.crossing_vertices.begin(), g.crossing_vertices.end(), a.crossing) &&
                std::count(g.region_vertices.begin(), g.region_vertices.end(), a.region))
                edges.insert({a.crossing, a.region});
        g.edges.assign(edges.begin(), edges.end());

        std::set<int> xs, rs;
        for (const InternalPoint& x : p.internal_points)
            if (x.level == level) {
                xs.insert(x.crossing);
                rs.insert(x.region);
            }
        g.bijection_with_internal_points = g.crossing_vertices.size() == g.region_vertices.size() &&
                                           xs == std::set<int>(g.crossing_vertices.begin(), g.crossing_vertices.end()) &&
                                           rs == std::set<int>(g.region_vertices.begin(), g.region_vertices.end());

        // Vertices: crossings first, then regions.
        const int nc = static_cast<int>(g.crossing_vertices.size());
        const int nv = nc + static_cast<int>(g.region_vertices.size());
        auto cidx = [&](int c) {
            return static_cast<int>(std::find(g.crossing_vertices.begin(), g.crossing_vertices.end(), c) - g.crossing_vertices.begin());
        };
        auto ridx = [&](int r) {
            return nc + static_cast<int>(std::find(g.region_vertices.begin(), g.region_vertices.end(), r) - g.region_vertices.begin());
        };
        std::vector<int> degree(nv, 0), parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [c, r] : g.edges) {
            ++degree[cidx(c)];
            ++degree[ridx(r)];
            parent[find(cidx(c))] = find(ridx(r));
        }
        for (int k = 0; k < nc; ++k)
            if (degree[k] > 2) g.crossing_degree_at_most_two = false;
        std::map<int, int> leaves;
        std::set<int> components;
        for (int k = 0; k < nv; ++k) components.insert(find(k));
        for (int k = 0; k < nc; ++k)
            if (degree[k] == 1) ++leaves[find(k)];
        for (int root : components)
            if (leaves[root] != 1) g.one_crossing_leaf_per_component = false;
        g.is_forest = static_cast<int>(g.edges.size()) == nv - static_cast<int>(components.size());
        out.push_back(g);
    }
    return out;
}

nlohmann::json SubmoduleLattice::to_json() const {
    nlohmann::json c = nlohmann::json::array();
    for (auto [lo, hi, v] : covers) c.push_back({{"lower", lo}, {"upper", hi}, {"vertex", v}});
    return {{"elements", elements}, {"covers", c}};
}

// A submodule spanned by the first m(v) basis vectors at every vertex exists iff every arrow maps
// those spans into each other. Identity and include-first maps need m(u) <= m(v); shift and
// drop-first maps lose the first basis vector and need m(u) - 1 <= m(v).
SubmoduleLattice enumerate_submodules(const Quiver& q, const QuiverRep& rep) {
    SubmoduleLattice lat;
    lat.vertex_count = q.vertex_count;
    const int m = q.vertex_count;
    struct Constraint {
        int u, v, slack;
    };
    std::vector<std::vector<Constraint>> by_last(m + 1);
    for (const Arrow& a : q.arrows) {
        const Matrix& x = rep.maps[a.id];
        if (x.empty()) continue;
        const int slack = x.at(0, 0) == 1 ? 0 : 1;
        by_last[std::max(a.source, a.target)].push_back({a.source, a.target, slack});
    }
    std::vector<int> cur(m + 1, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v > m) {
            lat.elements.emplace_back(cur.begin() + 1, cur.end());
            return;
        }
        for (int k = 0; k <= rep.dim(v); ++k) {
            cur[v] = k;
            bool ok = true;
            for (const Constraint& c : by_last[v])
                if (cur[c.u] - c.slack > cur[c.v]) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 1);
    std::sort(lat.elements.begin(), lat.elements.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < lat.elements.size(); ++k) index[lat.elements[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < lat.elements.size(); ++k)
        for (int v = 0; v < m; ++v) {
            std::vector<int> up = lat.elements[k];
            ++up[v];
            auto it = index.find(up);
            if (it != index.end()) lat.covers.push_back({static_cast<int>(k), it->second, v + 1});
        }
    return lat;
}

MultiPoly f_polynomial(const SubmoduleLattice& lat) {
    std::vector<Exponents> vs(lat.elements.begin(), lat.elements.end());
    return polynomial_from_vectors(vs, lat.vertex_count);
}

BigInt alternating_sum(const SubmoduleLattice& lat) { return alternating_sum(f_polynomial(lat)); }

bool at_most_one_per_dimension_vector(const SubmoduleLattice& lat) {
    return std::adjacent_find(lat.elements.begin(), lat.elements.end()) == lat.elements.end();
}

bool lattice_iso_check(const StateLattice& sl, const SubmoduleLattice& ml) {
    const std::size_t n = sl.states.size();
    if (n != ml.elements.size()) return false;
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < n; ++k) index[ml.elements[k]] = static_cast<int>(k);
    std::set<int> image;
    for (std::size_t k = 0; k < n; ++k) {
        auto it = index.find(sl.heights[k]);
        if (it == index.end()) return false;
        image.insert(it->second);
    }
    if (image.size() != n) return false;
    // Order of the state poset: reflexive-transitive closure of the covers.
    std::vector<std::vector<int>> up(n);
    for (const Cover& c : sl.covers) up[c.lower].push_back(c.upper);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> above(n, false);
        std::vector<int> stack{static_cast<int>(a)};
        above[a] = true;
        while (!stack.empty()) {
            const int k = stack.back();
            stack.pop_back();
            for (int u : up[k])
                if (!above[u]) {
                    above[u] = true;
                    stack.push_back(u);
                }
        }
        for (std::size_t b = 0; b < n; ++b) {
            bool leq = true;
            for (std::size_t v = 0; v < sl.heights[a].size(); ++v) leq = leq && sl.heights[a][v] <= sl.heights[b][v];
            if (leq != above[b]) return false;
        }
    }
    return true;
}

nlohmann::json TypeAReport::to_json() const {
    return {{"found", found},
            {"segment", segment},
            {"path", path},
            {"turning_points", turning_points},
            {"lattice_size", lattice_size},
            {"alternating_sum", alternating_sum.str()}};
}

TypeAReport type_a_module(const LinkDiagram& d, const Quiver& q, int expected_support) {
    TypeAReport report;
    for (int i = 1; i <= d.segment_count() && !report.found; ++i) {
        const StateLattice lat = build_lattice(d, i);
        const QuiverRep t = link_module(d, q, lat);
        if (std::any_of(t.dims.begin(), t.dims.end(), [](int x) { return x > 1; })) continue;
        if (t.total_dimension() != expected_support) continue;
        // Undirected support graph, with the direction of each nonzero map.
        std::map<std::pair<int, int>, int> dir;  // (u,v) with u<v -> +1 for u->v, -1 for v->u
        std::map<int, std::set<int>> adj;
        bool bad = false;
        for (const Arrow& a : q.arrows) {
            if (t.maps[a.id].empty() || t.maps[a.id].is_zero()) continue;
            const int u = std::min(a.source, a.target), v = std::max(a.source, a.target);
            const int sgn = a.source == u ? 1 : -1;
            auto it = dir.find({u, v});
            if (it != dir.end() && it->second != sgn) bad = true;
            dir[{u, v}] = sgn;
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::vector<int> support;
        for (int v = 1; v <= q.vertex_count; ++v)
            if (t.dim(v) == 1) support.push_back(v);
        if (bad || dir.size() + 1 != support.size()) continue;
        std::vector<int> ends;
        for (int v : support) {
            if (adj[v].size() > 2) bad = true;
            if (adj[v].size() <= 1) ends.push_back(v);
        }
        if (bad || (support.size() > 1 && ends.size() != 2)) continue;
        auto walk_from = [&](int start) {
            std::vector<int> path{start};
            int prev = 0, at = start;
            while (true) {
                int next = 0;
                for (int x : adj[at])
                    if (x != prev) next = x;
                if (next == 0) break;
                path.push_back(next);
                prev = at;
                at = next;
            }
            return path;
        };
        auto toward_first = [&](const std::vector<int>& path, std::size_t k) {
            // +1 when the arrow between path[k] and path[k+1] points back toward path[k].
            const int u = path[k], v = path[k + 1];
            const int sgn = dir.at({std::min(u, v), std::max(u, v)});
            const bool forward = (sgn == 1) == (u < v);
            return forward ? -1 : 1;
        };
        auto turns = [&](const std::vector<int>& path) {
            std::vector<int> out;
            for (std::size_t k = 1; k + 1 < path.size(); ++k)
                if (toward_first(path, k - 1) != toward_first(path, k)) out.push_back(static_cast<int>(k) + 1);
            return out;
        };
        std::vector<int> best_path = support, best_turns;
        if (support.size() > 1) {
            bool have = false;
            for (int start : ends) {
                const std::vector<int> path = walk_from(start);
                if (toward_first(path, 0) != 1) continue;
                const std::vector<int> tp = turns(path);
                if (!have || tp < best_turns) {
                    best_path = path;
                    best_turns = tp;
                    have = true;
                }
            }
            if (!have) {
                best_path = walk_from(std::min(ends[0], ends[1]));
                best_turns = turns(best_path);
            }
        }
        const SubmoduleLattice sub = enumerate_submodules(q, t);
        report.found = true;
        report.segment = i;
        report.path = best_path;
        report.turning_points = best_turns;
        report.lattice_size = sub.elements.size();
        report.alternating_sum = alternating_sum(sub);
    }
    return report;
}

}  // namespace kq
