#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "knotquiver/diagram.hpp"
#include "knotquiver/poly.hpp"
#include "knotquiver/quiver.hpp"
#include "knotquiver/states.hpp"

namespace kq {

// Small dense integer matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    static Matrix identity(int l);
    // (l+1)x(l+1) with ones on the superdiagonal: e_{r+1} -> e_r.
    static Matrix shift(int l);
    // l x (l+1): [0 | I_l], drops the first basis vector.
    static Matrix drop_first(int l);
    // (l+1) x l: [I_l ; 0], includes into the first l basis vectors.
    static Matrix include_first(int l);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    long long at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    long long& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    int rank() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const = default;
    nlohmann::json to_json() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> data_;
};

// The four matrix families of link modules, named by their action on the standard basis.
enum class MapShape { Identity, Shift, DropFirst, IncludeFirst };
const char* to_string(MapShape s);

struct QuiverRep {
    std::vector<int> dims;      // dims[j-1] for segment j
    std::vector<Matrix> maps;   // maps[arrow id], shape dims(target) x dims(source)
    int dim(int vertex) const { return dims.at(vertex - 1); }
    int total_dimension() const;
    nlohmann::json to_json() const;
};

QuiverRep zero_rep(const Quiver& q);

// Module attached to a sequence of counterclockwise transpositions (segment ids) starting at the
// minimal state. Throws std::logic_error if the transpositions at some crossing do not follow the
// cyclic pattern a, b, c, d, a, ...
QuiverRep module_from_transpositions(const LinkDiagram& d, const Quiver& q, const std::vector<int>& sequence);
// M(S) for state index k of the lattice; when the state is reachable along two different
// sequences both are built and compared.
QuiverRep state_module(const LinkDiagram& d, const Quiver& q, const StateLattice& lat, int k);
// T(i) = M(S_max).
QuiverRep link_module(const LinkDiagram& d, const Quiver& q, const StateLattice& lat);

// True iff every cyclic derivative of w acts as zero and every crossing cycle acts as the shift
// matrix of the right size. `failures` (optional) collects readable descriptions.
bool check_relations(const Quiver& q, const QuiverRep& rep, const Potential& w,
                     std::vector<std::string>* failures = nullptr);
// Along a cover at segment a: dims grow by e_a; an arrow out of a gains one in rank unless its
// image already fills the target; all other ranks stay the same.
bool check_cover_ranks(const Quiver& q, const QuiverRep& lower, const QuiverRep& upper, int segment);
bool support_connected(const Quiver& q, const QuiverRep& rep);
bool adjacent_dims_close(const Quiver& q, const QuiverRep& rep);

// Level decomposition K(0), K(1), ... of the segments relative to a base segment.
struct InternalPoint {
    int level = 0;
    int crossing = 0;
    int region = 0;  // R(x)
};

struct Partition {
    int base_segment = 0;
    std::vector<int> level;                  // level[j-1], -1 if never assigned
    std::vector<InternalPoint> internal_points;
    std::vector<std::pair<int, int>> external_points;  // (level, crossing) where a boundary walk turns back
    std::vector<std::pair<int, int>> epsilon;          // (segment, level) added through an internal point
    bool complete = true;
    std::vector<int> segments_at(int d) const;
    nlohmann::json to_json() const;
};

Partition partition(const LinkDiagram& d, int i);
// T(i) assembled from the partition levels with the identity / shift / drop / include table.
// Throws std::logic_error when two adjacent levels differ by more than one.
QuiverRep geometric_link_module(const LinkDiagram& d, const Quiver& q, const Partition& p);

// The graph G(d) whose vertices are crossing and region cycles supported in level d and whose
// edges join cycles sharing an arrow.
struct LevelGraph {
    int level = 0;
    std::vector<int> crossing_vertices;
    std::vector<int> region_vertices;
    std::vector<std::pair<int, int>> edges;  // (crossing, region)
    bool crossing_degree_at_most_two = true;
    bool bijection_with_internal_points = true;
    bool one_crossing_leaf_per_component = true;
    bool is_forest = true;
    nlohmann::json to_json() const;
};
std::vector<LevelGraph> level_graphs(const LinkDiagram& d, const Quiver& q, const Partition& p);

struct SubmoduleLattice {
    int vertex_count = 0;
    std::vector<std::vector<int>> elements;   // dimension vectors, sorted
    std::vector<std::tuple<int, int, int>> covers;  // (lower, upper, vertex)
    nlohmann::json to_json() const;
};

SubmoduleLattice enumerate_submodules(const Quiver& q, const QuiverRep& rep);
MultiPoly f_polynomial(const SubmoduleLattice& lat);
BigInt alternating_sum(const SubmoduleLattice& lat);
bool at_most_one_per_dimension_vector(const SubmoduleLattice& lat);

// S -> h(S) is an order isomorphism onto the submodule lattice.
bool lattice_iso_check(const StateLattice& sl, const SubmoduleLattice& ml);

// Summary of a two-bridge link module of type A.
struct TypeAReport {
    bool found = false;
    int segment = 0;
    std::vector<int> path;           // support vertices in path order
    std::vector<int> turning_points; // 1-based positions along the path of sinks and sources
    std::size_t lattice_size = 0;
    BigInt alternating_sum = 0;
    nlohmann::json to_json() const;
};
TypeAReport type_a_module(const LinkDiagram& d, const Quiver& q, int expected_support);

}  // namespace kq
