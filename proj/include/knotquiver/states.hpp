#pragma once

#include <vector>

#include <json.hpp>

#include "knotquiver/diagram.hpp"
#include "knotquiver/poly.hpp"

namespace kq {

// One marker per crossing: marker[c] is the region holding the marker of crossing c.
struct KauffmanState {
    int base_segment = 0;
    std::vector<int> marker;
    bool operator==(const KauffmanState& o) const { return marker == o.marker; }
    bool operator<(const KauffmanState& o) const { return marker < o.marker; }
};

enum class MoveDirection { Up, Down };

struct Transposition {
    int segment = 0;
    MoveDirection direction = MoveDirection::Up;
    KauffmanState result;
};

struct Cover {
    int lower = 0;  // state indices
    int upper = 0;
    int segment = 0;
};

struct StateLattice {
    int base_segment = 0;
    int segment_count = 0;
    std::vector<KauffmanState> states;  // sorted by marker vector
    std::vector<Cover> covers;
    int minimal = -1;
    int maximal = -1;
    // heights[k][j-1]: number of transpositions at segment j on any path from the minimal state.
    std::vector<std::vector<int>> heights;
    // One sequence of up-moves (segment ids) from the minimal state to each state.
    std::vector<std::vector<int>> paths;
    // A second, different sequence when the state is reached along more than one cover.
    std::vector<std::vector<int>> alternate_paths;

    int index_of(const KauffmanState& s) const;
    nlohmann::json to_json() const;
};

// Exponents of W = s and B = 1/s in w(S), with the sign (-1)^(markers between incoming strands).
struct StateWeight {
    int w_exp = 0;
    int b_exp = 0;
    int sigma = 1;
    int s_exp() const { return w_exp - b_exp; }
};

std::vector<KauffmanState> enumerate_states(const LinkDiagram& d, int i);
std::vector<Transposition> transpositions(const LinkDiagram& d, const KauffmanState& s);
StateLattice build_lattice(const LinkDiagram& d, int i);

StateWeight marker_weight(const LinkDiagram& d, int crossing, int region);
StateWeight state_weight(const LinkDiagram& d, const KauffmanState& s);
LaurentPoly state_sum_alexander(const LinkDiagram& d, int i);
LaurentPoly state_sum_alexander(const LinkDiagram& d, const StateLattice& lat);

// Checks that sigma flips along every cover and that the weight ratio of a cover at j is
// -y_j under the specialization. Throws std::logic_error on the first violation.
void check_weight_invariants(const LinkDiagram& d, const StateLattice& lat);

MultiPoly f_polynomial(const StateLattice& lat);

}  // namespace kq
