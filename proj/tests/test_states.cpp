#include <doctest.h>

#include <numeric>

#include "common.hpp"
#include "knotquiver/oracle.hpp"
#include "knotquiver/states.hpp"

using namespace kq;

TEST_CASE("state counts match the determinant on alternating diagrams") {
    CHECK(enumerate_states(corpus_diagram("trefoil"), 1).size() == 3);
    CHECK(enumerate_states(corpus_diagram("figure-eight"), 1).size() == 5);
    CHECK(enumerate_states(corpus_diagram("K[2,1,2,3]"), 1).size() == 27);
    CHECK(enumerate_states(corpus_diagram("10_66"), 1).size() == 75);
    CHECK(enumerate_states(corpus_diagram("conway"), 18).size() == 131);
}

TEST_CASE("states are bijections onto the regions away from the base segment") {
    const LinkDiagram d = corpus_diagram("figure-eight");
    for (int i = 1; i <= d.segment_count(); ++i) {
        const auto [r1, r2] = d.sides(i);
        for (const KauffmanState& s : enumerate_states(d, i)) {
            std::vector<int> used(d.region_count(), 0);
            for (std::size_t c = 0; c < s.marker.size(); ++c) {
                const int r = s.marker[c];
                CHECK(r != r1);
                CHECK(r != r2);
                ++used[r];
                bool corner = false;
                for (int slot = 0; slot < 4; ++slot) corner = corner || d.corner(static_cast<int>(c), slot) == r;
                CHECK(corner);
            }
            for (int r = 0; r < d.region_count(); ++r) CHECK(used[r] == (r == r1 || r == r2 ? 0 : 1));
        }
    }
}

TEST_CASE("lattice is graded by total height") {
    for (const char* name : {"trefoil", "figure-eight", "10_66"}) {
        const LinkDiagram d = corpus_diagram(name);
        for (int i = 1; i <= d.segment_count(); ++i) {
            const StateLattice lat = build_lattice(d, i);
            CHECK(lat.minimal >= 0);
            CHECK(lat.maximal >= 0);
            CHECK(std::accumulate(lat.heights[lat.minimal].begin(), lat.heights[lat.minimal].end(), 0) == 0);
            for (const Cover& c : lat.covers) {
                std::vector<int> expected = lat.heights[c.lower];
                ++expected[c.segment - 1];
                CHECK(lat.heights[c.upper] == expected);
            }
            CHECK(lat.heights[lat.maximal][i - 1] == 0);
        }
    }
}

TEST_CASE("transpositions from the minimal state only go up") {
    const LinkDiagram d = corpus_diagram("10_66");
    const StateLattice lat = build_lattice(d, 1);
    for (const Transposition& t : transpositions(d, lat.states[lat.minimal])) CHECK(t.direction == MoveDirection::Up);
    for (const Transposition& t : transpositions(d, lat.states[lat.maximal])) CHECK(t.direction == MoveDirection::Down);
}

TEST_CASE("figure-eight F-polynomials") {
    const LinkDiagram d = corpus_diagram("figure-eight");
    CHECK(f_polynomial(build_lattice(d, 1)).to_text() == "1 + y5 + y2*y5 + y5*y8 + y2*y5*y8");
    CHECK(f_polynomial(build_lattice(d, 2)).to_text() == "1 + y8 + y3*y8 + y1*y3*y8 + y1*y3*y4*y8");
}

TEST_CASE("state sum weights") {
    for (const CorpusEntry& e : read_corpus(corpus_path())) {
        const LinkDiagram d = parse_pd(e.pd);
        const LaurentPoly det = alexander_det(d);
        for (int i = 1; i <= d.segment_count(); ++i) {
            const StateLattice lat = build_lattice(d, i);
            CHECK_NOTHROW(check_weight_invariants(d, lat));
            CHECK(dot_eq(state_sum_alexander(d, lat), det));
        }
    }
}

TEST_CASE("markers on side regions weigh one") {
    const LinkDiagram d = corpus_diagram("trefoil");
    for (int c = 0; c < d.crossing_count(); ++c) {
        const int bottom = d.crossing(c).sign > 0 ? 0 : 1;
        CHECK(marker_weight(d, c, d.corner(c, bottom + 1)).s_exp() == 0);
        CHECK(marker_weight(d, c, d.corner(c, bottom + 3)).s_exp() == 0);
        CHECK(marker_weight(d, c, d.corner(c, bottom)).sigma == -1);
        CHECK(marker_weight(d, c, d.corner(c, bottom + 2)).sigma == 1);
    }
}

TEST_CASE("out-of-range base segments are rejected") {
    const LinkDiagram d = corpus_diagram("trefoil");
    CHECK_THROWS(build_lattice(d, 0));
    CHECK_THROWS(build_lattice(d, 7));
}
