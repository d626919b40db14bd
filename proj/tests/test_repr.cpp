#include <doctest.h>

#include "common.hpp"
#include "knotquiver/repr.hpp"

using namespace kq;

TEST_CASE("matrix families") {
    const Matrix j = Matrix::shift(3);
    CHECK(j.rows() == 4);
    CHECK(j.rank() == 3);
    Matrix p = Matrix::identity(4);
    for (int k = 0; k < 4; ++k) p = p * j;
    CHECK(p.is_zero());
    CHECK(Matrix::drop_first(2).rows() == 2);
    CHECK(Matrix::drop_first(2).cols() == 3);
    CHECK(Matrix::include_first(2).rows() == 3);
    CHECK(Matrix::drop_first(2) * Matrix::include_first(2) == Matrix::shift(1));
    CHECK(Matrix::include_first(2) * Matrix::drop_first(2) == Matrix::shift(2));
    CHECK(Matrix::identity(3).rank() == 3);
    CHECK(Matrix(0, 3).rank() == 0);
}

TEST_CASE("figure-eight link module T(1)") {
    const LinkDiagram d = corpus_diagram("figure-eight");
    const Quiver q = build_quiver(d);
    const StateLattice lat = build_lattice(d, 1);
    const QuiverRep t = link_module(d, q, lat);
    CHECK(t.dims == std::vector<int>{0, 1, 0, 0, 1, 0, 0, 1});
    CHECK(t.total_dimension() == 3);
    CHECK(check_relations(q, t, build_potential(d, q)));
    CHECK(support_connected(q, t));
    const SubmoduleLattice sub = enumerate_submodules(q, t);
    CHECK(sub.elements.size() == 5);
    CHECK(lattice_iso_check(lat, sub));
    CHECK(f_polynomial(sub) == f_polynomial(lat));
}

TEST_CASE("figure-eight T(2) has a chain of submodules") {
    const LinkDiagram d = corpus_diagram("figure-eight");
    const Quiver q = build_quiver(d);
    const SubmoduleLattice sub = enumerate_submodules(q, link_module(d, q, build_lattice(d, 2)));
    CHECK(sub.elements.size() == 5);
    CHECK(sub.covers.size() == 4);
    CHECK(alternating_sum(sub) == 1);
}

TEST_CASE("every state module satisfies the relations") {
    for (const char* name : {"trefoil", "figure-eight", "K[2,1,2,3]"}) {
        const LinkDiagram d = corpus_diagram(name);
        const Quiver q = build_quiver(d);
        const Potential w = build_potential(d, q);
        for (int i = 1; i <= d.segment_count(); ++i) {
            const StateLattice lat = build_lattice(d, i);
            for (std::size_t k = 0; k < lat.states.size(); ++k)
                CHECK(check_relations(q, state_module(d, q, lat, static_cast<int>(k)), w));
        }
    }
}

TEST_CASE("a mutated module violates the relations") {
    const LinkDiagram d = corpus_diagram("10_66");
    const Quiver q = build_quiver(d);
    const Potential w = build_potential(d, q);
    const QuiverRep t = link_module(d, q, build_lattice(d, 1));
    REQUIRE(check_relations(q, t, w));
    int caught = 0, tried = 0;
    for (std::size_t a = 0; a < t.maps.size(); ++a) {
        if (t.maps[a].empty() || t.maps[a].is_zero()) continue;
        QuiverRep mutant = t;
        mutant.maps[a] = Matrix(t.maps[a].rows(), t.maps[a].cols());
        std::vector<std::string> why;
        ++tried;
        if (!check_relations(q, mutant, w, &why)) {
            ++caught;
            CHECK_FALSE(why.empty());
        }
    }
    CHECK(tried > 0);
    CHECK(caught == tried);
}

TEST_CASE("covers change ranks by at most one arrow family") {
    const LinkDiagram d = corpus_diagram("10_66");
    const Quiver q = build_quiver(d);
    const StateLattice lat = build_lattice(d, 1);
    std::vector<QuiverRep> modules;
    for (std::size_t k = 0; k < lat.states.size(); ++k) modules.push_back(state_module(d, q, lat, static_cast<int>(k)));
    for (const Cover& c : lat.covers) CHECK(check_cover_ranks(q, modules[c.lower], modules[c.upper], c.segment));
    const Cover& c = lat.covers.front();
    CHECK_FALSE(check_cover_ranks(q, modules[c.upper], modules[c.lower], c.segment));
}

TEST_CASE("10_66 partition for segment 1") {
    const LinkDiagram d = corpus_diagram("10_66");
    const Partition p = partition(d, 1);
    CHECK(p.complete);
    CHECK(p.segments_at(0) == std::vector<int>{1, 5, 11, 13, 14, 15});
    CHECK(p.segments_at(1) == std::vector<int>{2, 3, 4, 6, 7, 9, 10, 12, 16, 17, 19, 20});
    CHECK(p.segments_at(2) == std::vector<int>{8, 18});
    CHECK(p.internal_points.size() == 2);
    CHECK(p.epsilon == std::vector<std::pair<int, int>>{{9, 1}, {17, 1}});

    const Quiver q = build_quiver(d);
    const StateLattice lat = build_lattice(d, 1);
    CHECK(p.level == lat.heights[lat.maximal]);
    CHECK(geometric_link_module(d, q, p).maps == link_module(d, q, lat).maps);
    for (const LevelGraph& g : level_graphs(d, q, p)) {
        CHECK(g.crossing_degree_at_most_two);
        CHECK(g.bijection_with_internal_points);
        CHECK(g.one_crossing_leaf_per_component);
    }
}

TEST_CASE("two-bridge modules are of type A") {
    const LinkDiagram d = two_bridge({2, 1, 2, 3});
    const TypeAReport r = type_a_module(d, build_quiver(d), 7);
    REQUIRE(r.found);
    CHECK(r.path.size() == 7);
    CHECK(r.turning_points == std::vector<int>{2, 3, 5});
    CHECK(r.lattice_size == 27);
    CHECK((r.alternating_sum == 1 || r.alternating_sum == -1));

    const LinkDiagram hopf = two_bridge({2});
    const TypeAReport h = type_a_module(hopf, build_quiver(hopf), 1);
    REQUIRE(h.found);
    CHECK(h.lattice_size == 2);
    CHECK(h.alternating_sum == 0);
}

TEST_CASE("representation JSON") {
    const LinkDiagram d = corpus_diagram("trefoil");
    const Quiver q = build_quiver(d);
    const nlohmann::json j = link_module(d, q, build_lattice(d, 1)).to_json();
    CHECK(j.at("dims").size() == 6);
    REQUIRE(j.at("maps").size() == 1);
    CHECK(j.at("maps").front().contains("arrow"));
}
