#include <doctest.h>

#include "lmtopo/canonical.hpp"
#include "lmtopo/collapse.hpp"
#include "lmtopo/homology.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/quotient.hpp"
#include "lmtopo/surfaces.hpp"
#include "oracles.hpp"

using namespace lmtopo;

TEST_CASE("catalog")
{
    auto bp = catalog("bipyramid5");
    CHECK(bp.num_vertices() == 5);
    CHECK(bp.num_faces() == 6);
    CHECK(classify_surface(bp).surface_name == SurfaceName::sphere);

    auto rp2 = catalog("rp2_six");
    CHECK(rp2.num_vertices() == 6);
    CHECK(rp2.num_faces() == 10);
    CHECK(euler_characteristic(rp2) == 1);

    auto s3 = catalog("sigma3");
    CHECK(s3.num_vertices() == 5);
    CHECK(s3.num_faces() == 7);

    CHECK(classify_surface(catalog("icosahedron")).surface_name == SurfaceName::sphere);
    CHECK(catalog("icosahedron").num_vertices() == 12);
    for (const auto& name : catalog_names()) CHECK(catalog(name).is_pure());
    CHECK_THROWS_AS(catalog("dodecahedron"), PreconditionError);
}

TEST_CASE("random spheres")
{
    CHECK(random_sphere_triangulation(4, 9) == catalog("tetrahedron"));
    auto s30 = random_sphere_triangulation(30, 1);
    CHECK(s30.num_faces() == 56);
    for (int v = 4; v <= 60; v += 7)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto s = random_sphere_triangulation(v, seed);
            CHECK(s.num_vertices() == static_cast<std::size_t>(v));
            CHECK(s.num_faces() == static_cast<std::size_t>(2 * v - 4));
            CHECK(s.num_edges() == static_cast<std::size_t>(3 * v - 6));
            CHECK(classify_surface(s).surface_name == SurfaceName::sphere);
        }
    CHECK(random_sphere_triangulation(25, 77) == random_sphere_triangulation(25, 77));
    CHECK_THROWS_AS(random_sphere_triangulation(3, 1), PreconditionError);
}

TEST_CASE("grid tori")
{
    auto t = grid_torus_triangulation(4, 4);
    CHECK(t.num_vertices() == 16);
    CHECK(t.num_faces() == 32);
    CHECK(classify_surface(t).surface_name == SurfaceName::torus);
    auto t35 = grid_torus_triangulation(3, 5);
    CHECK(t35.num_vertices() == 15);
    CHECK(t35.num_faces() == 30);
    CHECK_THROWS_AS(grid_torus_triangulation(2, 4), PreconditionError);

    auto p = flip_perturb(t, 300, 4);
    CHECK(p.num_faces() == 2 * p.num_vertices());
    CHECK(classify_surface(p).surface_name == SurfaceName::torus);
    CHECK_THROWS_AS(flip_perturb(catalog("sigma3"), 5, 1), PreconditionError);
}

TEST_CASE("collapse examples")
{
    auto tri = collapse(build_complex({{1, 2, 3}}));
    CHECK(tri.outcome == CollapseOutcome::graph);
    CHECK(tri.residual_graph.size() == 2);
    CHECK(tri.removed.size() == 1);

    auto tet = catalog("tetrahedron");
    auto r = collapse(tet);
    CHECK(r.outcome == CollapseOutcome::closed_core);
    CHECK(r.core == tet);

    // cone over a 4-cycle with apex 5
    auto cone = build_complex({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
    CHECK(collapse(cone).outcome == CollapseOutcome::graph);

    // a tetrahedron with a triangle hanging off an edge, plus a separate disc
    auto mixed = build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {6, 7, 8}, {1, 2, 9}});
    auto m = collapse(mixed);
    CHECK(m.outcome == CollapseOutcome::mixed);
    CHECK(m.core == tet);
}

TEST_CASE("collapse properties on random complexes")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = oracle::random_complex(7, 0.2, rng, trial % 3);
        auto r = collapse(s);
        CHECK(free_edges(r.core).empty());
        CHECK((r.outcome == CollapseOutcome::graph) == (r.core.num_faces() == 0));
        CHECK(collapse(r.core).core == r.core);
        CHECK(r.removed.size() + r.core.num_faces() == s.num_faces());
        const auto before = betti_numbers(s);
        const auto after = betti_numbers(r.remaining);
        CHECK(before.b0 == after.b0);
        CHECK(before.b1 == after.b1);
        CHECK(before.b2 == after.b2);

        auto shuffled = collapse(s, CollapseOptions{static_cast<std::uint64_t>(trial)});
        CHECK(free_edges(shuffled.core).empty());
        CHECK(betti_numbers(shuffled.remaining).b2 == before.b2);
    }
}

TEST_CASE("quotient by partition")
{
    auto oct = catalog("octahedron");
    Partition identity;
    for (Vertex v : oct.vertices()) identity.push_back({v});
    auto q = quotient_by_partition(oct, identity);
    CHECK(q.regular);
    CHECK(oracle::isomorphic(q.map.target(), oct));

    auto tri = quotient_by_partition(build_complex({{1, 2, 3}}), {{1, 2}, {3}});
    CHECK_FALSE(tri.regular);
    REQUIRE(tri.violation);
    CHECK(tri.violation->kind == ViolationKind::degenerate_simplex);

    // bipyramid5: apexes 1 and 5 over the triangle 2 3 4
    auto bp = quotient_by_partition(catalog("bipyramid5"), {{1, 5}, {2}, {3}, {4}});
    CHECK_FALSE(bp.regular);
    REQUIRE(bp.violation);
    CHECK(bp.violation->kind == ViolationKind::shared_edge_images);

    CHECK_THROWS_AS(quotient_by_partition(oct, {{1, 2}}), PreconditionError);
    CHECK_THROWS_AS(quotient_by_partition(oct, {{1, 2}, {2, 3, 4, 5, 6}}), PreconditionError);
}

TEST_CASE("is_regular_quotient")
{
    auto s3 = catalog("sigma3");
    std::map<Vertex, Vertex> id;
    for (Vertex v : s3.vertices()) id[v] = v;
    CHECK(is_regular_quotient(SimplicialMap(s3, s3, id)).regular);

    std::map<Vertex, Vertex> constant;
    for (Vertex v : s3.vertices()) constant[v] = 1;
    CHECK_THROWS_AS(is_regular_quotient(SimplicialMap(s3, s3, constant)), PreconditionError);

    auto bp = quotient_by_partition(catalog("bipyramid5"), {{1, 5}, {2}, {3}, {4}});
    auto check = is_regular_quotient(bp.map);
    CHECK_FALSE(check.regular);
    CHECK(check.violation->kind == ViolationKind::shared_edge_images);

    // inclusion of a triangle into the tetrahedron misses faces
    auto tri = build_complex({{1, 2, 3}});
    auto miss = is_regular_quotient(SimplicialMap(tri, catalog("tetrahedron"), {{1, 1}, {2, 2}, {3, 3}}));
    CHECK_FALSE(miss.regular);
    CHECK(miss.violation->kind == ViolationKind::not_surjective);
}

TEST_CASE("enumerate regular quotients")
{
    auto tet = enumerate_regular_quotients(catalog("tetrahedron"), 3);
    REQUIRE(tet.size() == 1);
    CHECK(oracle::isomorphic(tet[0].complex, catalog("tetrahedron")));

    auto tri = enumerate_regular_quotients(build_complex({{1, 2, 3}}), 2);
    CHECK(tri.size() == 1);

    // the antipodal quotient of the octahedron is not regular
    auto oct = catalog("octahedron");
    auto antipodal = quotient_by_partition(oct, {{1, 6}, {2, 4}, {3, 5}});
    CHECK_FALSE(antipodal.regular);
    for (const auto& q : enumerate_regular_quotients(oct, 3)) {
        CHECK(q.complex.num_vertices() >= 4);
        CHECK_FALSE(oracle::isomorphic(q.complex, antipodal.map.target()));
    }

    CHECK_THROWS_AS(enumerate_regular_quotients(random_sphere_triangulation(20, 1), 1), PreconditionError);
}

TEST_CASE("enumerated quotients are regular and respect edge degrees")
{
    std::vector<Complex2> sources{catalog("octahedron"), catalog("sigma1"), random_sphere_triangulation(9, 3),
                                  build_complex({{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {2, 4, 6}})};
    for (const auto& s : sources) {
        std::set<std::string> labels;
        for (const auto& q : enumerate_regular_quotients(s, 2)) {
            CHECK(labels.insert(q.canonical_label).second);
            auto spec = quotient_by_partition(s, q.partition);
            CHECK(spec.regular);
            CHECK(canonical_form(spec.map.target()) == q.canonical_label);
            for (const auto& img : spec.map.edge_images()) {
                const Edge src{img.source[0], img.source[1]};
                const Edge dst{img.image[0], img.image[1]};
                CHECK(s.edge_degree(src) <= spec.map.target().edge_degree(dst));
            }
        }
    }
}
