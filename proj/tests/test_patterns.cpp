#include <doctest.h>

#include "lmtopo/canonical.hpp"
#include "lmtopo/embedding.hpp"
#include "lmtopo/homology.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/patterns.hpp"
#include "lmtopo/stochastic.hpp"
#include "lmtopo/surfaces.hpp"
#include "oracles.hpp"

using namespace lmtopo;

namespace {

Complex2 two_disjoint_tetrahedra()
{
    return build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
}

std::vector<SphereSource> small_spheres()
{
    std::vector<SphereSource> out;
    for (const char* name : {"tetrahedron", "bipyramid5", "octahedron", "icosahedron"})
        out.push_back({catalog(name), name});
    for (int i = 0; i < 6; ++i) out.push_back({random_sphere_triangulation(7 + i, 50 + i), "random"});
    return out;
}

} // namespace

TEST_CASE("embedding examples")
{
    auto s3 = catalog("sigma3");
    auto r = find_embedding(s3, s3, SearchMode::first);
    CHECK(r.count == 1);
    CHECK(r.embeddings.front().image_faces(s3) == s3.faces());

    CHECK(find_embedding(catalog("tetrahedron"), catalog("bipyramid5"), SearchMode::count).count == 0);

    auto full5 = sample_lm(5, 1.0, 1).complex;
    CHECK(count_distinct_images(catalog("tetrahedron"), full5) == 5);
    // 5 choices of vertex set times 24 orderings
    CHECK(find_embedding(catalog("tetrahedron"), full5, SearchMode::count).count == 120);

    CHECK_THROWS_AS(find_embedding(Complex2::make({}, {{1, 2}}, {}), full5, SearchMode::first), PreconditionError);
}

TEST_CASE("embedding counts agree with the naive oracle")
{
    std::mt19937_64 rng(19);
    std::vector<Complex2> patterns{catalog("tetrahedron"), catalog("sigma3"), catalog("bipyramid5"),
                                   build_complex({{1, 2, 3}}), build_complex({{1, 2, 3}, {2, 3, 4}}),
                                   build_complex({{1, 2, 3}, {3, 4, 5}})};
    int pairs = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto host = oracle::random_complex(7 + trial % 3, 0.3 + 0.02 * (trial % 10), rng);
        for (const auto& p : patterns) {
            const auto fast = find_embedding(p, host, SearchMode::count).count;
            CHECK(fast == oracle::count_embeddings(p, host));
            const auto all = find_embedding(p, host, SearchMode::all);
            CHECK(all.count == fast);
            CHECK(all.embeddings.size() == fast);
            CHECK((find_embedding(p, host, SearchMode::first).count > 0) == (fast > 0));
            ++pairs;
        }
    }
    CHECK(pairs == 240);
}

TEST_CASE("tetrahedra")
{
    CHECK(find_tetrahedra(catalog("octahedron")).tetrahedra.empty());
    auto two = find_tetrahedra(two_disjoint_tetrahedra());
    CHECK(two.tetrahedra.size() == 2);
    CHECK(two.pairwise_face_disjoint);

    // full 2-skeleton on 5 vertices: every 4-set is a tetrahedron and they overlap
    auto full = find_tetrahedra(sample_lm(5, 1.0, 1).complex);
    CHECK(full.tetrahedra.size() == 5);
    CHECK_FALSE(full.pairwise_face_disjoint);
    CHECK_FALSE(full.overlaps.empty());

    // the two tetrahedra of sigma3 share the face 1 2 3
    auto s3 = find_tetrahedra(catalog("sigma3"));
    CHECK(s3.tetrahedra.size() == 2);
    CHECK_FALSE(s3.pairwise_face_disjoint);

    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        auto s = oracle::random_complex(8, 0.4, rng);
        CHECK(find_tetrahedra(s).tetrahedra == oracle::tetrahedra(s));
    }
}

TEST_CASE("prune tetrahedra")
{
    auto tet = catalog("tetrahedron");
    auto p = prune_tetrahedra(tet);
    CHECK(p.pruned.num_faces() == 3);
    CHECK(p.removed == std::vector<Face>{{1, 2, 3}});
    CHECK(betti_numbers(p.pruned).b2 == betti_numbers(tet).b2 - 1);

    CHECK(prune_tetrahedra(two_disjoint_tetrahedra()).pruned.num_faces() == 6);
    CHECK_THROWS_AS(prune_tetrahedra(sample_lm(5, 1.0, 1).complex), PreconditionError);
}

TEST_CASE("wedge bookkeeping on samples")
{
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto y = sample_lm(12, 0.25, seed).complex;
        const auto t = find_tetrahedra(y);
        if (!t.pairwise_face_disjoint) continue;
        auto z = prune_tetrahedra(y).pruned;
        const auto by = betti_numbers(y);
        const auto bz = betti_numbers(z);
        CHECK(by.b2 == bz.b2 + static_cast<std::int64_t>(t.tetrahedra.size()));
        CHECK(by.b1 == bz.b1);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("low degree configurations")
{
    auto oct = low_degree_configuration(catalog("octahedron"), 17);
    REQUIRE(oct.config);
    CHECK(oct.config->kind == LowDegreeConfig::Kind::a);
    CHECK(oct.minimal_bound == 4);

    auto ico = low_degree_configuration(catalog("icosahedron"), 5);
    REQUIRE(ico.config);
    CHECK(ico.config->kind == LowDegreeConfig::Kind::a);
    CHECK_FALSE(low_degree_configuration(catalog("icosahedron"), 4).config);

    CHECK_THROWS_AS(low_degree_configuration(catalog("sigma3"), 17), PreconditionError);

    for (int i = 0; i < 100; ++i) {
        auto s = random_sphere_triangulation(5 + i, 300 + i);
        auto r = low_degree_configuration(s, 17);
        REQUIRE(r.config);
        const auto& c = *r.config;
        const auto deg = s.vertex_degrees();
        auto degree = [&](Vertex v) { return deg[*s.vertex_index(v)]; };
        CHECK(degree(c.x) <= 17);
        CHECK(degree(c.y) <= 17);
        CHECK(degree(c.z) <= 17);
        if (c.kind == LowDegreeConfig::Kind::a) {
            CHECK(s.has_face(make_face(c.x, c.y, c.z)));
        } else {
            REQUIRE(c.w);
            CHECK(s.has_face(make_face(c.x, c.y, *c.w)));
            CHECK(s.has_face(make_face(c.y, c.z, *c.w)));
        }
        CHECK(r.minimal_bound <= 17);
    }
}

TEST_CASE("star unions from the octahedron")
{
    auto members = extract_star_unions(catalog("octahedron"), "octahedron", 4, 12);
    REQUIRE_FALSE(members.empty());
    for (const auto& m : members) {
        for (Vertex t : m.provenance.triple) CHECK(link(m.complex, t).shape == LinkShape::cycle);
        CHECK(m.complex.num_faces() <= 12);
    }
    // a face triple reaches 7 of the 8 faces
    bool seen_face_triple = false;
    for (const auto& m : members)
        if (!m.provenance.w) {
            seen_face_triple = true;
            CHECK(m.complex.num_faces() == 7);
        }
    CHECK(seen_face_triple);
    CHECK(extract_star_unions(catalog("octahedron"), "octahedron", 3, 12).empty());
}

TEST_CASE("forbidden list construction")
{
    ListParameters params{6, 20, 1};
    auto list = build_forbidden_list(params, small_spheres());
    REQUIRE(list.l1.size() == 1);
    CHECK(mu(list.l1[0].complex) == Rational(5, 7));
    CHECK_FALSE(list.complete);
    CHECK_FALSE(list.lprime.empty());

    std::set<std::string> labels;
    for (const auto& m : list.lprime) CHECK(labels.insert(m.label).second);
    for (const auto& m : list.l2) {
        CHECK(find_tetrahedra(m.complex).tetrahedra.empty());
        REQUIRE(m.provenance.parent);
        CHECK(*m.provenance.parent < list.lprime.size());
        const auto report = verify_list_member(m.complex, params.face_cap);
        CHECK(report.all_checks());
    }
    CHECK_THROWS_AS(build_forbidden_list(ListParameters{2, 20, 1}, small_spheres()), PreconditionError);
}

TEST_CASE("list monotone in the sphere budget")
{
    ListParameters params{7, 24, 0};
    std::set<std::string> previous;
    for (std::size_t count : {2u, 5u, 10u}) {
        auto list = build_forbidden_list(params, SphereBudget{count, 6, 14, 4, 0});
        std::set<std::string> labels;
        for (const auto& m : list.lprime) labels.insert(m.label);
        CHECK(std::includes(labels.begin(), labels.end(), previous.begin(), previous.end()));
        previous = labels;
    }
}

TEST_CASE("verify_list_member examples")
{
    auto bp = verify_list_member(catalog("bipyramid5"), 47);
    CHECK(bp.boundary_count == 0);
    CHECK(bp.f == 6);
    CHECK(bp.inequality_holds);
    CHECK(bp.mu_tilde == Rational(5, 6));
    CHECK(bp.mu_tilde_ok);

    auto s = verify_list_member(catalog("sigma3"), 47);
    CHECK(s.mu_tilde == Rational(5, 7));
    CHECK(s.bound == Rational(46, 47));
    CHECK(s.mu_tilde_ok);

    auto tri = verify_list_member(build_complex({{1, 2, 3}}), 47);
    CHECK_FALSE(tri.inequality_holds);
    CHECK_FALSE(tri.all_checks());
}

TEST_CASE("certificate")
{
    auto list = build_forbidden_list(ListParameters{6, 20, 1}, small_spheres());

    auto ok = certify_asphericable(two_disjoint_tetrahedra(), list);
    CHECK(ok.verdict == Verdict::certified_asphericable);
    CHECK(ok.sigma_free);
    CHECK(ok.l2_free);
    CHECK(ok.tetrahedra.size() == 2);
    CHECK_FALSE(ok.witness);
    CHECK_FALSE(ok.note.empty());

    auto bp = catalog("bipyramid5");
    auto no = certify_asphericable(bp, list);
    CHECK(no.verdict == Verdict::not_certified);
    CHECK(no.sigma_free);
    CHECK_FALSE(no.l2_free);
    REQUIRE(no.witness);
    CHECK(no.witness->image == bp.faces());

    auto with_sigma = certify_asphericable(build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5},
                                                          {1, 3, 5}, {2, 3, 5}, {6, 7, 8}}),
                                           list);
    CHECK(with_sigma.verdict == Verdict::not_certified);
    CHECK_FALSE(with_sigma.sigma_free);
    REQUIRE(with_sigma.witness);
    CHECK(with_sigma.witness->member == "L1[0]");
}
