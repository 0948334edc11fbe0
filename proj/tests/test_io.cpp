#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lmtopo/canonical.hpp"
#include "lmtopo/face_list.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/reports.hpp"
#include "lmtopo/surfaces.hpp"

using namespace lmtopo;

namespace {

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("lmtopo_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("parse face lists")
{
    auto tet = parse_face_list_string("1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    CHECK(tet.num_vertices() == 4);
    CHECK(tet.num_faces() == 4);

    auto commented = parse_face_list_string("# header\n\n  1 2 3   \n\n# end\n");
    CHECK(commented.num_faces() == 1);

    auto bare = parse_face_list_string("1 2 3\nedge 4 5\nvertex 9\n");
    CHECK(bare.num_edges() == 4);
    CHECK(bare.has_vertex(9));
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_face_list_string("1 2 3\n1 2 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
    try {
        parse_face_list_string("1 2 3\n4 x 6\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_face_list_string("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_face_list_string("1 2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_face_list_string("1 2 3\n3 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_face_list_string("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_file("/nonexistent/file.txt"), Error);
}

TEST_CASE("write and parse round trip")
{
    for (const auto& name : catalog_names()) {
        auto s = catalog(name);
        const auto text = write_face_list(s);
        CHECK(parse_face_list_string(text) == s);
        CHECK(write_face_list(parse_face_list_string(text)) == text);
    }
    auto bare = parse_face_list_string("edge 7 8\n2 3 1\nvertex 9\n");
    CHECK(write_face_list(bare) == "1 2 3\nedge 7 8\nvertex 9\n");
}

TEST_CASE("json reports use rational strings")
{
    auto j = to_json(density_report(catalog("sigma1")));
    CHECK(j["mu"] == "7/8");
    CHECK(j["chi"] == 3);
    auto m = to_json(mu_tilde(catalog("tetrahedron")));
    CHECK(m["value"] == "1/1");
    auto d = to_json(degree_report(catalog("octahedron")));
    CHECK(d["average_degree"] == "4/1");
}

TEST_CASE("forbidden list save and load")
{
    auto list = build_forbidden_list(ListParameters{6, 20, 1}, SphereBudget{6, 5, 10, 2, 0});
    const auto dir = scratch_dir("list");
    save_forbidden_list(dir, list);
    auto loaded = load_forbidden_list(dir);
    CHECK(loaded.parameters.degree_bound == 6);
    CHECK(loaded.parameters.face_cap == 20);
    REQUIRE(loaded.budget);
    CHECK(loaded.budget->count == 6);
    REQUIRE(loaded.l2.size() == list.l2.size());
    REQUIRE(loaded.lprime.size() == list.lprime.size());
    for (std::size_t i = 0; i < list.l2.size(); ++i) {
        CHECK(loaded.l2[i].complex == list.l2[i].complex);
        CHECK(loaded.l2[i].label == list.l2[i].label);
        CHECK(loaded.l2[i].provenance.parent == list.l2[i].provenance.parent);
        CHECK(loaded.l2[i].provenance.partition == list.l2[i].provenance.partition);
    }

    // a member edited on disk no longer matches its recorded label
    {
        std::ofstream out(dir / "l1_0000.txt");
        out << "1 2 3\n";
    }
    CHECK_THROWS_AS(load_forbidden_list(dir), Error);
    CHECK_THROWS_AS(load_forbidden_list(dir / "missing"), Error);
    std::filesystem::remove_all(dir);
}
