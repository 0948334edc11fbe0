#include "lmtopo/surfaces.hpp"

#include <algorithm>
#include <unordered_map>

#include "lmtopo/random.hpp"

namespace lmtopo {

namespace {

std::vector<Face> tetrahedron_faces(Vertex a, Vertex b, Vertex c, Vertex d)
{
    return {make_face(a, b, c), make_face(a, b, d), make_face(a, c, d), make_face(b, c, d)};
}

Complex2 union_of_tetrahedra(std::array<Vertex, 4> t1, std::array<Vertex, 4> t2)
{
    auto faces = tetrahedron_faces(t1[0], t1[1], t1[2], t1[3]);
    auto more = tetrahedron_faces(t2[0], t2[1], t2[2], t2[3]);
    faces.insert(faces.end(), more.begin(), more.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return Complex2::make({}, {}, std::move(faces));
}

Complex2 icosahedron()
{
    std::vector<Face> faces;
    auto upper = [](int i) { return 2 + (i % 5); };
    auto lower = [](int i) { return 7 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back(make_face(1, upper(i), upper(i + 1)));
        faces.push_back(make_face(upper(i), upper(i + 1), lower(i)));
        faces.push_back(make_face(upper(i + 1), lower(i), lower(i + 1)));
        faces.push_back(make_face(12, lower(i), lower(i + 1)));
    }
    return Complex2::make({}, {}, std::move(faces));
}

/// Closed surface under local moves. Keeps, for every edge, the two
/// vertices opposite to it.
class MutableSurface {
  public:
    explicit MutableSurface(const Complex2& s)
    {
        for (const auto& f : s.faces()) add_face(f);
        next_vertex_ = s.vertices().empty() ? 1 : s.vertices().back() + 1;
    }

    std::size_t num_faces() const { return faces_.size(); }
    Vertex next_vertex() const { return next_vertex_; }

    void subdivide(std::size_t face_index)
    {
        const Face f = faces_[face_index];
        const Vertex v = next_vertex_++;
        remove_face(f);
        add_face(make_face(f[0], f[1], v));
        add_face(make_face(f[0], f[2], v));
        add_face(make_face(f[1], f[2], v));
    }

    /// Flips edge `which` of the face; returns false if the flip would
    /// create an existing edge.
    bool try_flip(std::size_t face_index, int which)
    {
        const Face f = faces_[face_index];
        const Edge e = edges_of(f)[static_cast<std::size_t>(which)];
        const auto& opp = opposite_.at(e);
        if (opp.size() != 2) return false;
        const Vertex c = opp[0];
        const Vertex d = opp[1];
        if (c == d || opposite_.contains(make_edge(c, d))) return false;
        remove_face(make_face(e[0], e[1], c));
        remove_face(make_face(e[0], e[1], d));
        add_face(make_face(c, d, e[0]));
        add_face(make_face(c, d, e[1]));
        return true;
    }

    Complex2 to_complex() const { return Complex2::make({}, {}, faces_); }

  private:
    void add_face(const Face& f)
    {
        index_[f] = faces_.size();
        faces_.push_back(f);
        opposite_[Edge{f[1], f[2]}].push_back(f[0]);
        opposite_[Edge{f[0], f[2]}].push_back(f[1]);
        opposite_[Edge{f[0], f[1]}].push_back(f[2]);
    }

    void remove_face(const Face& f)
    {
        auto pos = index_.at(f);
        index_.erase(f);
        if (pos + 1 != faces_.size()) {
            faces_[pos] = faces_.back();
            index_[faces_[pos]] = pos;
        }
        faces_.pop_back();
        auto drop = [&](const Edge& e, Vertex w) {
            auto& list = opposite_.at(e);
            list.erase(std::find(list.begin(), list.end(), w));
            if (list.empty()) opposite_.erase(e);
        };
        drop(Edge{f[1], f[2]}, f[0]);
        drop(Edge{f[0], f[2]}, f[1]);
        drop(Edge{f[0], f[1]}, f[2]);
    }

    std::vector<Face> faces_;
    std::unordered_map<Face, std::size_t, SimplexHash> index_;
    std::unordered_map<Edge, std::vector<Vertex>, SimplexHash> opposite_;
    Vertex next_vertex_ = 1;
};

void random_flip(MutableSurface& surface, Rng& rng)
{
    auto face = uniform_index(rng, surface.num_faces());
    auto which = static_cast<int>(uniform_index(rng, 3));
    surface.try_flip(face, which);
}

} // namespace

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names{"tetrahedron", "bipyramid5", "octahedron", "icosahedron",
                                                "rp2_six",     "sigma1",     "sigma2",     "sigma3"};
    return names;
}

Complex2 catalog(std::string_view name)
{
    if (name == "tetrahedron") return Complex2::make({}, {}, tetrahedron_faces(1, 2, 3, 4));
    if (name == "bipyramid5")
        return build_complex({{1, 2, 3}, {1, 3, 4}, {1, 2, 4}, {5, 2, 3}, {5, 3, 4}, {5, 2, 4}});
    if (name == "octahedron")
        return build_complex(
            {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 2}, {6, 2, 3}, {6, 3, 4}, {6, 4, 5}, {6, 5, 2}});
    if (name == "icosahedron") return icosahedron();
    if (name == "rp2_six")
        return build_complex({{1, 2, 3},
                              {1, 3, 4},
                              {1, 4, 5},
                              {1, 5, 6},
                              {1, 6, 2},
                              {2, 3, 5},
                              {3, 4, 6},
                              {4, 5, 2},
                              {5, 6, 3},
                              {6, 2, 4}});
    if (name == "sigma1") return union_of_tetrahedra({1, 2, 3, 4}, {4, 5, 6, 7});
    if (name == "sigma2") return union_of_tetrahedra({1, 2, 3, 4}, {3, 4, 5, 6});
    if (name == "sigma3") return union_of_tetrahedra({1, 2, 3, 4}, {1, 2, 3, 5});
    throw PreconditionError("unknown catalog complex '" + std::string(name) + "'");
}

Complex2 random_sphere_triangulation(int vertices, std::uint64_t seed, const SphereOptions& options)
{
    if (vertices < 4) throw PreconditionError("random_sphere_triangulation: need at least 4 vertices");
    Rng rng(seed);
    MutableSurface surface(catalog("tetrahedron"));
    for (int v = 4; v < vertices; ++v) {
        surface.subdivide(uniform_index(rng, surface.num_faces()));
        for (int i = 0; i < options.flips_per_subdivision; ++i) random_flip(surface, rng);
    }
    const auto final_flips = static_cast<std::int64_t>(options.final_flips_per_vertex) * vertices;
    for (std::int64_t i = 0; i < final_flips; ++i) random_flip(surface, rng);
    return surface.to_complex();
}

Complex2 grid_torus_triangulation(int m, int k)
{
    if (m < 3 || k < 3)
        throw PreconditionError("grid_torus_triangulation: need m, k >= 3 (smaller grids are not simplicial)");
    auto id = [&](int i, int j) { return static_cast<Vertex>(((i % m) * k) + (j % k) + 1); };
    std::vector<Face> faces;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            faces.push_back(make_face(id(i, j), id(i + 1, j), id(i + 1, j + 1)));
            faces.push_back(make_face(id(i, j), id(i, j + 1), id(i + 1, j + 1)));
        }
    Complex2 torus;
    try {
        torus = Complex2::make({}, {}, std::move(faces));
    } catch (const InvalidComplex& e) {
        throw PreconditionError(std::string("grid_torus_triangulation: not simplicial: ") + e.what());
    }
    if (classify_surface(torus).surface_name != SurfaceName::torus)
        throw PreconditionError("grid_torus_triangulation: construction is not a simplicial torus");
    return torus;
}

Complex2 flip_perturb(const Complex2& surface, int attempts, std::uint64_t seed)
{
    if (!classify_surface(surface).is_closed_surface)
        throw PreconditionError("flip_perturb: input is not a closed surface");
    Rng rng(seed);
    MutableSurface mutable_surface(surface);
    for (int i = 0; i < attempts; ++i) random_flip(mutable_surface, rng);
    return mutable_surface.to_complex();
}

} // namespace lmtopo
