#include "lmtopo/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace lmtopo {

Edge make_edge(Vertex a, Vertex b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

Face make_face(Vertex a, Vertex b, Vertex c)
{
    Face f{a, b, c};
    std::sort(f.begin(), f.end());
    return f;
}

std::array<Edge, 3> edges_of(const Face& face)
{
    return {Edge{face[0], face[1]}, Edge{face[0], face[2]}, Edge{face[1], face[2]}};
}

namespace {

std::string simplex_string(std::span<const Vertex> s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

template <typename T>
void sort_unique(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Complex2 Complex2::make(std::vector<Vertex> vertices, std::vector<Edge> edges,
                        std::vector<Face> faces, bool full_1_skeleton)
{
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        if (f[0] == f[1] || f[1] == f[2])
            throw InvalidComplex("degenerate face " + simplex_string(f));
        if (f[0] <= 0)
            throw InvalidComplex("vertex ids must be positive, got face " + simplex_string(f));
    }
    std::sort(faces.begin(), faces.end());
    if (auto dup = std::adjacent_find(faces.begin(), faces.end()); dup != faces.end())
        throw InvalidComplex("duplicate face " + simplex_string(*dup));

    for (auto& e : edges) {
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[0] == e[1]) throw InvalidComplex("degenerate edge " + simplex_string(e));
        if (e[0] <= 0)
            throw InvalidComplex("vertex ids must be positive, got edge " + simplex_string(e));
    }
    for (const auto& f : faces)
        for (const auto& e : edges_of(f)) edges.push_back(e);
    sort_unique(edges);

    for (Vertex v : vertices)
        if (v <= 0) throw InvalidComplex("vertex ids must be positive, got " + std::to_string(v));
    for (const auto& e : edges) {
        vertices.push_back(e[0]);
        vertices.push_back(e[1]);
    }
    sort_unique(vertices);

    Complex2 c;
    c.vertices_ = std::move(vertices);
    c.edges_ = std::move(edges);
    c.faces_ = std::move(faces);
    c.full_1_skeleton_ = full_1_skeleton;
    return c;
}

bool Complex2::has_vertex(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Complex2::has_edge(const Edge& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e[0], e[1]));
}

bool Complex2::has_face(const Face& f) const
{
    return std::binary_search(faces_.begin(), faces_.end(), make_face(f[0], f[1], f[2]));
}

std::optional<std::size_t> Complex2::vertex_index(Vertex v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Complex2::edge_index(const Edge& e) const
{
    Edge key = make_edge(e[0], e[1]);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> Complex2::edge_degrees() const
{
    std::vector<int> deg(edges_.size(), 0);
    for (const auto& f : faces_)
        for (const auto& e : edges_of(f)) ++deg[*edge_index(e)];
    return deg;
}

int Complex2::edge_degree(const Edge& e) const
{
    Edge key = make_edge(e[0], e[1]);
    int d = 0;
    for (const auto& f : faces_)
        if ((f[0] == key[0] || f[1] == key[0] || f[2] == key[0]) &&
            (f[0] == key[1] || f[1] == key[1] || f[2] == key[1]))
            ++d;
    return d;
}

std::vector<int> Complex2::vertex_degrees() const
{
    std::vector<int> deg(vertices_.size(), 0);
    for (const auto& e : edges_) {
        ++deg[*vertex_index(e[0])];
        ++deg[*vertex_index(e[1])];
    }
    return deg;
}

std::vector<std::vector<Face>> Complex2::vertex_stars() const
{
    std::vector<std::vector<Face>> stars(vertices_.size());
    for (const auto& f : faces_)
        for (Vertex v : f) stars[*vertex_index(v)].push_back(f);
    return stars;
}

bool Complex2::is_pure() const
{
    if (faces_.empty()) return vertices_.empty();
    const auto deg = edge_degrees();
    return std::none_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

Complex2 build_complex(std::span<const Face> faces, std::span<const Edge> extra_edges)
{
    return Complex2::make({}, {extra_edges.begin(), extra_edges.end()}, {faces.begin(), faces.end()});
}

Complex2 build_complex(std::initializer_list<std::array<Vertex, 3>> faces)
{
    std::vector<Face> fs(faces.begin(), faces.end());
    return Complex2::make({}, {}, std::move(fs));
}

namespace {

void require_vertex(const Complex2& s, Vertex x)
{
    if (!s.has_vertex(x)) throw PreconditionError("unknown vertex " + std::to_string(x));
}

} // namespace

Complex2 star(const Complex2& s, Vertex x)
{
    require_vertex(s, x);
    std::vector<Face> faces;
    for (const auto& f : s.faces())
        if (f[0] == x || f[1] == x || f[2] == x) faces.push_back(f);
    return Complex2::make({x}, {}, std::move(faces));
}

std::string to_string(LinkShape shape)
{
    switch (shape) {
    case LinkShape::cycle: return "cycle";
    case LinkShape::path: return "path";
    case LinkShape::other: return "other";
    }
    return "other";
}

LinkShape classify_graph(std::span<const Vertex> vertices, std::span<const Edge> edges)
{
    if (edges.empty()) return LinkShape::other;
    std::unordered_map<Vertex, std::vector<Vertex>> adj;
    for (Vertex v : vertices) adj[v];
    for (const auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    // connectivity
    std::vector<Vertex> stack{adj.begin()->first};
    std::unordered_map<Vertex, bool> seen{{stack.back(), true}};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    std::size_t reached = 0;
    for (const auto& [v, flag] : seen) reached += flag ? 1 : 0;
    if (reached != adj.size()) return LinkShape::other;

    std::size_t ones = 0;
    std::size_t twos = 0;
    for (const auto& [v, nbrs] : adj) {
        if (nbrs.size() == 1) ++ones;
        else if (nbrs.size() == 2) ++twos;
        else return LinkShape::other;
    }
    if (ones == 0 && adj.size() >= 3) return LinkShape::cycle;
    if (ones == 2) return LinkShape::path;
    return LinkShape::other;
}

Link link(const Complex2& s, Vertex x)
{
    require_vertex(s, x);
    Link out;
    for (const auto& f : s.faces()) {
        if (f[0] == x) out.edges.push_back(Edge{f[1], f[2]});
        else if (f[1] == x) out.edges.push_back(Edge{f[0], f[2]});
        else if (f[2] == x) out.edges.push_back(Edge{f[0], f[1]});
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (const auto& e : out.edges) {
        out.vertices.push_back(e[0]);
        out.vertices.push_back(e[1]);
    }
    sort_unique(out.vertices);
    out.shape = classify_graph(out.vertices, out.edges);
    return out;
}

std::int64_t euler_characteristic(const Complex2& s)
{
    return static_cast<std::int64_t>(s.num_vertices()) - static_cast<std::int64_t>(s.num_edges()) +
           static_cast<std::int64_t>(s.num_faces());
}

std::vector<Edge> free_edges(const Complex2& s)
{
    const auto deg = s.edge_degrees();
    std::vector<Edge> out;
    for (std::size_t i = 0; i < deg.size(); ++i)
        if (deg[i] == 1) out.push_back(s.edges()[i]);
    return out;
}

bool is_closed(const Complex2& s)
{
    return s.num_faces() > 0 && s.is_pure() && free_edges(s).empty();
}

std::size_t connected_components(const Complex2& s)
{
    const auto n = s.num_vertices();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t components = n;
    for (const auto& e : s.edges()) {
        auto a = find(*s.vertex_index(e[0]));
        auto b = find(*s.vertex_index(e[1]));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

std::string to_string(SurfaceName name)
{
    switch (name) {
    case SurfaceName::sphere: return "sphere";
    case SurfaceName::torus: return "torus";
    case SurfaceName::projective_plane: return "projective-plane";
    case SurfaceName::klein_bottle: return "klein-bottle";
    case SurfaceName::other: return "other";
    case SurfaceName::not_a_surface: return "not-a-surface";
    }
    return "not-a-surface";
}

namespace {

// Orientation of edge e (e[0] < e[1]) induced by the sorted face f carrying
// orientation sign s: +1 if the boundary traverses e[0] -> e[1].
int induced_sign(const Face& f, const Edge& e, int s)
{
    const bool outer = (e[0] == f[0] && e[1] == f[2]);
    return outer ? -s : s;
}

bool orientable_surface(const Complex2& s)
{
    const auto& faces = s.faces();
    std::unordered_map<Edge, std::vector<std::size_t>, SimplexHash> incident;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (const auto& e : edges_of(faces[i])) incident[e].push_back(i);

    std::vector<int> sign(faces.size(), 0);
    for (std::size_t root = 0; root < faces.size(); ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop();
            for (const auto& e : edges_of(faces[i])) {
                for (auto j : incident[e]) {
                    if (j == i) continue;
                    // neighbour must induce the opposite orientation on e
                    int want = -induced_sign(faces[i], e, sign[i]);
                    int sj = induced_sign(faces[j], e, 1) == want ? 1 : -1;
                    if (sign[j] == 0) {
                        sign[j] = sj;
                        queue.push(j);
                    } else if (sign[j] != sj) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace

SurfaceInfo classify_surface(const Complex2& s)
{
    SurfaceInfo info;
    info.euler_characteristic = euler_characteristic(s);
    if (s.num_faces() == 0 || !s.is_pure()) return info;
    const auto deg = s.edge_degrees();
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return info;
    for (Vertex v : s.vertices())
        if (link(s, v).shape != LinkShape::cycle) return info;
    if (connected_components(s) != 1) return info;

    info.is_closed_surface = true;
    info.orientable = orientable_surface(s);
    const auto chi = info.euler_characteristic;
    if (info.orientable) {
        info.surface_name = chi == 2 ? SurfaceName::sphere : chi == 0 ? SurfaceName::torus : SurfaceName::other;
    } else {
        info.surface_name = chi == 1   ? SurfaceName::projective_plane
                            : chi == 0 ? SurfaceName::klein_bottle
                                       : SurfaceName::other;
    }
    return info;
}

Complex2 induced_subcomplex(const Complex2& s, std::span<const Face> face_subset)
{
    if (face_subset.empty()) throw PreconditionError("induced_subcomplex: empty face subset");
    std::vector<Face> faces;
    faces.reserve(face_subset.size());
    for (const auto& f : face_subset) {
        Face key = make_face(f[0], f[1], f[2]);
        if (!s.has_face(key))
            throw PreconditionError("induced_subcomplex: face {" + std::to_string(key[0]) + "," +
                                    std::to_string(key[1]) + "," + std::to_string(key[2]) +
                                    "} is not a face of the complex");
        faces.push_back(key);
    }
    sort_unique(faces);
    return Complex2::make({}, {}, std::move(faces));
}

SimplicialMap::SimplicialMap(Complex2 source, Complex2 target, std::map<Vertex, Vertex> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    for (Vertex v : source_.vertices())
        if (!assignment_.contains(v))
            throw PreconditionError("vertex assignment is not total: missing " + std::to_string(v));
    auto image_of = [&](std::span<const Vertex> simplex) {
        SimplexImage img;
        img.source.assign(simplex.begin(), simplex.end());
        for (Vertex v : simplex) img.image.push_back(assignment_.at(v));
        sort_unique(img.image);
        return img;
    };
    for (const auto& e : source_.edges()) edge_images_.push_back(image_of(e));
    for (const auto& f : source_.faces()) face_images_.push_back(image_of(f));
}

} // namespace lmtopo
