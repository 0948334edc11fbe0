#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmtopo {

/// Base class of every error raised by the library for bad input data or
/// violated preconditions. The CLI maps these onto exit code 1.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A complex could not be constructed (degenerate or duplicate simplex).
class InvalidComplex : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside of its documented domain.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

using Vertex = std::int32_t;

/// Simplices are stored with their vertices in increasing order.
using Edge = std::array<Vertex, 2>;
using Face = std::array<Vertex, 3>;

Edge make_edge(Vertex a, Vertex b);
Face make_face(Vertex a, Vertex b, Vertex c);

/// The three edges of a face, in lexicographic order.
std::array<Edge, 3> edges_of(const Face& face);

struct SimplexHash {
    template <std::size_t N>
    std::size_t operator()(const std::array<Vertex, N>& s) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Vertex v : s) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/**
 * Immutable finite simplicial complex of dimension at most two.
 *
 * Vertices, edges and faces are kept as sorted, duplicate free vectors so
 * that iteration order is deterministic. Every edge of every face and every
 * endpoint of every edge is present. Edges that bound no face are allowed;
 * purity is a query rather than an invariant.
 */
class Complex2 {
  public:
    Complex2() = default;

    /// Validates and closes the given simplices. Throws InvalidComplex on a
    /// degenerate simplex, a non-positive vertex id or a repeated face.
    static Complex2 make(std::vector<Vertex> vertices, std::vector<Edge> edges,
                         std::vector<Face> faces, bool full_1_skeleton = false);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_faces() const { return faces_.size(); }

    /// Model metadata: set for Linial-Meshulam samples.
    bool includes_full_1_skeleton() const { return full_1_skeleton_; }

    bool has_vertex(Vertex v) const;
    bool has_edge(const Edge& e) const;
    bool has_face(const Face& f) const;

    std::optional<std::size_t> vertex_index(Vertex v) const;
    std::optional<std::size_t> edge_index(const Edge& e) const;

    /// Number of faces incident to each edge, aligned with edges().
    std::vector<int> edge_degrees() const;
    int edge_degree(const Edge& e) const;

    /// Number of edges incident to each vertex (1-skeleton degree), aligned
    /// with vertices().
    std::vector<int> vertex_degrees() const;

    /// Faces incident to each vertex, aligned with vertices().
    std::vector<std::vector<Face>> vertex_stars() const;

    /// Every vertex and every edge lies in some face.
    bool is_pure() const;

    friend bool operator==(const Complex2&, const Complex2&) = default;

  private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    bool full_1_skeleton_ = false;
};

/// Complex generated by the given faces plus extra edges (and their
/// endpoints). Edges are deduplicated; a repeated face is an error.
Complex2 build_complex(std::span<const Face> faces, std::span<const Edge> extra_edges = {});

/// Convenience overload taking unsorted triples.
Complex2 build_complex(std::initializer_list<std::array<Vertex, 3>> faces);

/// Pure subcomplex formed by the faces containing x.
Complex2 star(const Complex2& s, Vertex x);

enum class LinkShape { cycle, path, other };

std::string to_string(LinkShape shape);

struct Link {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    LinkShape shape = LinkShape::other;
};

/// Graph of edges {a,b} such that {x,a,b} is a face, with its shape.
Link link(const Complex2& s, Vertex x);

/// Shape of a finite simple graph: a single cycle, a single path
/// (including a single edge), or anything else.
LinkShape classify_graph(std::span<const Vertex> vertices, std::span<const Edge> edges);

std::int64_t euler_characteristic(const Complex2& s);

/// Edges incident to exactly one face.
std::vector<Edge> free_edges(const Complex2& s);

/// Pure with no free edge.
bool is_closed(const Complex2& s);

/// Number of connected components of the 1-skeleton (isolated vertices count).
std::size_t connected_components(const Complex2& s);

enum class SurfaceName { sphere, torus, projective_plane, klein_bottle, other, not_a_surface };

std::string to_string(SurfaceName name);

struct SurfaceInfo {
    bool is_closed_surface = false;
    std::int64_t euler_characteristic = 0;
    bool orientable = false;
    SurfaceName surface_name = SurfaceName::not_a_surface;
};

SurfaceInfo classify_surface(const Complex2& s);

/// Pure subcomplex spanned by a nonempty subset of the faces of s.
Complex2 induced_subcomplex(const Complex2& s, std::span<const Face> face_subset);

/// Image of a source simplex under a vertex map, as a sorted set of
/// distinct target vertices.
struct SimplexImage {
    std::vector<Vertex> source;
    std::vector<Vertex> image;
    int source_dimension() const { return static_cast<int>(source.size()) - 1; }
    int image_dimension() const { return static_cast<int>(image.size()) - 1; }
};

/**
 * Vertex assignment between two complexes. Construction checks that the
 * assignment is total on source vertices and records the image of every
 * source edge and face together with its dimension.
 */
class SimplicialMap {
  public:
    SimplicialMap(Complex2 source, Complex2 target, std::map<Vertex, Vertex> assignment);

    const Complex2& source() const { return source_; }
    const Complex2& target() const { return target_; }
    const std::map<Vertex, Vertex>& assignment() const { return assignment_; }
    Vertex operator()(Vertex v) const { return assignment_.at(v); }

    const std::vector<SimplexImage>& edge_images() const { return edge_images_; }
    const std::vector<SimplexImage>& face_images() const { return face_images_; }

  private:
    Complex2 source_;
    Complex2 target_;
    std::map<Vertex, Vertex> assignment_;
    std::vector<SimplexImage> edge_images_;
    std::vector<SimplexImage> face_images_;
};

} // namespace lmtopo
