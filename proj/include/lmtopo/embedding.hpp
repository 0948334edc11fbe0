#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lmtopo/complex.hpp"

namespace lmtopo {

/// Injective vertex map sending every pattern face to a host face.
struct Embedding {
    std::map<Vertex, Vertex> vertex_map;

    /// Sorted image faces.
    std::vector<Face> image_faces(const Complex2& pattern) const;
};

enum class SearchMode { first, count, all };

struct EmbeddingSearch {
    /// Number of embeddings (vertex maps) found; in `first` mode 0 or 1.
    std::uint64_t count = 0;
    /// Filled in `first` and `all` modes.
    std::vector<Embedding> embeddings;
};

/// Lookup tables over a host complex reused across many searches.
class HostIndex {
  public:
    explicit HostIndex(const Complex2& host);

    const Complex2& host() const { return host_; }
    bool has_face(Vertex a, Vertex b, Vertex c) const { return faces_.contains(make_face(a, b, c)); }
    bool has_edge(Vertex a, Vertex b) const { return adjacency_set_.contains(make_edge(a, b)); }
    /// Vertices c with {a, b, c} a face.
    const std::vector<Vertex>& apexes(Vertex a, Vertex b) const;
    const std::vector<Vertex>& neighbours(Vertex a) const;

  private:
    const Complex2& host_;
    std::unordered_set<Face, SimplexHash> faces_;
    std::unordered_set<Edge, SimplexHash> adjacency_set_;
    std::unordered_map<Edge, std::vector<Vertex>, SimplexHash> apexes_;
    std::unordered_map<Vertex, std::vector<Vertex>> neighbours_;
    std::vector<Vertex> empty_;
};

/**
 * Backtracking search for simplicial embeddings of a pure pattern into a
 * host. Pattern vertices are visited in connectivity order; a vertex closing
 * a face draws its candidates from the host apexes over the already placed
 * edge, otherwise from host neighbours of a placed vertex.
 *
 * The host is referenced, not copied; it must outlive the call.
 */
EmbeddingSearch find_embedding(const Complex2& pattern, const HostIndex& host, SearchMode mode);
EmbeddingSearch find_embedding(const Complex2& pattern, const Complex2& host, SearchMode mode);

/// Number of distinct image face sets among all embeddings.
std::size_t count_distinct_images(const Complex2& pattern, const Complex2& host);

using Tetrahedron = std::array<Vertex, 4>;

std::array<Face, 4> faces_of(const Tetrahedron& t);

struct TetrahedraReport {
    std::vector<Tetrahedron> tetrahedra;
    bool pairwise_face_disjoint = true;
    /// Index pairs of tetrahedra sharing a face.
    std::vector<std::array<std::size_t, 2>> overlaps;
};

/// All 4-vertex sets spanning four faces, in lexicographic order.
TetrahedraReport find_tetrahedra(const Complex2& host);

} // namespace lmtopo
