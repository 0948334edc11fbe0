#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lmtopo/complex.hpp"

namespace lmtopo {

/// Names accepted by catalog().
const std::vector<std::string>& catalog_names();

/// Small named complexes: tetrahedron, bipyramid5, octahedron, icosahedron,
/// rp2_six, and sigma1..sigma3 (two tetrahedra sharing 1, 2 or 3 vertices).
Complex2 catalog(std::string_view name);

struct SphereOptions {
    /// Random flip attempts after each subdivision.
    int flips_per_subdivision = 1;
    /// Random flip attempts per vertex once the target size is reached.
    int final_flips_per_vertex = 3;
};

/**
 * Simplicial triangulation of the 2-sphere with exactly `vertices` vertices.
 * Starts from the tetrahedron and alternates random 1-to-3 face subdivisions
 * with random edge flips; a flip is applied only if the new edge is absent.
 * Deterministic per seed. Not a uniform sample.
 */
Complex2 random_sphere_triangulation(int vertices, std::uint64_t seed, const SphereOptions& options = {});

/// m x k grid on the torus: vertex (i, j) has id i * k + j + 1, faces
/// {(i,j),(i+1,j),(i+1,j+1)} and {(i,j),(i,j+1),(i+1,j+1)} mod (m, k).
/// Throws PreconditionError unless the result is a simplicial torus.
Complex2 grid_torus_triangulation(int m, int k);

/// Applies `attempts` random legal edge flips to a closed surface. The
/// topology and vertex set are preserved.
Complex2 flip_perturb(const Complex2& surface, int attempts, std::uint64_t seed);

} // namespace lmtopo
