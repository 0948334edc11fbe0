#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lmtopo/complex.hpp"
#include "lmtopo/rational.hpp"

namespace lmtopo {

/// Vertices over faces. Every vertex of the complex is counted, so the
/// identity mu = 1/2 + (2 chi + L) / (2 f) holds for any complex with faces.
Rational mu(const Complex2& s);

/// Sum over all edges of (2 - number of incident faces).
std::int64_t l_invariant(const Complex2& s);

/// Density of a triangulated disc with v vertices, v_internal of them
/// interior: v / (v + v_internal - 2).
Rational disc_mu(std::int64_t v, std::int64_t v_internal);

struct DensityReport {
    Rational mu;
    std::int64_t l_invariant = 0;
    std::int64_t chi = 0;
    std::int64_t f = 0;
    std::int64_t v = 0;
    bool identity_check = false;
};

DensityReport density_report(const Complex2& s);

enum class MuTildeMode { brute, branch_and_bound };

struct MuTildeOptions {
    MuTildeMode mode = MuTildeMode::branch_and_bound;
    /// Largest face count accepted by the brute force mode.
    std::size_t brute_cap = 20;
};

/**
 * Minimum of mu over nonempty pure subcomplexes.
 *
 * The witness is the minimising face set; ties are broken by fewest faces,
 * then by the lexicographically smallest sorted face list, so both modes
 * return the same witness.
 */
struct MuTildeResult {
    Rational value;
    std::vector<Face> witness;
    std::uint64_t nodes_explored = 0;
};

MuTildeResult mu_tilde(const Complex2& s, const MuTildeOptions& options = {});

struct DegreeReport {
    /// degree -> number of vertices with that 1-skeleton degree
    std::map<int, std::int64_t> histogram;
    /// k -> number of vertices of degree <= k, for 1 <= k <= max(20, max degree)
    std::map<int, std::int64_t> l_k;
    Rational average_degree;
    /// k -> ((k - 5) v + 6 chi) / (k - 2) for 6 <= k <= max(20, max degree);
    /// filled only for closed surfaces.
    std::map<int, Rational> lemma_bound;
    bool closed_surface = false;
};

DegreeReport degree_report(const Complex2& s);

} // namespace lmtopo
