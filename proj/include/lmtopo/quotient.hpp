#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lmtopo/complex.hpp"

namespace lmtopo {

using Partition = std::vector<std::vector<Vertex>>;

enum class ViolationKind {
    degenerate_simplex, ///< some simplex loses dimension under the map
    shared_edge_images, ///< two faces sharing an edge have the same image
    not_surjective      ///< some target simplex is not hit
};

std::string to_string(ViolationKind kind);

struct QuotientViolation {
    ViolationKind kind;
    /// Offending source simplices (or, for not_surjective, target simplices).
    std::vector<std::vector<Vertex>> witnesses;
};

struct RegularityCheck {
    bool regular = false;
    std::optional<QuotientViolation> violation;
    /// Number of target edges hit by more than one source edge; reported
    /// for information only.
    std::size_t duplicated_edge_images = 0;
};

/**
 * Decides whether a simplicial map exhibits its target as a regular
 * simplicial quotient: surjective, no simplex changes dimension, and two
 * distinct faces with the same image never share an edge.
 *
 * Throws PreconditionError if some face image is not a target face or some
 * edge image is not a target simplex.
 */
RegularityCheck is_regular_quotient(const SimplicialMap& map);

struct QuotientSpec {
    Partition partition;
    SimplicialMap map;
    bool regular = false;
    std::optional<QuotientViolation> violation;
    std::size_t duplicated_edge_images = 0;
};

/// Identifies the vertices in each class (onto the smallest member) and
/// checks regularity. Degenerate images become lower dimensional simplices
/// of the quotient. Throws PreconditionError unless the classes are
/// disjoint and cover the vertices.
QuotientSpec quotient_by_partition(const Complex2& s, const Partition& partition);

struct RegularQuotient {
    Complex2 complex;
    Partition partition;
    std::string canonical_label;
};

/// All regular quotients obtainable with at most max_merges identifications
/// (vertex count drops by at most max_merges), one per isomorphism type,
/// starting with the trivial quotient.
std::vector<RegularQuotient> enumerate_regular_quotients(const Complex2& s, int max_merges,
                                                         std::size_t face_cap = 30);

} // namespace lmtopo
