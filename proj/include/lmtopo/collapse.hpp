#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmtopo/complex.hpp"

namespace lmtopo {

enum class CollapseOutcome {
    graph,       ///< no faces survive
    closed_core, ///< faces survive and every surviving edge bounds one
    mixed        ///< faces survive next to a residual graph
};

std::string to_string(CollapseOutcome outcome);

struct CollapseResult {
    /// Pure complex of the surviving faces; has no free edge.
    Complex2 core;
    /// (free edge, its unique face) in removal order.
    std::vector<std::pair<Edge, Face>> removed;
    CollapseOutcome outcome = CollapseOutcome::graph;
    /// Surviving edges that bound no surviving face.
    std::vector<Edge> residual_graph;
    /// Everything that survives: core, residual graph and all vertices.
    Complex2 remaining;
};

struct CollapseOptions {
    /// When set, the next free edge is drawn at random from this seed
    /// instead of taking the lexicographically smallest one.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Removes free edges together with their unique face until none is left.
CollapseResult collapse(const Complex2& s, const CollapseOptions& options = {});

} // namespace lmtopo
