#include "lmtopo/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lmtopo/random.hpp"

namespace lmtopo {

std::string to_string(CollapseOutcome outcome)
{
    switch (outcome) {
    case CollapseOutcome::graph: return "graph";
    case CollapseOutcome::closed_core: return "closed_core";
    case CollapseOutcome::mixed: return "mixed";
    }
    return "graph";
}

CollapseResult collapse(const Complex2& s, const CollapseOptions& options)
{
    std::map<Edge, std::set<Face>> incident;
    for (const auto& e : s.edges()) incident[e];
    for (const auto& f : s.faces())
        for (const auto& e : edges_of(f)) incident[e].insert(f);

    std::set<Edge> free;
    for (const auto& [e, fs] : incident)
        if (fs.size() == 1) free.insert(e);

    std::optional<Rng> rng;
    if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

    CollapseResult result;
    while (!free.empty()) {
        auto it = free.begin();
        if (rng) std::advance(it, static_cast<std::ptrdiff_t>(uniform_index(*rng, free.size())));
        const Edge e = *it;
        free.erase(it);
        const Face f = *incident.at(e).begin();
        result.removed.emplace_back(e, f);
        incident.erase(e);
        for (const auto& g : edges_of(f)) {
            if (g == e) continue;
            auto& fs = incident.at(g);
            fs.erase(f);
            if (fs.size() == 1) free.insert(g);
            else free.erase(g);
        }
    }

    std::set<Face> faces;
    std::vector<Edge> edges;
    for (const auto& [e, fs] : incident) {
        edges.push_back(e);
        faces.insert(fs.begin(), fs.end());
        if (fs.empty()) result.residual_graph.push_back(e);
    }
    std::vector<Face> face_list(faces.begin(), faces.end());
    result.core = Complex2::make({}, {}, face_list);
    result.remaining = Complex2::make(s.vertices(), std::move(edges), std::move(face_list), s.includes_full_1_skeleton());
    if (faces.empty()) result.outcome = CollapseOutcome::graph;
    else if (result.residual_graph.empty()) result.outcome = CollapseOutcome::closed_core;
    else result.outcome = CollapseOutcome::mixed;
    return result;
}

} // namespace lmtopo
