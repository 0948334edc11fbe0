#include "lmtopo/embedding.hpp"

#include <algorithm>
#include <set>

namespace lmtopo {

std::vector<Face> Embedding::image_faces(const Complex2& pattern) const
{
    std::vector<Face> out;
    for (const auto& f : pattern.faces())
        out.push_back(make_face(vertex_map.at(f[0]), vertex_map.at(f[1]), vertex_map.at(f[2])));
    std::sort(out.begin(), out.end());
    return out;
}

HostIndex::HostIndex(const Complex2& host) : host_(host)
{
    faces_.reserve(host.num_faces() * 2);
    for (const auto& f : host.faces()) {
        faces_.insert(f);
        apexes_[Edge{f[1], f[2]}].push_back(f[0]);
        apexes_[Edge{f[0], f[2]}].push_back(f[1]);
        apexes_[Edge{f[0], f[1]}].push_back(f[2]);
    }
    adjacency_set_.reserve(host.num_edges() * 2);
    for (const auto& e : host.edges()) {
        adjacency_set_.insert(e);
        neighbours_[e[0]].push_back(e[1]);
        neighbours_[e[1]].push_back(e[0]);
    }
}

const std::vector<Vertex>& HostIndex::apexes(Vertex a, Vertex b) const
{
    auto it = apexes_.find(make_edge(a, b));
    return it == apexes_.end() ? empty_ : it->second;
}

const std::vector<Vertex>& HostIndex::neighbours(Vertex a) const
{
    auto it = neighbours_.find(a);
    return it == neighbours_.end() ? empty_ : it->second;
}

namespace {

struct Step {
    std::size_t vertex;                                // pattern vertex index placed at this step
    std::vector<std::array<std::size_t, 2>> face_with; // earlier pairs closing a face with it
    std::vector<std::size_t> edge_with;                // earlier neighbours
};

class Matcher {
  public:
    Matcher(const Complex2& pattern, const HostIndex& host, SearchMode mode)
        : pattern_(pattern), host_(host), mode_(mode)
    {
        plan();
    }

    EmbeddingSearch run()
    {
        image_.assign(pattern_.num_vertices(), 0);
        extend(0);
        return std::move(result_);
    }

  private:
    void plan()
    {
        const auto n = pattern_.num_vertices();
        std::vector<std::vector<std::array<std::size_t, 2>>> partners(n);
        std::vector<std::vector<std::size_t>> adjacent(n);
        for (const auto& f : pattern_.faces()) {
            auto a = *pattern_.vertex_index(f[0]);
            auto b = *pattern_.vertex_index(f[1]);
            auto c = *pattern_.vertex_index(f[2]);
            partners[a].push_back({b, c});
            partners[b].push_back({a, c});
            partners[c].push_back({a, b});
        }
        for (const auto& e : pattern_.edges()) {
            auto a = *pattern_.vertex_index(e[0]);
            auto b = *pattern_.vertex_index(e[1]);
            adjacent[a].push_back(b);
            adjacent[b].push_back(a);
        }

        std::vector<bool> placed(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            // most constrained next vertex: closed faces, then placed
            // neighbours, then overall face degree
            std::size_t best = n;
            std::array<std::size_t, 3> best_key{0, 0, 0};
            for (std::size_t u = 0; u < n; ++u) {
                if (placed[u]) continue;
                std::size_t closing = 0;
                for (const auto& [a, b] : partners[u]) closing += (placed[a] && placed[b]) ? 1 : 0;
                std::size_t touching = 0;
                for (auto a : adjacent[u]) touching += placed[a] ? 1 : 0;
                std::array<std::size_t, 3> key{closing, touching, partners[u].size()};
                if (best == n || key > best_key) {
                    best = u;
                    best_key = key;
                }
            }
            Step s{best, {}, {}};
            for (const auto& [a, b] : partners[best])
                if (placed[a] && placed[b]) s.face_with.push_back({a, b});
            for (auto a : adjacent[best])
                if (placed[a]) s.edge_with.push_back(a);
            placed[best] = true;
            steps_.push_back(std::move(s));
        }
    }

    bool done() const { return mode_ == SearchMode::first && result_.count > 0; }

    bool consistent(const Step& s, Vertex candidate) const
    {
        for (const auto& [a, b] : s.face_with)
            if (!host_.has_face(image_[a], image_[b], candidate)) return false;
        for (auto a : s.edge_with)
            if (!host_.has_edge(image_[a], candidate)) return false;
        return true;
    }

    void extend(std::size_t depth)
    {
        if (depth == steps_.size()) {
            ++result_.count;
            if (mode_ != SearchMode::count) {
                Embedding e;
                for (std::size_t i = 0; i < image_.size(); ++i) e.vertex_map[pattern_.vertices()[i]] = image_[i];
                result_.embeddings.push_back(std::move(e));
            }
            return;
        }
        const auto& s = steps_[depth];
        const std::vector<Vertex>* candidates = &host_.host().vertices();
        if (!s.face_with.empty()) {
            candidates = &host_.apexes(image_[s.face_with[0][0]], image_[s.face_with[0][1]]);
        } else if (!s.edge_with.empty()) {
            candidates = &host_.neighbours(image_[s.edge_with[0]]);
        }
        for (Vertex c : *candidates) {
            if (used_.contains(c) || !consistent(s, c)) continue;
            image_[s.vertex] = c;
            used_.insert(c);
            extend(depth + 1);
            used_.erase(c);
            if (done()) return;
        }
    }

    const Complex2& pattern_;
    const HostIndex& host_;
    SearchMode mode_;
    std::vector<Step> steps_;
    std::vector<Vertex> image_;
    std::unordered_set<Vertex> used_;
    EmbeddingSearch result_;
};

} // namespace

EmbeddingSearch find_embedding(const Complex2& pattern, const HostIndex& host, SearchMode mode)
{
    if (pattern.num_faces() == 0 || !pattern.is_pure())
        throw PreconditionError("find_embedding: pattern must be pure with at least one face");
    return Matcher(pattern, host, mode).run();
}

EmbeddingSearch find_embedding(const Complex2& pattern, const Complex2& host, SearchMode mode)
{
    HostIndex index(host);
    return find_embedding(pattern, index, mode);
}

std::size_t count_distinct_images(const Complex2& pattern, const Complex2& host)
{
    auto all = find_embedding(pattern, host, SearchMode::all);
    std::set<std::vector<Face>> images;
    for (const auto& e : all.embeddings) images.insert(e.image_faces(pattern));
    return images.size();
}

std::array<Face, 4> faces_of(const Tetrahedron& t)
{
    return {Face{t[0], t[1], t[2]}, Face{t[0], t[1], t[3]}, Face{t[0], t[2], t[3]}, Face{t[1], t[2], t[3]}};
}

TetrahedraReport find_tetrahedra(const Complex2& host)
{
    HostIndex index(host);
    TetrahedraReport report;
    for (const auto& f : host.faces()) {
        const auto& apexes = index.apexes(f[0], f[1]);
        std::vector<Vertex> tops;
        for (Vertex d : apexes)
            if (d > f[2] && index.has_face(f[0], f[2], d) && index.has_face(f[1], f[2], d)) tops.push_back(d);
        std::sort(tops.begin(), tops.end());
        for (Vertex d : tops) report.tetrahedra.push_back({f[0], f[1], f[2], d});
    }
    std::sort(report.tetrahedra.begin(), report.tetrahedra.end());

    std::unordered_map<Face, std::vector<std::size_t>, SimplexHash> owners;
    for (std::size_t i = 0; i < report.tetrahedra.size(); ++i)
        for (const auto& face : faces_of(report.tetrahedra[i])) owners[face].push_back(i);
    std::set<std::array<std::size_t, 2>> overlaps;
    for (const auto& [face, list] : owners)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) overlaps.insert({list[i], list[j]});
    report.overlaps.assign(overlaps.begin(), overlaps.end());
    report.pairwise_face_disjoint = report.overlaps.empty();
    return report;
}

} // namespace lmtopo
