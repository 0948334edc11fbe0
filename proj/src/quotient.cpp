#include "lmtopo/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lmtopo/canonical.hpp"

namespace lmtopo {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::degenerate_simplex: return "degenerate_simplex";
    case ViolationKind::shared_edge_images: return "shared_edge_images";
    case ViolationKind::not_surjective: return "not_surjective";
    }
    return "degenerate_simplex";
}

namespace {

std::vector<Vertex> as_vector(std::span<const Vertex> s)
{
    return {s.begin(), s.end()};
}

std::size_t shared_vertices(const Face& a, const Face& b)
{
    std::size_t n = 0;
    for (Vertex x : a)
        for (Vertex y : b) n += (x == y) ? 1 : 0;
    return n;
}

// Conditions (1) and (2) on an already recorded map.
RegularityCheck check_conditions(const SimplicialMap& map)
{
    RegularityCheck out;
    std::map<std::vector<Vertex>, std::size_t> edge_preimages;
    for (const auto& img : map.edge_images())
        if (img.image.size() == 2) ++edge_preimages[img.image];
    for (const auto& [image, count] : edge_preimages) out.duplicated_edge_images += count > 1 ? 1 : 0;

    QuotientViolation degenerate{ViolationKind::degenerate_simplex, {}};
    for (const auto& img : map.face_images())
        if (img.image.size() != 3) degenerate.witnesses.push_back(img.source);
    for (const auto& img : map.edge_images())
        if (img.image.size() != 2) degenerate.witnesses.push_back(img.source);
    if (!degenerate.witnesses.empty()) {
        out.violation = std::move(degenerate);
        return out;
    }

    std::map<std::vector<Vertex>, std::vector<Face>> by_image;
    for (const auto& img : map.face_images())
        by_image[img.image].push_back(Face{img.source[0], img.source[1], img.source[2]});
    QuotientViolation folded{ViolationKind::shared_edge_images, {}};
    for (const auto& [image, faces] : by_image)
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = i + 1; j < faces.size(); ++j)
                if (shared_vertices(faces[i], faces[j]) >= 2) {
                    folded.witnesses.push_back(as_vector(faces[i]));
                    folded.witnesses.push_back(as_vector(faces[j]));
                }
    if (!folded.witnesses.empty()) {
        out.violation = std::move(folded);
        return out;
    }
    out.regular = true;
    return out;
}

std::string simplex_string(std::span<const Vertex> s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

} // namespace

RegularityCheck is_regular_quotient(const SimplicialMap& map)
{
    const auto& target = map.target();
    for (const auto& img : map.face_images()) {
        if (img.image.size() != 3 || !target.has_face({img.image[0], img.image[1], img.image[2]}))
            throw PreconditionError("non-simplicial map: image of face " + simplex_string(img.source) +
                                    " is not a target face");
    }
    for (const auto& img : map.edge_images()) {
        bool ok = img.image.size() == 2 ? target.has_edge({img.image[0], img.image[1]})
                                        : target.has_vertex(img.image[0]);
        if (!ok)
            throw PreconditionError("non-simplicial map: image of edge " + simplex_string(img.source) +
                                    " is not a target simplex");
    }
    for (const auto& [v, w] : map.assignment())
        if (!target.has_vertex(w))
            throw PreconditionError("non-simplicial map: vertex image " + std::to_string(w) + " is not in the target");

    // surjectivity
    std::set<Vertex> hit_vertices;
    std::set<std::vector<Vertex>> hit;
    for (Vertex v : map.source().vertices()) hit_vertices.insert(map(v));
    for (const auto& img : map.edge_images()) hit.insert(img.image);
    for (const auto& img : map.face_images()) {
        hit.insert(img.image);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) hit.insert({img.image[i], img.image[j]});
    }
    QuotientViolation missed{ViolationKind::not_surjective, {}};
    for (Vertex v : target.vertices())
        if (!hit_vertices.contains(v)) missed.witnesses.push_back({v});
    for (const auto& e : target.edges())
        if (!hit.contains(as_vector(e))) missed.witnesses.push_back(as_vector(e));
    for (const auto& f : target.faces())
        if (!hit.contains(as_vector(f))) missed.witnesses.push_back(as_vector(f));

    auto out = check_conditions(map);
    if (!missed.witnesses.empty()) {
        out.regular = false;
        out.violation = std::move(missed);
    }
    return out;
}

QuotientSpec quotient_by_partition(const Complex2& s, const Partition& partition)
{
    std::map<Vertex, Vertex> assignment;
    for (const auto& cls : partition) {
        if (cls.empty()) throw PreconditionError("quotient_by_partition: empty class");
        const Vertex rep = *std::min_element(cls.begin(), cls.end());
        for (Vertex v : cls) {
            if (!s.has_vertex(v))
                throw PreconditionError("quotient_by_partition: " + std::to_string(v) + " is not a vertex");
            if (!assignment.emplace(v, rep).second)
                throw PreconditionError("quotient_by_partition: vertex " + std::to_string(v) +
                                        " appears in two classes");
        }
    }
    for (Vertex v : s.vertices())
        if (!assignment.contains(v))
            throw PreconditionError("quotient_by_partition: vertex " + std::to_string(v) + " is not covered");

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    for (Vertex v : s.vertices()) vertices.push_back(assignment.at(v));
    for (const auto& e : s.edges()) {
        Vertex a = assignment.at(e[0]);
        Vertex b = assignment.at(e[1]);
        if (a != b) edges.push_back(make_edge(a, b));
    }
    for (const auto& f : s.faces()) {
        Face g = make_face(assignment.at(f[0]), assignment.at(f[1]), assignment.at(f[2]));
        if (g[0] != g[1] && g[1] != g[2]) faces.push_back(g);
        else if (g[0] != g[2]) edges.push_back(Edge{g[0], g[2]});
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    Partition sorted_partition = partition;
    for (auto& cls : sorted_partition) std::sort(cls.begin(), cls.end());
    std::sort(sorted_partition.begin(), sorted_partition.end());

    SimplicialMap map(s, Complex2::make(std::move(vertices), std::move(edges), std::move(faces)), assignment);
    auto check = check_conditions(map);
    return QuotientSpec{std::move(sorted_partition), std::move(map), check.regular, std::move(check.violation),
                        check.duplicated_edge_images};
}

namespace {

class QuotientEnumerator {
  public:
    QuotientEnumerator(const Complex2& s, int max_merges) : s_(s), max_merges_(max_merges)
    {
        const auto n = s.num_vertices();
        conflict_.assign(n, std::vector<bool>(n, false));
        auto mark = [&](Vertex a, Vertex b) {
            auto i = *s.vertex_index(a);
            auto j = *s.vertex_index(b);
            conflict_[i][j] = conflict_[j][i] = true;
        };
        // merging adjacent vertices degenerates an edge
        for (const auto& e : s.edges()) mark(e[0], e[1]);
        // merging the two apexes over an edge folds the adjacent faces
        std::map<Edge, std::vector<Vertex>> opposite;
        for (const auto& f : s.faces()) {
            opposite[Edge{f[1], f[2]}].push_back(f[0]);
            opposite[Edge{f[0], f[2]}].push_back(f[1]);
            opposite[Edge{f[0], f[1]}].push_back(f[2]);
        }
        for (const auto& [e, apexes] : opposite)
            for (std::size_t i = 0; i < apexes.size(); ++i)
                for (std::size_t j = i + 1; j < apexes.size(); ++j) mark(apexes[i], apexes[j]);
    }

    std::vector<RegularQuotient> run()
    {
        assign(0, 0);
        return std::move(found_);
    }

  private:
    void assign(std::size_t v, int merges)
    {
        const auto n = s_.num_vertices();
        if (v == n) {
            emit();
            return;
        }
        classes_.push_back({v});
        assign(v + 1, merges);
        classes_.pop_back();
        if (merges >= max_merges_) return;
        for (auto& cls : classes_) {
            bool ok = std::none_of(cls.begin(), cls.end(), [&](std::size_t u) { return conflict_[u][v]; });
            if (!ok) continue;
            cls.push_back(v);
            assign(v + 1, merges + 1);
            cls.pop_back();
        }
    }

    void emit()
    {
        Partition partition;
        for (const auto& cls : classes_) {
            std::vector<Vertex> named;
            for (auto i : cls) named.push_back(s_.vertices()[i]);
            partition.push_back(std::move(named));
        }
        auto spec = quotient_by_partition(s_, partition);
        if (!spec.regular) return;
        auto label = canonical_form(spec.map.target());
        if (!labels_.insert(label).second) return;
        found_.push_back(RegularQuotient{spec.map.target(), std::move(spec.partition), std::move(label)});
    }

    const Complex2& s_;
    int max_merges_;
    std::vector<std::vector<bool>> conflict_;
    std::vector<std::vector<std::size_t>> classes_;
    std::set<std::string> labels_;
    std::vector<RegularQuotient> found_;
};

} // namespace

std::vector<RegularQuotient> enumerate_regular_quotients(const Complex2& s, int max_merges, std::size_t face_cap)
{
    if (s.num_faces() > face_cap)
        throw PreconditionError("enumerate_regular_quotients: " + std::to_string(s.num_faces()) +
                                " faces exceed the cap of " + std::to_string(face_cap));
    if (max_merges < 0) throw PreconditionError("enumerate_regular_quotients: max_merges must be >= 0");
    return QuotientEnumerator(s, max_merges).run();
}

} // namespace lmtopo
