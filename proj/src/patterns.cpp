#include "lmtopo/patterns.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lmtopo/canonical.hpp"
#include "lmtopo/collapse.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/random.hpp"
#include "lmtopo/surfaces.hpp"

namespace lmtopo {

std::string to_string(LowDegreeConfig::Kind kind)
{
    return kind == LowDegreeConfig::Kind::a ? "a" : "b";
}

std::string to_string(Verdict verdict)
{
    return verdict == Verdict::certified_asphericable ? "certified_asphericable" : "not_certified";
}

namespace {

std::map<Vertex, int> degree_map(const Complex2& s)
{
    std::map<Vertex, int> out;
    const auto deg = s.vertex_degrees();
    for (std::size_t i = 0; i < deg.size(); ++i) out[s.vertices()[i]] = deg[i];
    return out;
}

std::map<Edge, std::vector<Vertex>> apex_map(const Complex2& s)
{
    std::map<Edge, std::vector<Vertex>> out;
    for (const auto& f : s.faces()) {
        out[Edge{f[1], f[2]}].push_back(f[0]);
        out[Edge{f[0], f[2]}].push_back(f[1]);
        out[Edge{f[0], f[1]}].push_back(f[2]);
    }
    return out;
}

} // namespace

LowDegreeSearch low_degree_configuration(const Complex2& surface, int bound)
{
    if (!classify_surface(surface).is_closed_surface)
        throw PreconditionError("low_degree_configuration: input is not a closed surface");
    const auto deg = degree_map(surface);

    LowDegreeSearch out;
    int best_a = -1;
    std::optional<LowDegreeConfig> found_a;
    for (const auto& f : surface.faces()) {
        int cost = std::max({deg.at(f[0]), deg.at(f[1]), deg.at(f[2])});
        if (best_a < 0 || cost < best_a) best_a = cost;
        if (!found_a && cost <= bound)
            found_a = LowDegreeConfig{LowDegreeConfig::Kind::a, f[0], f[1], f[2], std::nullopt, bound};
    }

    int best_b = -1;
    std::optional<LowDegreeConfig> found_b;
    for (const auto& [e, apexes] : apex_map(surface)) {
        if (apexes.size() != 2) continue;
        const Vertex x = std::min(apexes[0], apexes[1]);
        const Vertex z = std::max(apexes[0], apexes[1]);
        for (int side = 0; side < 2; ++side) {
            const Vertex y = e[side];
            const Vertex w = e[1 - side];
            int cost = std::max({deg.at(x), deg.at(y), deg.at(z)});
            if (best_b < 0 || cost < best_b) best_b = cost;
            if (!found_b && cost <= bound)
                found_b = LowDegreeConfig{LowDegreeConfig::Kind::b, x, y, z, w, bound};
        }
    }

    out.minimal_bound = best_b < 0 ? best_a : std::min(best_a, best_b);
    out.config = found_a ? found_a : found_b;
    return out;
}

Complex2 sigma_pattern()
{
    return catalog("sigma3");
}

std::vector<ListMember> extract_star_unions(const Complex2& sphere, const std::string& description,
                                            int degree_bound, int face_cap)
{
    const auto deg = degree_map(sphere);
    auto low = [&](Vertex v) { return deg.at(v) <= degree_bound; };

    struct Found {
        std::optional<Vertex> w;
        std::optional<Vertex> middle;
    };
    std::map<std::array<Vertex, 3>, Found> triples;
    for (const auto& f : sphere.faces())
        if (low(f[0]) && low(f[1]) && low(f[2])) triples.emplace(f, Found{});
    for (const auto& [e, apexes] : apex_map(sphere)) {
        if (apexes.size() != 2) continue;
        for (int side = 0; side < 2; ++side) {
            const Vertex y = e[side];
            const Vertex w = e[1 - side];
            if (low(y) && low(apexes[0]) && low(apexes[1]))
                triples.emplace(make_face(apexes[0], y, apexes[1]), Found{w, y});
        }
    }

    std::vector<ListMember> out;
    for (const auto& [triple, found] : triples) {
        std::vector<Face> faces;
        for (const auto& f : sphere.faces())
            for (Vertex t : triple)
                if (f[0] == t || f[1] == t || f[2] == t) {
                    faces.push_back(f);
                    break;
                }
        if (faces.size() > static_cast<std::size_t>(face_cap)) continue;
        auto s = Complex2::make({}, {}, std::move(faces));
        bool internal = std::all_of(triple.begin(), triple.end(),
                                    [&](Vertex t) { return link(s, t).shape == LinkShape::cycle; });
        if (!internal) continue;

        // the configuration must be visible inside the extracted complex
        bool shaped = s.has_face(triple);
        if (found.w) {
            shaped = true;
            for (Vertex t : triple)
                if (t != *found.middle) shaped = shaped && s.has_face(make_face(t, *found.middle, *found.w));
        }
        if (!shaped) continue;

        MemberProvenance prov;
        prov.sphere = description;
        prov.triple = triple;
        prov.w = found.w;
        prov.middle = found.middle;
        out.push_back(ListMember{std::move(s), {}, std::move(prov)});
    }
    return out;
}

ForbiddenList build_forbidden_list(const ListParameters& parameters, const std::vector<SphereSource>& spheres,
                                   std::size_t max_lprime)
{
    if (parameters.degree_bound < 3) throw PreconditionError("build_forbidden_list: degree bound must be >= 3");
    if (parameters.face_cap < 4) throw PreconditionError("build_forbidden_list: face cap must be >= 4");

    ForbiddenList list;
    list.parameters = parameters;
    {
        auto sigma = sigma_pattern();
        auto label = canonical_form(sigma);
        MemberProvenance prov;
        prov.sphere = "two tetrahedra sharing a face";
        list.l1.push_back(ListMember{std::move(sigma), std::move(label), std::move(prov)});
    }

    std::set<std::string> seen;
    for (const auto& source : spheres) {
        if (list.truncated) break;
        ++list.spheres_examined;
        for (auto& member : extract_star_unions(source.sphere, source.description, parameters.degree_bound,
                                                parameters.face_cap)) {
            member.label = canonical_form(member.complex);
            if (!seen.insert(member.label).second) continue;
            list.lprime.push_back(std::move(member));
            if (max_lprime > 0 && list.lprime.size() >= max_lprime) {
                list.truncated = true;
                break;
            }
        }
    }

    std::set<std::string> quotient_labels;
    const auto cap = std::max<std::size_t>(30, static_cast<std::size_t>(parameters.face_cap));
    for (std::size_t i = 0; i < list.lprime.size(); ++i) {
        for (auto& q : enumerate_regular_quotients(list.lprime[i].complex, parameters.max_merges, cap)) {
            if (!quotient_labels.insert(q.canonical_label).second) continue;
            MemberProvenance prov = list.lprime[i].provenance;
            prov.parent = i;
            prov.partition = std::move(q.partition);
            list.ldoubleprime.push_back(ListMember{std::move(q.complex), std::move(q.canonical_label), std::move(prov)});
        }
    }
    for (const auto& m : list.ldoubleprime)
        if (find_tetrahedra(m.complex).tetrahedra.empty()) list.l2.push_back(m);
    return list;
}

ForbiddenList build_forbidden_list(const ListParameters& parameters, const SphereBudget& budget)
{
    if (budget.min_vertices < 4 || budget.max_vertices < budget.min_vertices)
        throw PreconditionError("build_forbidden_list: need 4 <= min_vertices <= max_vertices");
    std::vector<SphereSource> spheres;
    const auto span = static_cast<std::uint64_t>(budget.max_vertices - budget.min_vertices + 1);
    for (std::size_t i = 0; i < budget.count; ++i) {
        const auto seed = derive_seed(budget.seed, i);
        const int v = budget.min_vertices + static_cast<int>(splitmix64(seed) % span);
        spheres.push_back(SphereSource{random_sphere_triangulation(v, seed),
                                       "sphere#" + std::to_string(i) + " v=" + std::to_string(v) +
                                           " seed=" + std::to_string(seed)});
    }
    auto list = build_forbidden_list(parameters, spheres, budget.max_lprime);
    list.budget = budget;
    return list;
}

MemberReport verify_list_member(const Complex2& s, int face_cap)
{
    if (face_cap < 1) throw PreconditionError("verify_list_member: face cap must be positive");
    MemberReport r;
    r.f = static_cast<std::int64_t>(s.num_faces());
    const auto free = free_edges(s);
    r.boundary_count = static_cast<std::int64_t>(free.size());
    r.l_invariant = l_invariant(s);
    const std::set<Edge> free_set(free.begin(), free.end());
    for (const auto& f : s.faces()) {
        const auto es = edges_of(f);
        if (std::none_of(es.begin(), es.end(), [&](const Edge& e) { return free_set.contains(e); }))
            ++r.internal_faces;
    }
    const auto collapsed = collapse(s);
    if (collapsed.core.num_faces() > 0) r.closed_sub_mu = mu(collapsed.core);
    r.mu_tilde = r.f > 0 ? mu_tilde(s).value : Rational(0);
    r.bound = Rational(face_cap - 1, face_cap);

    r.l_le_boundary = r.l_invariant <= r.boundary_count;
    r.l_le_f_minus_3 = r.l_invariant <= r.f - 3;
    r.inequality_holds = r.boundary_count <= r.f - 3;
    r.internal_faces_ok = r.internal_faces >= 3;
    r.mu_tilde_ok = r.f > 0 && r.mu_tilde <= r.bound;
    return r;
}

Certificate certify_asphericable(const Complex2& y, const ForbiddenList& list)
{
    Certificate c;
    const auto tetra = find_tetrahedra(y);
    c.tetrahedra = tetra.tetrahedra;
    c.pairwise_face_disjoint = tetra.pairwise_face_disjoint;
    c.note = "a certificate is a sufficient condition; not_certified does not mean the complex is "
             "non-asphericable";
    if (!list.complete) c.note += "; the forbidden list is incomplete, so certified means only that no member "
                                  "of the supplied list embeds";

    const HostIndex host(y);
    c.sigma_free = true;
    for (std::size_t i = 0; i < list.l1.size() && c.sigma_free; ++i) {
        auto hit = find_embedding(list.l1[i].complex, host, SearchMode::first);
        if (hit.count > 0) {
            c.sigma_free = false;
            c.witness = CertificateWitness{"L1[" + std::to_string(i) + "]", hit.embeddings.front(),
                                           hit.embeddings.front().image_faces(list.l1[i].complex)};
        }
    }
    // every member is tried so the reported witness is the largest one that fits
    c.l2_free = true;
    std::optional<CertificateWitness> l2_witness;
    for (std::size_t i = 0; i < list.l2.size(); ++i) {
        const auto& member = list.l2[i].complex;
        if (l2_witness && member.num_faces() <= l2_witness->image.size()) continue;
        auto hit = find_embedding(member, host, SearchMode::first);
        if (hit.count == 0) continue;
        c.l2_free = false;
        l2_witness = CertificateWitness{"L2[" + std::to_string(i) + "]", hit.embeddings.front(),
                                        hit.embeddings.front().image_faces(member)};
    }
    if (!c.witness) c.witness = std::move(l2_witness);
    const bool ok = c.pairwise_face_disjoint && c.sigma_free && c.l2_free;
    c.verdict = ok ? Verdict::certified_asphericable : Verdict::not_certified;
    return c;
}

PruneResult prune_tetrahedra(const Complex2& y)
{
    const auto tetra = find_tetrahedra(y);
    if (!tetra.pairwise_face_disjoint)
        throw PreconditionError("prune_tetrahedra: tetrahedra are not pairwise face disjoint");
    PruneResult out;
    for (const auto& t : tetra.tetrahedra) out.removed.push_back(faces_of(t)[0]);
    std::sort(out.removed.begin(), out.removed.end());
    std::vector<Face> faces;
    std::set_difference(y.faces().begin(), y.faces().end(), out.removed.begin(), out.removed.end(),
                        std::back_inserter(faces));
    out.pruned = Complex2::make(y.vertices(), y.edges(), std::move(faces), y.includes_full_1_skeleton());
    return out;
}

} // namespace lmtopo
