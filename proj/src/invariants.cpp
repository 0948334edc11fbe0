#include "lmtopo/invariants.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace lmtopo {

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    auto parse = [&](std::string_view part) {
        std::int64_t x = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw Error("malformed rational '" + text + "'");
        return x;
    };
    std::string_view view(text);
    if (slash == std::string::npos) return Rational(parse(view));
    auto den = parse(view.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(parse(view.substr(0, slash)), den);
}

Rational mu(const Complex2& s)
{
    if (s.num_faces() == 0) throw PreconditionError("mu: complex has no faces");
    return Rational(static_cast<std::int64_t>(s.num_vertices()), static_cast<std::int64_t>(s.num_faces()));
}

std::int64_t l_invariant(const Complex2& s)
{
    std::int64_t total = 0;
    for (int d : s.edge_degrees()) total += 2 - d;
    return total;
}

Rational disc_mu(std::int64_t v, std::int64_t v_internal)
{
    if (v < 3 || v_internal < 0 || v_internal > v - 3)
        throw PreconditionError("disc_mu: need v >= 3 and 0 <= v_internal <= v - 3");
    return Rational(v, v + v_internal - 2);
}

DensityReport density_report(const Complex2& s)
{
    DensityReport r;
    r.mu = mu(s);
    r.l_invariant = l_invariant(s);
    r.chi = euler_characteristic(s);
    r.f = static_cast<std::int64_t>(s.num_faces());
    r.v = static_cast<std::int64_t>(s.num_vertices());
    r.identity_check = r.mu == Rational(1, 2) + Rational(2 * r.chi + r.l_invariant, 2 * r.f);
    return r;
}

namespace {

struct Candidate {
    Rational value;
    std::vector<Face> faces;
};

// Smaller value, then fewer faces, then lexicographically smaller list.
bool better(const Rational& value, const std::vector<Face>& faces, const Candidate& incumbent)
{
    if (value != incumbent.value) return value < incumbent.value;
    if (faces.size() != incumbent.faces.size()) return faces.size() < incumbent.faces.size();
    return faces < incumbent.faces;
}

MuTildeResult brute_force(const Complex2& s)
{
    const auto& faces = s.faces();
    const std::size_t f = faces.size();
    // per vertex: bitmask of incident faces
    std::vector<std::uint64_t> incidence(s.num_vertices(), 0);
    for (std::size_t i = 0; i < f; ++i)
        for (Vertex v : faces[i]) incidence[*s.vertex_index(v)] |= (std::uint64_t{1} << i);

    MuTildeResult result;
    bool found = false;
    Candidate best{Rational(0), {}};
    const std::uint64_t total = (std::uint64_t{1} << f) - 1;
    std::vector<Face> subset;
    for (std::uint64_t mask = 1; mask <= total; ++mask) {
        ++result.nodes_explored;
        std::int64_t verts = 0;
        for (auto inc : incidence) verts += (inc & mask) ? 1 : 0;
        const auto size = std::popcount(mask);
        Rational value(verts, size);
        if (found && value > best.value) continue;
        if (found && value == best.value && static_cast<std::size_t>(size) > best.faces.size()) continue;
        subset.clear();
        for (std::size_t i = 0; i < f; ++i)
            if (mask & (std::uint64_t{1} << i)) subset.push_back(faces[i]);
        if (!found || better(value, subset, best)) {
            best = Candidate{value, subset};
            found = true;
        }
    }
    result.value = best.value;
    result.witness = std::move(best.faces);
    return result;
}

/**
 * Branch and bound over vertex sets W, minimising |W| / |F(W)| where F(W)
 * is the set of faces spanned by W. Every minimising face set is spanned by
 * its own vertices (adding a spanned face lowers the ratio), so the optimum
 * over vertex sets equals the optimum over face subsets.
 *
 * Bound: each face gained by adding k new vertices contains at least one of
 * them, so at most the k largest per-vertex gains can be added.
 */
class BranchAndBound {
  public:
    explicit BranchAndBound(const Complex2& s) : s_(s)
    {
        const std::size_t n = s.num_vertices();
        partners_.resize(n);
        for (std::size_t fi = 0; fi < s.num_faces(); ++fi) {
            const auto& f = s.faces()[fi];
            std::array<std::size_t, 3> idx{*s.vertex_index(f[0]), *s.vertex_index(f[1]), *s.vertex_index(f[2])};
            partners_[idx[0]].push_back({idx[1], idx[2]});
            partners_[idx[1]].push_back({idx[0], idx[2]});
            partners_[idx[2]].push_back({idx[0], idx[1]});
        }
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](auto a, auto b) { return partners_[a].size() > partners_[b].size(); });
        state_.assign(n, State::undecided);

        std::int64_t used = 0;
        for (const auto& p : partners_) used += p.empty() ? 0 : 1;
        best_.value = Rational(used, static_cast<std::int64_t>(s.num_faces()));
        best_.faces = s.faces();
    }

    MuTildeResult run()
    {
        branch(0, 0, 0);
        return {best_.value, best_.faces, nodes_};
    }

  private:
    enum class State : std::uint8_t { undecided, in, out };

    std::vector<Face> spanned_faces() const
    {
        std::vector<Face> out;
        for (const auto& f : s_.faces()) {
            bool all = true;
            for (Vertex v : f) all = all && state_[*s_.vertex_index(v)] == State::in;
            if (all) out.push_back(f);
        }
        return out;
    }

    void consider(std::int64_t face_count)
    {
        auto faces = spanned_faces();
        std::vector<Vertex> verts;
        for (const auto& f : faces) verts.insert(verts.end(), f.begin(), f.end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Rational value(static_cast<std::int64_t>(verts.size()), face_count);
        if (better(value, faces, best_)) best_ = Candidate{value, std::move(faces)};
    }

    bool available(std::size_t v) const { return state_[v] != State::out; }

    // Lower bound on |W| / |F(W)| over all completions of the current node.
    std::optional<Rational> bound(std::size_t pos, std::int64_t in_count, std::int64_t face_count) const
    {
        std::vector<std::int64_t> gains;
        for (std::size_t i = pos; i < order_.size(); ++i) {
            auto u = order_[i];
            std::int64_t g = 0;
            for (const auto& [a, b] : partners_[u]) g += (available(a) && available(b)) ? 1 : 0;
            if (g > 0) gains.push_back(g);
        }
        std::sort(gains.begin(), gains.end(), std::greater<>());
        std::optional<Rational> lb;
        if (face_count > 0) lb = Rational(in_count, face_count);
        std::int64_t cumulative = face_count;
        for (std::size_t k = 0; k < gains.size(); ++k) {
            cumulative += gains[k];
            Rational r(in_count + static_cast<std::int64_t>(k) + 1, cumulative);
            if (!lb || r < *lb) lb = r;
        }
        return lb;
    }

    void branch(std::size_t pos, std::int64_t in_count, std::int64_t face_count)
    {
        ++nodes_;
        if (face_count > 0) consider(face_count);
        if (pos == order_.size()) return;
        auto lb = bound(pos, in_count, face_count);
        if (!lb) return;
        if (*lb > best_.value) return;
        if (*lb == best_.value && static_cast<std::size_t>(face_count) > best_.faces.size()) return;

        const auto u = order_[pos];
        std::int64_t gained = 0;
        for (const auto& [a, b] : partners_[u])
            gained += (state_[a] == State::in && state_[b] == State::in) ? 1 : 0;

        state_[u] = State::in;
        branch(pos + 1, in_count + 1, face_count + gained);
        state_[u] = State::out;
        branch(pos + 1, in_count, face_count);
        state_[u] = State::undecided;
    }

    const Complex2& s_;
    std::vector<std::vector<std::array<std::size_t, 2>>> partners_;
    std::vector<std::size_t> order_;
    std::vector<State> state_;
    Candidate best_;
    std::uint64_t nodes_ = 0;
};

} // namespace

MuTildeResult mu_tilde(const Complex2& s, const MuTildeOptions& options)
{
    if (s.num_faces() == 0) throw PreconditionError("mu_tilde: complex has no faces");
    if (options.mode == MuTildeMode::brute) {
        if (s.num_faces() > options.brute_cap || s.num_faces() > 31)
            throw PreconditionError("mu_tilde: brute force cap exceeded (" + std::to_string(s.num_faces()) +
                                    " faces > " + std::to_string(std::min<std::size_t>(options.brute_cap, 31)) + ")");
        return brute_force(s);
    }
    return BranchAndBound(s).run();
}

DegreeReport degree_report(const Complex2& s)
{
    DegreeReport r;
    const auto degrees = s.vertex_degrees();
    int max_degree = 0;
    for (int d : degrees) {
        ++r.histogram[d];
        max_degree = std::max(max_degree, d);
    }
    const int k_max = std::max(20, max_degree);
    for (int k = 1; k <= k_max; ++k)
        r.l_k[k] = std::count_if(degrees.begin(), degrees.end(), [k](int d) { return d <= k; });

    const auto v = static_cast<std::int64_t>(s.num_vertices());
    r.average_degree = v > 0 ? Rational(2 * static_cast<std::int64_t>(s.num_edges()), v) : Rational(0);

    const auto info = classify_surface(s);
    r.closed_surface = info.is_closed_surface;
    if (info.is_closed_surface) {
        for (int k = 6; k <= k_max; ++k)
            r.lemma_bound[k] = Rational((k - 5) * v + 6 * info.euler_characteristic, k - 2);
    }
    return r;
}

} // namespace lmtopo
