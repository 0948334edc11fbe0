#pragma once

// Slow, obviously correct reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lmtopo/complex.hpp"
#include "lmtopo/rational.hpp"

namespace oracle {

using lmtopo::Complex2;
using lmtopo::Edge;
using lmtopo::Face;
using lmtopo::Vertex;

inline Face relabel(const Face& f, const std::map<Vertex, Vertex>& m)
{
    return lmtopo::make_face(m.at(f[0]), m.at(f[1]), m.at(f[2]));
}

inline Edge relabel(const Edge& e, const std::map<Vertex, Vertex>& m)
{
    return lmtopo::make_edge(m.at(e[0]), m.at(e[1]));
}

inline Complex2 apply(const Complex2& s, const std::map<Vertex, Vertex>& m)
{
    std::vector<Vertex> vs;
    for (Vertex v : s.vertices()) vs.push_back(m.at(v));
    std::vector<Edge> es;
    for (const auto& e : s.edges()) es.push_back(relabel(e, m));
    std::vector<Face> fs;
    for (const auto& f : s.faces()) fs.push_back(relabel(f, m));
    return Complex2::make(vs, es, fs, s.includes_full_1_skeleton());
}

/// Tries every bijection between the vertex sets.
inline bool isomorphic(const Complex2& a, const Complex2& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.num_faces() != b.num_faces())
        return false;
    std::vector<Vertex> target = b.vertices();
    std::sort(target.begin(), target.end());
    do {
        std::map<Vertex, Vertex> m;
        for (std::size_t i = 0; i < target.size(); ++i) m[a.vertices()[i]] = target[i];
        bool ok = true;
        for (const auto& f : a.faces())
            if (!b.has_face(relabel(f, m))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const auto& e : a.edges())
            if (!b.has_edge(relabel(e, m))) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(target.begin(), target.end()));
    return false;
}

/// Dense Gaussian elimination with exact rationals.
inline std::size_t dense_rank_q(const Complex2& s)
{
    using Q = boost::multiprecision::cpp_rational;
    const auto rows = s.num_edges();
    const auto cols = s.num_faces();
    std::vector<std::vector<Q>> m(rows, std::vector<Q>(cols, Q(0)));
    for (std::size_t j = 0; j < cols; ++j) {
        const auto& f = s.faces()[j];
        // boundary of [a,b,c] = [b,c] - [a,c] + [a,b]
        m[*s.edge_index({f[1], f[2]})][j] = 1;
        m[*s.edge_index({f[0], f[2]})][j] = -1;
        m[*s.edge_index({f[0], f[1]})][j] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Q factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t dense_rank_gf2(const Complex2& s)
{
    const auto rows = s.num_edges();
    const auto cols = s.num_faces();
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& e : lmtopo::edges_of(s.faces()[j])) m[*s.edge_index(e)][j] = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

/// Counts injective maps of pattern vertices into host vertices sending
/// every pattern face onto a host face.
inline std::uint64_t count_embeddings(const Complex2& pattern, const Complex2& host)
{
    const auto& pv = pattern.vertices();
    const auto& hv = host.vertices();
    if (pv.size() > hv.size()) return 0;
    std::uint64_t count = 0;
    std::vector<Vertex> image;
    std::vector<bool> used(hv.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == pv.size()) {
            std::map<Vertex, Vertex> m;
            for (std::size_t k = 0; k < pv.size(); ++k) m[pv[k]] = image[k];
            for (const auto& f : pattern.faces())
                if (!host.has_face(relabel(f, m))) return;
            ++count;
            return;
        }
        for (std::size_t h = 0; h < hv.size(); ++h) {
            if (used[h]) continue;
            used[h] = true;
            image.push_back(hv[h]);
            self(self, i + 1);
            image.pop_back();
            used[h] = false;
        }
    };
    rec(rec, 0);
    return count;
}

/// Minimum of (vertices used) / (faces) over every nonempty face subset.
inline lmtopo::Rational min_density(const Complex2& s)
{
    const auto& fs = s.faces();
    lmtopo::Rational best(-1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << fs.size()); ++mask) {
        std::set<Vertex> vs;
        std::int64_t f = 0;
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (mask >> i & 1) {
                ++f;
                vs.insert(fs[i].begin(), fs[i].end());
            }
        lmtopo::Rational r(static_cast<std::int64_t>(vs.size()), f);
        if (best < 0 || r < best) best = r;
    }
    return best;
}

inline std::vector<std::array<Vertex, 4>> tetrahedra(const Complex2& s)
{
    std::vector<std::array<Vertex, 4>> out;
    const auto& v = s.vertices();
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            for (std::size_t c = b + 1; c < v.size(); ++c)
                for (std::size_t d = c + 1; d < v.size(); ++d)
                    if (s.has_face({v[a], v[b], v[c]}) && s.has_face({v[a], v[b], v[d]}) &&
                        s.has_face({v[a], v[c], v[d]}) && s.has_face({v[b], v[c], v[d]}))
                        out.push_back({v[a], v[b], v[c], v[d]});
    return out;
}

/// Random complex on n vertices keeping each triple with probability p and
/// adding a few bare edges.
inline Complex2 random_complex(int n, double p, std::mt19937_64& rng, int bare_edges = 0)
{
    std::bernoulli_distribution keep(p);
    std::vector<Face> faces;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            for (Vertex c = b + 1; c <= n; ++c)
                if (keep(rng)) faces.push_back({a, b, c});
    std::uniform_int_distribution<Vertex> pick(1, n);
    std::vector<Edge> edges;
    for (int i = 0; i < bare_edges; ++i) {
        Vertex a = pick(rng), b = pick(rng);
        if (a != b) edges.push_back(lmtopo::make_edge(a, b));
    }
    return Complex2::make({}, edges, faces);
}

inline std::map<Vertex, Vertex> random_relabeling(const Complex2& s, std::mt19937_64& rng)
{
    std::vector<Vertex> targets(s.num_vertices());
    std::iota(targets.begin(), targets.end(), 100);
    std::shuffle(targets.begin(), targets.end(), rng);
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < targets.size(); ++i) m[s.vertices()[i]] = targets[i];
    return m;
}

} // namespace oracle
