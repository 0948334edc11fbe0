#include "lmtopo/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

namespace lmtopo {

namespace {

struct Structure {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> neighbours;
    std::vector<std::vector<std::array<std::size_t, 2>>> face_partners;
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<std::array<std::size_t, 3>> faces;
};

Structure index_structure(const Complex2& s)
{
    Structure st;
    st.n = s.num_vertices();
    st.neighbours.resize(st.n);
    st.face_partners.resize(st.n);
    for (const auto& e : s.edges()) {
        auto a = *s.vertex_index(e[0]);
        auto b = *s.vertex_index(e[1]);
        st.neighbours[a].push_back(b);
        st.neighbours[b].push_back(a);
        st.edges.push_back({a, b});
    }
    for (const auto& f : s.faces()) {
        auto a = *s.vertex_index(f[0]);
        auto b = *s.vertex_index(f[1]);
        auto c = *s.vertex_index(f[2]);
        st.face_partners[a].push_back({b, c});
        st.face_partners[b].push_back({a, c});
        st.face_partners[c].push_back({a, b});
        st.faces.push_back({a, b, c});
    }
    return st;
}

using Colouring = std::vector<std::size_t>;

std::size_t count_colours(const Colouring& c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Refines to the coarsest equitable colouring below c. Colours stay dense
// ranks and the relative order of existing colours is preserved.
void refine(const Structure& st, Colouring& colour)
{
    std::size_t classes = count_colours(colour);
    while (true) {
        std::vector<std::vector<std::uint64_t>> sig(st.n);
        for (std::size_t v = 0; v < st.n; ++v) {
            auto& s = sig[v];
            s.push_back(colour[v]);
            std::vector<std::uint64_t> nb;
            for (auto w : st.neighbours[v]) nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            s.push_back(nb.size());
            s.insert(s.end(), nb.begin(), nb.end());
            std::vector<std::uint64_t> fp;
            for (const auto& [a, b] : st.face_partners[v]) {
                auto x = std::min(colour[a], colour[b]);
                auto y = std::max(colour[a], colour[b]);
                fp.push_back(x * st.n + y);
            }
            std::sort(fp.begin(), fp.end());
            s.push_back(fp.size());
            s.insert(s.end(), fp.begin(), fp.end());
        }
        std::vector<std::vector<std::uint64_t>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < st.n; ++v)
            colour[v] = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (distinct.size() == classes) return;
        classes = distinct.size();
    }
}

void put_u32(std::string& out, std::uint32_t x)
{
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((x >> shift) & 0xff));
}

std::string encode(const Structure& st, const Colouring& label)
{
    std::vector<std::array<std::uint32_t, 3>> faces;
    faces.reserve(st.faces.size());
    for (const auto& f : st.faces) {
        std::array<std::uint32_t, 3> g{static_cast<std::uint32_t>(label[f[0]]),
                                       static_cast<std::uint32_t>(label[f[1]]),
                                       static_cast<std::uint32_t>(label[f[2]])};
        std::sort(g.begin(), g.end());
        faces.push_back(g);
    }
    std::sort(faces.begin(), faces.end());
    std::vector<std::array<std::uint32_t, 2>> edges;
    edges.reserve(st.edges.size());
    for (const auto& e : st.edges) {
        auto a = static_cast<std::uint32_t>(label[e[0]]);
        auto b = static_cast<std::uint32_t>(label[e[1]]);
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());

    std::string out;
    put_u32(out, static_cast<std::uint32_t>(st.n));
    put_u32(out, static_cast<std::uint32_t>(edges.size()));
    put_u32(out, static_cast<std::uint32_t>(faces.size()));
    for (const auto& f : faces)
        for (auto x : f) put_u32(out, x);
    for (const auto& e : edges)
        for (auto x : e) put_u32(out, x);
    return out;
}

void search(const Structure& st, Colouring colour, std::optional<std::string>& best)
{
    refine(st, colour);
    if (count_colours(colour) == st.n) {
        auto code = encode(st, colour);
        if (!best || code < *best) best = std::move(code);
        return;
    }
    std::vector<std::size_t> cell_size(st.n, 0);
    for (auto c : colour) ++cell_size[c];
    std::size_t target = 0;
    while (cell_size[target] < 2) ++target;
    for (std::size_t v = 0; v < st.n; ++v) {
        if (colour[v] != target) continue;
        Colouring next = colour;
        for (std::size_t u = 0; u < st.n; ++u) {
            if (colour[u] > target) next[u] = colour[u] + 1;
            else if (colour[u] == target) next[u] = (u == v) ? target : target + 1;
        }
        search(st, std::move(next), best);
    }
}

} // namespace

std::string canonical_form(const Complex2& s)
{
    const auto st = index_structure(s);
    if (st.n == 0) return encode(st, {});
    std::optional<std::string> best;
    search(st, Colouring(st.n, 0), best);
    return *best;
}

std::string to_hex(const std::string& bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

} // namespace lmtopo
