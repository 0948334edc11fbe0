#include "lmtopo/homology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lmtopo {

std::string to_string(Field field)
{
    return field == Field::gf2 ? "gf2" : "rationals";
}

namespace {

using Row = std::uint32_t;

struct OverflowError {};

// int64 arithmetic that bails out instead of wrapping.
struct Checked {
    static std::int64_t mul(std::int64_t a, std::int64_t b)
    {
        std::int64_t r = 0;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b)
    {
        std::int64_t r = 0;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
    static bool is_zero(std::int64_t a) { return a == 0; }
};

struct Big {
    using Int = boost::multiprecision::cpp_int;
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
    static bool is_zero(const Int& a) { return a.is_zero(); }
};

template <typename T>
using Column = std::vector<std::pair<Row, T>>;

template <typename T>
std::vector<Column<T>> boundary_columns(const Complex2& s)
{
    std::vector<Column<T>> cols;
    cols.reserve(s.num_faces());
    for (const auto& f : s.faces()) {
        // d{a,b,c} = {b,c} - {a,c} + {a,b}
        Column<T> col{{static_cast<Row>(*s.edge_index({f[1], f[2]})), T(1)},
                      {static_cast<Row>(*s.edge_index({f[0], f[2]})), T(-1)},
                      {static_cast<Row>(*s.edge_index({f[0], f[1]})), T(1)}};
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        cols.push_back(std::move(col));
    }
    return cols;
}

// col <- a * col - b * other, where a, b are the pivot coefficients of other
// and col. Entries cancelling to zero are dropped.
template <typename Ops, typename T>
void eliminate(Column<T>& col, const Column<T>& other)
{
    const T a = other.back().second;
    const T b = col.back().second;
    Column<T> out;
    out.reserve(col.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
            out.emplace_back(col[i].first, Ops::mul(a, col[i].second));
            ++i;
        } else if (i == col.size() || other[j].first < col[i].first) {
            out.emplace_back(other[j].first, Ops::sub(T(0), Ops::mul(b, other[j].second)));
            ++j;
        } else {
            T v = Ops::sub(Ops::mul(a, col[i].second), Ops::mul(b, other[j].second));
            if (!Ops::is_zero(v)) out.emplace_back(col[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    // divide out the content to keep entries small
    T g(0);
    for (const auto& [r, v] : out) {
        g = Ops::gcd(g, v);
        if (g == T(1)) break;
    }
    if (!Ops::is_zero(g) && g != T(1))
        for (auto& [r, v] : out) v /= g;
    col = std::move(out);
}

template <typename Ops, typename T>
std::size_t rational_rank(const Complex2& s)
{
    auto cols = boundary_columns<T>(s);
    std::vector<std::optional<std::size_t>> owner(s.num_edges());
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty() && owner[col.back().first]) eliminate<Ops>(col, cols[*owner[col.back().first]]);
        if (!col.empty()) {
            owner[col.back().first] = j;
            ++rank;
        }
    }
    return rank;
}

std::size_t gf2_rank(const Complex2& s)
{
    std::vector<std::vector<Row>> cols;
    cols.reserve(s.num_faces());
    for (const auto& f : s.faces()) {
        std::vector<Row> col;
        for (const auto& e : edges_of(f)) col.push_back(static_cast<Row>(*s.edge_index(e)));
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    std::vector<std::optional<std::size_t>> owner(s.num_edges());
    std::size_t rank = 0;
    std::vector<Row> scratch;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty() && owner[col.back()]) {
            const auto& other = cols[*owner[col.back()]];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            owner[col.back()] = j;
            ++rank;
        }
    }
    return rank;
}

} // namespace

std::size_t boundary_rank(const Complex2& s, Field field)
{
    if (field == Field::gf2) return gf2_rank(s);
    try {
        return rational_rank<Checked, std::int64_t>(s);
    } catch (const OverflowError&) {
        return rational_rank<Big, Big::Int>(s);
    }
}

BettiVector betti_numbers(const Complex2& s, Field field)
{
    const auto rank = static_cast<std::int64_t>(boundary_rank(s, field));
    BettiVector b;
    b.field = field;
    b.b0 = static_cast<std::int64_t>(connected_components(s));
    b.b1 = static_cast<std::int64_t>(s.num_edges()) - static_cast<std::int64_t>(s.num_vertices()) + b.b0 - rank;
    b.b2 = static_cast<std::int64_t>(s.num_faces()) - rank;
    return b;
}

} // namespace lmtopo
