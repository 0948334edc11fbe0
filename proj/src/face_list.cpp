#include "lmtopo/face_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace lmtopo {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

} // namespace

Complex2 parse_face_list(std::istream& in, const std::string& source)
{
    std::vector<Face> faces;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    std::set<Face> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#') continue;

        auto vertex_at = [&](const Token& t) {
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
                throw ParseError(source, line_no, t.column, "expected a vertex id, got '" + std::string(t.text) + "'");
            if (v <= 0) throw ParseError(source, line_no, t.column, "vertex ids must be positive");
            return v;
        };
        auto expect_count = [&](std::size_t n, const char* what) {
            if (tokens.size() != n)
                throw ParseError(source, line_no, tokens.size() > n ? tokens[n].column : line.size() + 1,
                                 std::string("expected ") + what);
        };

        if (tokens.front().text == "edge") {
            expect_count(3, "'edge a b'");
            Vertex a = vertex_at(tokens[1]);
            Vertex b = vertex_at(tokens[2]);
            if (a == b) throw ParseError(source, line_no, tokens[2].column, "degenerate edge");
            edges.push_back(make_edge(a, b));
        } else if (tokens.front().text == "vertex") {
            expect_count(2, "'vertex a'");
            vertices.push_back(vertex_at(tokens[1]));
        } else {
            expect_count(3, "three vertex ids");
            Vertex a = vertex_at(tokens[0]);
            Vertex b = vertex_at(tokens[1]);
            Vertex c = vertex_at(tokens[2]);
            if (a == b || a == c || b == c)
                throw ParseError(source, line_no, tokens[0].column, "degenerate face (repeated vertex)");
            Face f = make_face(a, b, c);
            if (!seen.insert(f).second) throw ParseError(source, line_no, tokens[0].column, "duplicate face");
            faces.push_back(f);
        }
    }
    return Complex2::make(std::move(vertices), std::move(edges), std::move(faces));
}

Complex2 parse_face_list_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_face_list(in, "<string>");
}

Complex2 parse_complex_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return parse_face_list(in, path.string());
}

std::string write_face_list(const Complex2& s)
{
    std::ostringstream out;
    std::set<Edge> face_edges;
    for (const auto& f : s.faces()) {
        out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
        for (const auto& e : edges_of(f)) face_edges.insert(e);
    }
    std::set<Vertex> edge_vertices;
    for (const auto& e : s.edges()) {
        edge_vertices.insert(e[0]);
        edge_vertices.insert(e[1]);
        if (!face_edges.contains(e)) out << "edge " << e[0] << ' ' << e[1] << '\n';
    }
    for (Vertex v : s.vertices())
        if (!edge_vertices.contains(v)) out << "vertex " << v << '\n';
    return out.str();
}

void write_complex_file(const std::filesystem::path& path, const Complex2& s)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << write_face_list(s);
}

} // namespace lmtopo
