#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>

#include "lmtopo/complex.hpp"

namespace lmtopo {

/// Malformed face-list input; line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/**
 * Face-list text format: one face per line as three whitespace separated
 * positive integers; `edge a b` adds a bare edge and `vertex a` an isolated
 * vertex; lines whose first non-blank character is '#' are comments; blank
 * lines are ignored.
 */
Complex2 parse_face_list(std::istream& in, const std::string& source = "<input>");
Complex2 parse_face_list_string(const std::string& text);
Complex2 parse_complex_file(const std::filesystem::path& path);

/// Canonical rendering: sorted faces, then edges bounding no face, then
/// vertices on no edge. parse(write(S)) == S.
std::string write_face_list(const Complex2& s);

void write_complex_file(const std::filesystem::path& path, const Complex2& s);

} // namespace lmtopo
