#pragma once

#include <string>

#include "lmtopo/complex.hpp"

namespace lmtopo {

/**
 * Canonical byte label of a complex: two complexes receive equal labels
 * exactly when they are isomorphic.
 *
 * Vertices are partitioned by iterated colour refinement (edge and face
 * neighbourhoods), then every individualisation branch is explored and the
 * lexicographically smallest relabelled encoding is kept. Intended for the
 * small complexes (up to a few dozen faces) that appear in pattern lists;
 * highly symmetric large complexes make the search exponential.
 */
std::string canonical_form(const Complex2& s);

/// Lowercase hexadecimal rendering of a canonical label.
std::string to_hex(const std::string& bytes);

} // namespace lmtopo
