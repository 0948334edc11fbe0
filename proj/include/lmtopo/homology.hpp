#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "lmtopo/complex.hpp"

namespace lmtopo {

enum class Field { rationals, gf2 };

std::string to_string(Field field);

struct BettiVector {
    std::int64_t b0 = 0;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    Field field = Field::rationals;
};

/// Rank of the boundary map from faces to edges over the given field.
/// Over the rationals the reduction is fraction free with arbitrary
/// precision integers, so the result is exact.
std::size_t boundary_rank(const Complex2& s, Field field);

/// b0 from connected components, b2 = f - rank, b1 = e - v + b0 - rank.
BettiVector betti_numbers(const Complex2& s, Field field = Field::rationals);

} // namespace lmtopo
