#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lmtopo/collapse.hpp"
#include "lmtopo/complex.hpp"
#include "lmtopo/embedding.hpp"
#include "lmtopo/homology.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/patterns.hpp"
#include "lmtopo/quotient.hpp"
#include "lmtopo/stochastic.hpp"

// JSON and CSV renderings of every result type. Rationals are always
// emitted as "p/q" strings.
namespace lmtopo {

using Json = nlohmann::ordered_json;

Json faces_json(std::span<const Face> faces);
Json complex_json(const Complex2& s);

Json to_json(const DensityReport& r);
Json to_json(const MuTildeResult& r);
Json to_json(const DegreeReport& r);
Json to_json(const BettiVector& b);
Json to_json(const SurfaceInfo& info);
Json to_json(const CollapseResult& r);
Json to_json(const QuotientSpec& q);
Json to_json(const LowDegreeSearch& r);
Json to_json(const MemberReport& r);
Json to_json(const Certificate& c);
Json to_json(const Embedding& e);

/// `include_timing` adds wall_time_seconds, which makes output
/// non-reproducible.
Json to_json(const ThresholdReport& r, bool include_timing = false);
Json to_json(const BettiReport& r, bool include_timing = false);
Json to_json(const CollapseReport& r, bool include_timing = false);

/// One header line and one row per grid cell.
std::string to_csv(const ThresholdReport& r);
std::string to_csv(const BettiReport& r);
std::string to_csv(const CollapseReport& r);

/// Writes face-list files for every member plus manifest.json.
void save_forbidden_list(const std::filesystem::path& dir, const ForbiddenList& list);

/// Reads a directory written by save_forbidden_list; canonical labels are
/// recomputed and must match the manifest.
ForbiddenList load_forbidden_list(const std::filesystem::path& dir);

} // namespace lmtopo
