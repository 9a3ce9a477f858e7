#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "discrete_remez/pointset.hpp"

namespace discrete_remez {

// JSON layout:
//   {"dim": n, "box": {"lo": [...], "hi": [...]}, "points": [[...], ...]}
// CSV layout: one point per row; '#' starts a comment. A directive row
//   # box lo_1 .. lo_n hi_1 .. hi_n
// sets the box, which otherwise defaults to [-1, 1]^n.

PointSet parse_pointset_json(std::string_view text);
PointSet parse_pointset_csv(std::string_view text);

std::string pointset_to_json(const PointSet& z);
std::string pointset_to_csv(const PointSet& z);

/// Picks the format from the extension (.csv, anything else is JSON).
PointSet load_pointset(const std::filesystem::path& path);
void save_pointset(const PointSet& z, const std::filesystem::path& path);

}  // namespace discrete_remez
