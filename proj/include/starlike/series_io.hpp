#pragma once

#include <filesystem>

#include "json.hpp"
#include "starlike/power_series.hpp"

namespace starlike {

/// Series are exchanged as JSON arrays of [re, im] pairs, index = power of z.
nlohmann::json series_to_json(const PowerSeries& s);

/// Throws InvalidArgument on anything but a non-empty array of numeric pairs
/// (a bare number is accepted as a real coefficient).
PowerSeries series_from_json(const nlohmann::json& j);

PowerSeries read_series_file(const std::filesystem::path& path);

nlohmann::json complex_to_json(cplx z);

}  // namespace starlike
