#include "starlike/series_io.hpp"

#include <fstream>

#include "starlike/error.hpp"

namespace starlike {

nlohmann::json complex_to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json series_to_json(const PowerSeries& s) {
  auto out = nlohmann::json::array();
  for (const cplx& c : s.coeffs()) out.push_back(complex_to_json(c));
  return out;
}

PowerSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw MathError(ErrorCode::InvalidArgument, "series must be a non-empty JSON array");
  }
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    if (e.is_number()) {
      coeffs.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw MathError(ErrorCode::InvalidArgument, "coefficient " + std::to_string(k) + " is not an [re, im] pair");
    }
  }
  return PowerSeries(std::move(coeffs));
}

PowerSeries read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MathError(ErrorCode::InvalidArgument, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorCode::InvalidArgument, path.string() + ": " + e.what());
  }
  return series_from_json(j);
}

}  // namespace starlike
