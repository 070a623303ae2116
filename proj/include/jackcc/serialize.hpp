#pragma once

// JSON forms used by the CLI and the theta cache.
//
//   LaurentAlpha: {"minDegree": int, "coeffs": ["num/den", ...]}
//   PowerVec:     {"basis": "p", "n": int, "terms": [{"mu": "2,1", "coeff": <LaurentAlpha>}, ...]}
//   ThetaTable:   {"n": int, "partitions": ["3", "2,1", "1,1,1"],
//                  "theta": [[<LaurentAlpha>, ...], ...], "norm": [<LaurentAlpha>, ...]}
//
// Terms and partitions are listed in reverse-lexicographic order so output is
// byte-stable.

#include "jackcc/exactalg.hpp"
#include "jackcc/jack.hpp"
#include "jackcc/symfunc.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>

namespace jackcc {

nlohmann::json to_json(const LaurentAlpha& a);
LaurentAlpha laurent_from_json(const nlohmann::json& j);

template <class Basis>
nlohmann::json to_json(const SymVec<Basis>& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mu, c] : v.terms()) terms.push_back({{"mu", mu.to_string()}, {"coeff", to_json(c)}});
  return {{"basis", Basis::name}, {"n", v.weight()}, {"terms", std::move(terms)}};
}

PowerVec power_vec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ThetaTable& t);
ThetaTable theta_table_from_json(const nlohmann::json& j);

/// Writes atomically (temp file + rename).
void save_theta_table(const ThetaTable& t, const std::filesystem::path& file);
/// std::nullopt when the file is missing or unreadable.
std::optional<ThetaTable> load_theta_table(const std::filesystem::path& file);

std::filesystem::path theta_cache_file(const std::filesystem::path& dir, int n);

}  // namespace jackcc
