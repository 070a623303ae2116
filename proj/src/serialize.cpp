#include "jackcc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace jackcc {

using nlohmann::json;

json to_json(const LaurentAlpha& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(c.get_str());
  return {{"minDegree", a.min_degree()}, {"coeffs", std::move(coeffs)}};
}

LaurentAlpha laurent_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return LaurentAlpha(j.at("minDegree").get<int>(), std::move(coeffs));
}

PowerVec power_vec_from_json(const json& j) {
  if (j.at("basis").get<std::string>() != "p") throw std::invalid_argument("expected a power-sum vector");
  PowerVec v(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    v.add(parse_partition(t.at("mu").get<std::string>()), laurent_from_json(t.at("coeff")));
  }
  return v;
}

json to_json(const ThetaTable& t) {
  json parts = json::array();
  for (const auto& p : t.partitions()) parts.push_back(p.to_string());
  json theta = json::array();
  json norm = json::array();
  for (std::size_t i = 0; i < t.partitions().size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < t.partitions().size(); ++k) row.push_back(to_json(t.theta(i, k)));
    theta.push_back(std::move(row));
    norm.push_back(to_json(t.norm(i)));
  }
  return {{"n", t.n()}, {"partitions", std::move(parts)}, {"theta", std::move(theta)}, {"norm", std::move(norm)}};
}

ThetaTable theta_table_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Partition> parts;
  for (const auto& p : j.at("partitions")) parts.push_back(parse_partition(p.get<std::string>()));
  if (parts != generate_partitions(n)) throw std::invalid_argument("theta table partitions do not match n");
  std::vector<std::vector<LaurentAlpha>> theta;
  for (const auto& row : j.at("theta")) {
    std::vector<LaurentAlpha> r;
    for (const auto& v : row) r.push_back(laurent_from_json(v));
    if (r.size() != parts.size()) throw std::invalid_argument("ragged theta table");
    theta.push_back(std::move(r));
  }
  std::vector<LaurentAlpha> norm;
  for (const auto& v : j.at("norm")) norm.push_back(laurent_from_json(v));
  return ThetaTable(n, std::move(parts), std::move(theta), std::move(norm));
}

std::filesystem::path theta_cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("theta_n" + std::to_string(n) + ".json");
}

void save_theta_table(const ThetaTable& t, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << to_json(t).dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

std::optional<ThetaTable> load_theta_table(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) return std::nullopt;
  try {
    return theta_table_from_json(json::parse(is));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace jackcc
