#include "hinfsyn/system_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hinfsyn {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    // Covers syntax errors and numeric overflow alike; both are malformed
    // input as far as callers are concerned.
    throw ParseError(path.string() + ": " + e.what());
  }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) {
      std::ostringstream os;
      os << where << ": unknown key \"" << item.key() << "\"; expected one of";
      for (const auto& k : allowed) os << " " << k;
      throw ParseError(os.str());
    }
  }
}

Eigen::Index read_dimension(const json& j, const char* key,
                            const std::string& where) {
  if (!j.contains(key)) {
    throw ParseError(where + ": missing required key \"" + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(where + ": \"" + std::string(key) +
                     "\" must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

Eigen::MatrixXd read_matrix(const json& j, const char* key, Eigen::Index rows,
                            Eigen::Index cols, const std::string& where) {
  if (!j.contains(key)) {
    throw ParseError(where + ": missing required key \"" + key + "\"");
  }
  const json& arr = j.at(key);
  if (!arr.is_array() ||
      arr.size() != static_cast<std::size_t>(rows * cols)) {
    std::ostringstream os;
    os << where << ": \"" << key << "\" must be a flat row-major array of "
       << rows * cols << " numbers (" << rows << "x" << cols << "), got "
       << (arr.is_array() ? std::to_string(arr.size()) + " elements"
                          : std::string("a non-array"));
    throw ParseError(os.str());
  }
  Eigen::MatrixXd M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& v = arr.at(static_cast<std::size_t>(i * cols + c));
      if (!v.is_number()) {
        std::ostringstream os;
        os << where << ": \"" << key << "\" element " << i * cols + c
           << " is not a number";
        throw ParseError(os.str());
      }
      M(i, c) = v.get<double>();
    }
  }
  return M;
}

std::optional<double> read_override(const json& j, const char* key,
                                    const std::string& where) {
  if (!j.contains(key)) {
    return std::nullopt;
  }
  const json& v = j.at(key);
  if (!v.is_number() || !(v.get<double>() > 0) ||
      !std::isfinite(v.get<double>())) {
    throw ParseError(where + ": \"" + std::string(key) +
                     "\" must be a positive finite number");
  }
  return v.get<double>();
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      arr.push_back(M(i, j));
    }
  }
  return arr;
}

}  // namespace

LoadedSystem load_system(const std::filesystem::path& path) {
  const std::string where = path.string();
  const json j = parse_file(path);
  if (!j.is_object()) {
    throw ParseError(where + ": top level must be a JSON object");
  }
  reject_unknown_keys(
      j, {"name", "n", "m", "m1", "r", "A", "B", "B1", "C", "D", "alpha0", "eps"},
      where);

  if (!j.contains("name") || !j.at("name").is_string() ||
      j.at("name").get<std::string>().empty()) {
    throw ParseError(where + ": \"name\" must be a nonempty string");
  }

  const Eigen::Index n = read_dimension(j, "n", where);
  const Eigen::Index m = read_dimension(j, "m", where);
  const Eigen::Index m1 = read_dimension(j, "m1", where);
  const Eigen::Index r = read_dimension(j, "r", where);

  LoadedSystem out{
      j.at("name").get<std::string>(),
      Plant(read_matrix(j, "A", n, n, where), read_matrix(j, "B", n, m, where),
            read_matrix(j, "B1", n, m1, where),
            read_matrix(j, "C", r, n, where),
            read_matrix(j, "D", r, m, where)),
      {read_override(j, "alpha0", where), read_override(j, "eps", where)}};
  return out;
}

void write_system(const LoadedSystem& system,
                  const std::filesystem::path& path) {
  if (system.name.empty()) {
    throw InvalidArgumentError("system name must be nonempty");
  }
  json j;
  j["name"] = system.name;
  j["n"] = system.plant.n();
  j["m"] = system.plant.m();
  j["m1"] = system.plant.m1();
  j["r"] = system.plant.r();
  j["A"] = matrix_to_json(system.plant.A());
  j["B"] = matrix_to_json(system.plant.B());
  j["B1"] = matrix_to_json(system.plant.B1());
  j["C"] = matrix_to_json(system.plant.C());
  j["D"] = matrix_to_json(system.plant.D());
  if (system.overrides.alpha0) j["alpha0"] = *system.overrides.alpha0;
  if (system.overrides.eps) j["eps"] = *system.overrides.eps;

  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << j.dump(2) << "\n";
  if (!out) {
    throw IoError("failed while writing " + path.string());
  }
}

Gain load_gain(const std::filesystem::path& path, const Plant& plant) {
  const std::string where = path.string();
  const json j = parse_file(path);
  if (!j.is_object()) {
    throw ParseError(where + ": top level must be a JSON object");
  }
  reject_unknown_keys(j, {"name", "K"}, where);
  return Gain{read_matrix(j, "K", plant.m(), plant.n(), where)};
}

}  // namespace hinfsyn
