#include "lieco/lie_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lieco {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string or integer");
}

Vec vec_from_json(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array() || j.size() != dim) {
    throw std::invalid_argument(what + " must be an array of length " +
                                std::to_string(dim));
  }
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

LieAlgebra lie_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto dim = doc.at("dim").get<long>();
    if (dim < 0) throw std::invalid_argument("dim must be non-negative");
    std::vector<std::string> names;
    if (doc.contains("basis")) {
      names = doc.at("basis").get<std::vector<std::string>>();
      if (names.size() != static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("basis must list dim names");
      }
    } else {
      for (long k = 0; k < dim; ++k) names.push_back("e" + std::to_string(k + 1));
    }
    std::vector<Bracket> brackets;
    if (doc.contains("brackets")) {
      for (const auto& b : doc.at("brackets")) {
        const long i = b.at("i").get<long>(), j = b.at("j").get<long>();
        if (i < 0 || j < 0) throw std::invalid_argument("negative bracket index");
        brackets.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                            vec_from_json(b.at("coeffs"), static_cast<std::size_t>(dim),
                                          "coeffs")});
      }
    }
    return LieAlgebra(std::move(names), brackets);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad Lie algebra file: ") + e.what());
  }
}

LieAlgebra lie_from_json_file(const std::string& path) {
  return lie_from_json_text(read_file(path));
}

std::string lie_to_json_text(const LieAlgebra& lie) {
  json doc;
  doc["dim"] = lie.dim();
  doc["basis"] = lie.names();
  doc["brackets"] = json::array();
  for (const auto& b : lie.nonzero_brackets()) {
    json coeffs = json::array();
    for (const auto& c : b.coeffs) coeffs.push_back(c.str());
    doc["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  return doc.dump(2);
}

std::vector<Vec> parse_vector_list(const std::string& spec, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("algebra has dimension 0");
  std::vector<Rational> flat;
  std::string cleaned = spec;
  for (auto& c : cleaned) {
    if (c == ';') c = ',';
  }
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in '" + spec + "'");
    flat.push_back(Rational::parse(item));
  }
  if (flat.empty() || flat.size() % dim != 0) {
    throw std::invalid_argument("'" + spec + "' does not split into vectors of length " +
                                std::to_string(dim));
  }
  std::vector<Vec> out;
  for (std::size_t k = 0; k < flat.size(); k += dim) {
    out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(k),
                     flat.begin() + static_cast<std::ptrdiff_t>(k + dim));
  }
  return out;
}

std::vector<Vec> projection_rows_from_json_file(const std::string& path,
                                                std::size_t dim) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].size() != dim) {
    throw std::invalid_argument("projection file needs \"rows\" with " +
                                std::to_string(dim) + " entries");
  }
  std::vector<Vec> rows;
  for (const auto& r : doc["rows"]) rows.push_back(vec_from_json(r, dim, "row"));
  return rows;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace lieco
