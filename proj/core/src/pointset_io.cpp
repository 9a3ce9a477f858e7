#include "discrete_remez/pointset_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

using nlohmann::json;

namespace {

std::vector<double> read_vector(const json& j, const std::string& where) {
  require(j.is_array(), ErrorCode::kParseError, where + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_number(), ErrorCode::kParseError,
            fmt::format("{}[{}] is not a number", where, i));
    out.push_back(j[i].get<double>());
  }
  return out;
}

// Re-raises construction failures as parse errors so callers see one code.
template <typename F>
auto as_parse_error(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    fail(ErrorCode::kParseError, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_double(std::string_view token, std::size_t line) {
  // libstdc++ 11 lacks floating-point from_chars for some targets; strtod is exact.
  std::string owned(token);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  require(end != owned.c_str() && *end == '\0', ErrorCode::kParseError,
          fmt::format("line {}: '{}' is not a number", line, owned));
  return value;
}

std::vector<double> split_numbers(std::string_view row, std::size_t line) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < row.size()) {
    while (pos < row.size() && (row[pos] == ',' || row[pos] == ' ' || row[pos] == '\t' ||
                                row[pos] == '\r')) {
      ++pos;
    }
    if (pos >= row.size()) break;
    std::size_t end = pos;
    while (end < row.size() && row[end] != ',' && row[end] != ' ' && row[end] != '\t' &&
           row[end] != '\r') {
      ++end;
    }
    out.push_back(parse_double(row.substr(pos, end - pos), line));
    pos = end;
  }
  return out;
}

}  // namespace

PointSet parse_pointset_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParseError, fmt::format("malformed JSON at byte {}", e.byte));
  }
  require(doc.is_object(), ErrorCode::kParseError, "top level must be an object");
  require(doc.contains("dim") && doc["dim"].is_number_integer(), ErrorCode::kParseError,
          "missing integer field 'dim'");
  const auto dim = doc["dim"].get<long long>();
  require(dim >= 1, ErrorCode::kParseError, "'dim' must be >= 1");
  require(doc.contains("box") && doc["box"].is_object(), ErrorCode::kParseError,
          "missing object field 'box'");
  auto lo = read_vector(doc["box"].value("lo", json()), "box.lo");
  auto hi = read_vector(doc["box"].value("hi", json()), "box.hi");
  require(lo.size() == static_cast<std::size_t>(dim) && hi.size() == lo.size(),
          ErrorCode::kParseError, "box arity does not match 'dim'");
  require(doc.contains("points"), ErrorCode::kParseError, "missing field 'points'");
  const json& pts = doc["points"];
  require(pts.is_array(), ErrorCode::kParseError, "'points' must be an array");
  std::vector<double> coords;
  coords.reserve(pts.size() * static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = read_vector(pts[i], fmt::format("points[{}]", i));
    require(p.size() == static_cast<std::size_t>(dim), ErrorCode::kParseError,
            fmt::format("points[{}] has arity {}, expected {}", i, p.size(), dim));
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return as_parse_error([&] { return PointSet(Box(lo, hi), std::move(coords)); });
}

PointSet parse_pointset_csv(std::string_view text) {
  std::vector<double> coords;
  std::vector<double> box_spec;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto first = row.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    row.remove_prefix(first);
    if (row.front() == '#') {
      row.remove_prefix(1);
      const auto k = row.find_first_not_of(" \t");
      if (k != std::string_view::npos && row.substr(k, 3) == "box") {
        box_spec = split_numbers(row.substr(k + 3), line_no);
        require(!box_spec.empty() && box_spec.size() % 2 == 0, ErrorCode::kParseError,
                fmt::format("line {}: box directive needs 2n numbers", line_no));
      }
    } else {
      auto p = split_numbers(row, line_no);
      if (dim == 0) dim = p.size();
      require(p.size() == dim, ErrorCode::kParseError,
              fmt::format("line {}: row has {} columns, expected {}", line_no, p.size(), dim));
      coords.insert(coords.end(), p.begin(), p.end());
    }
    if (end == text.size()) break;
  }
  if (dim == 0) dim = box_spec.empty() ? 1 : box_spec.size() / 2;
  return as_parse_error([&] {
    if (box_spec.empty()) return PointSet(Box::symmetric_unit(dim), std::move(coords));
    require(box_spec.size() == 2 * dim, ErrorCode::kParseError,
            "box directive arity does not match the data columns");
    std::vector<double> lo(box_spec.begin(), box_spec.begin() + static_cast<long>(dim));
    std::vector<double> hi(box_spec.begin() + static_cast<long>(dim), box_spec.end());
    return PointSet(Box(lo, hi), std::move(coords));
  });
}

std::string pointset_to_json(const PointSet& z) {
  json doc;
  doc["dim"] = z.dim();
  doc["box"] = {{"lo", z.box().lo()}, {"hi", z.box().hi()}};
  json pts = json::array();
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto p = z.point(i);
    pts.push_back(std::vector<double>(p.begin(), p.end()));
  }
  doc["points"] = std::move(pts);
  return doc.dump(1) + "\n";
}

std::string pointset_to_csv(const PointSet& z) {
  std::string out = "# box";
  for (double v : z.box().lo()) out += fmt::format(" {:.17g}", v);
  for (double v : z.box().hi()) out += fmt::format(" {:.17g}", v);
  out += "\n";
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto p = z.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out += ',';
      out += fmt::format("{:.17g}", p[k]);
    }
    out += "\n";
  }
  return out;
}

PointSet load_pointset(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".csv") return parse_pointset_csv(text);
  return parse_pointset_json(text);
}

void save_pointset(const PointSet& z, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::kParseError, "cannot write " + path.string());
  out << (path.extension() == ".csv" ? pointset_to_csv(z) : pointset_to_json(z));
}

}  // namespace discrete_remez
