#include "weakorder/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace weakorder {

namespace {

using nlohmann::json;

Integer json_integer(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected an integer string");
}

std::vector<IntVector> json_matrix(const json& j, std::size_t ambient, const std::string& name) {
  if (!j.is_array()) throw ParseError("'" + name + "' must be an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    std::string where = name + " row " + std::to_string(r);
    if (!row.is_array()) throw ParseError(where + ": must be an array");
    if (row.size() != ambient)
      throw InvalidFrame(where + ": has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(ambient));
    IntVector v(ambient);
    for (std::size_t c = 0; c < ambient; ++c)
      v[c] = json_integer(row[c], where + " entry " + std::to_string(c));
    rows.push_back(std::move(v));
  }
  return rows;
}

// Frame validation with diagnostics that name rows and show the offending
// quantity.
Frame checked_frame(std::size_t ambient, std::vector<IntVector> rows, const std::string& name) {
  if (rows.empty()) throw InvalidFrame(name + ": no rows");
  if (rows.size() > ambient)
    throw InvalidFrame(name + ": " + std::to_string(rows.size()) + " rows exceed ambient " +
                       std::to_string(ambient));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].is_zero()) throw InvalidFrame(name + " row " + std::to_string(i) + " is zero");
    if (!is_primitive(rows[i]))
      throw InvalidFrame(name + " row " + std::to_string(i) + " " + to_string(rows[i]) +
                         " is not primitive");
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Integer d = dot(rows[i], rows[j]);
      if (d != 0)
        throw InvalidFrame(name + " rows " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not orthogonal (dot = " + d.get_str() + ")");
    }
  return Frame(ambient, std::move(rows));
}

json vector_json(const IntVector& v) {
  json row = json::array();
  for (const auto& c : v) row.push_back(c.get_str());
  return row;
}

json frame_json(const Frame& f) {
  json m = json::array();
  for (const auto& v : f.vectors()) m.push_back(vector_json(v));
  return m;
}

}  // namespace

LatticeElement parse_element(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("element file must be a JSON object");
  if (!j.contains("ambient") || !j["ambient"].is_number_integer() ||
      j["ambient"].get<long long>() < 1)
    throw ParseError("'ambient' must be a positive integer");
  auto ambient = static_cast<std::size_t>(j["ambient"].get<long long>());
  if (!j.contains("frame")) throw ParseError("missing 'frame'");
  for (const auto& item : j.items())
    if (item.key() != "ambient" && item.key() != "frame" && item.key() != "reference")
      throw ParseError("unknown key '" + item.key() + "'");

  Frame cone = checked_frame(ambient, json_matrix(j["frame"], ambient, "frame"), "frame");
  Frame reference = j.contains("reference")
                        ? checked_frame(ambient, json_matrix(j["reference"], ambient, "reference"),
                                        "reference")
                        : Frame::standard(ambient);
  return LatticeElement(std::move(reference), std::move(cone));
}

std::string serialize_element(const LatticeElement& x) {
  json j;
  j["ambient"] = x.ambient_dim();
  j["frame"] = frame_json(x.cone());
  if (!(x.reference() == Frame::standard(x.ambient_dim())))
    j["reference"] = frame_json(x.reference());
  return j.dump() + "\n";
}

LatticeElement read_element_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_element(ss.str());
  } catch (const ReferenceMismatch& e) {
    throw InvalidFrame(path + ": " + e.what());
  } catch (const InvalidFrame& e) {
    throw InvalidFrame(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Ray parse_ray(std::string_view text) {
  std::vector<Integer> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    coords.push_back(parse_integer(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  IntVector v(std::move(coords));
  if (v.is_zero()) throw ParseError("ray must be nonzero");
  return v;
}

std::string serialize_vector(const IntVector& v) { return vector_json(v).dump(); }

std::string serialize_vector(const Vector& v) {
  json row = json::array();
  for (const auto& c : v) row.push_back(to_string(c));
  return row.dump();
}

}  // namespace weakorder
