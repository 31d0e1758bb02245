#include "coarsedim/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coarsedim/error.hpp"

namespace coarsedim {

namespace {

template <typename T>
T parseInteger(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& arrayField(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("field '") + key + "' must be an array");
  return j.at(key);
}

GridPoint gridPointFromJson(const Json& j, int dimension) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dimension))
    throw ParseError("grid point " + j.dump() + " must have " + std::to_string(dimension) + " coordinates");
  GridPoint p;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("grid coordinate " + c.dump() + " is not an integer");
    p.push_back(c.get<Coord>());
  }
  return p;
}

}  // namespace

Json ordinalToJson(const Ordinal& xi) {
  if (xi.isZero()) return 0;
  Json out = Json::array();
  for (const auto& t : xi.terms()) {
    Json term = Json::object();
    term["exp"] = ordinalToJson(t.exponent);
    term["coef"] = t.coef;
    out.push_back(std::move(term));
  }
  return out;
}

Ordinal ordinalFromJson(const Json& j) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return Ordinal::natural(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Ordinal::parse(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (!j.is_array()) throw ParseError("ordinal must be a nonnegative integer, a string or a term array: " + j.dump());
  std::vector<CnfTerm> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp")) throw ParseError("ordinal term " + t.dump() + " lacks 'exp'");
    const auto coef = t.contains("coef") ? field<std::int64_t>(t, "coef") : 1;
    if (coef < 1) throw ParseError("ordinal coefficient must be positive in " + t.dump());
    terms.push_back(CnfTerm{ordinalFromJson(t.at("exp")), static_cast<std::uint64_t>(coef)});
  }
  try {
    return Ordinal::fromTerms(std::move(terms));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json familyToJson(const ExplicitFamily& family) {
  Json members = Json::array();
  for (const auto& s : family.members()) members.push_back(s.elements());
  Json out = Json::object();
  out["members"] = std::move(members);
  return out;
}

ExplicitFamily familyFromJson(const Json& j) {
  std::vector<FinSet> members;
  for (const auto& m : arrayField(j, "members")) {
    if (!m.is_array()) throw ParseError("family member " + m.dump() + " is not an array");
    std::vector<Element> elements;
    for (const auto& e : m) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 1 || e.get<std::int64_t>() > 0xffffffffLL)
        throw ParseError("family element " + e.dump() + " is not a positive integer");
      elements.push_back(e.get<Element>());
    }
    try {
      members.emplace_back(std::move(elements));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  try {
    return ExplicitFamily(std::move(members));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

FinSet parseFinSet(std::string_view text) {
  std::vector<Element> elements;
  for (auto part : split(text, ',')) elements.push_back(parseInteger<Element>(part, "set element"));
  try {
    return FinSet(std::move(elements));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

TauLabel parseTau(std::string_view text) {
  FinSet elements = parseFinSet(text);
  try {
    return TauLabel(std::move(elements));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Box parseBox(std::string_view text) {
  Box box;
  for (auto part : split(text, ',')) {
    const auto bounds = split(part, ':');
    if (bounds.size() != 2) throw ParseError("box range '" + std::string(part) + "' must be lo:hi");
    box.push_back({parseInteger<Coord>(bounds[0], "box bound"), parseInteger<Coord>(bounds[1], "box bound")});
  }
  return box;
}

std::vector<LatticePoint> readPointsCsv(std::istream& in) {
  std::vector<LatticePoint> points;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ';');
    try {
      TauLabel label = parseTau(fields[0]);
      std::vector<Coord> coords;
      for (std::size_t i = 1; i < fields.size(); ++i) coords.push_back(parseInteger<Coord>(fields[i], "coordinate"));
      points.emplace_back(std::move(label), std::move(coords));
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return points;
}

void writePointsCsv(std::ostream& out, std::span<const LatticePoint> points) {
  for (const auto& p : points) out << p.toString() << '\n';
}

Json pointToJson(const LatticePoint& p) {
  Json out = Json::object();
  out["label"] = p.label().elements().elements();
  out["coords"] = p.coords();
  return out;
}

LatticePoint pointFromJson(const Json& j) {
  try {
    const auto label = field<std::vector<Element>>(j, "label");
    const auto coords = field<std::vector<Coord>>(j, "coords");
    return LatticePoint(TauLabel(FinSet(label)), coords);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json coverToJson(const CoverSpec& spec) {
  Json out = Json::object();
  out["radii"] = spec.radii;
  out["bound"] = spec.bound;
  Json families = Json::array();
  for (const auto& family : spec.families) {
    Json blocks = Json::array();
    for (const auto& block : family) {
      Json points = Json::array();
      for (const auto& p : block) points.push_back(pointToJson(p));
      blocks.push_back(std::move(points));
    }
    families.push_back(std::move(blocks));
  }
  out["families"] = std::move(families);
  return out;
}

CoverSpec coverFromJson(const Json& j) {
  CoverSpec spec;
  spec.radii = field<std::vector<Coord>>(j, "radii");
  spec.bound = field<Coord>(j, "bound");
  for (const auto& family : arrayField(j, "families")) {
    if (!family.is_array()) throw ParseError("cover family must be an array of blocks");
    BlockFamily blocks;
    for (const auto& block : family) {
      if (!block.is_array()) throw ParseError("cover block must be an array of points");
      Block points;
      for (const auto& p : block) points.push_back(pointFromJson(p));
      blocks.push_back(std::move(points));
    }
    spec.families.push_back(std::move(blocks));
  }
  return spec;
}

Json partitionToJson(const PartitionInstance& instance) {
  Json out = Json::object();
  out["dimension"] = instance.cube.dimension;
  out["side"] = instance.cube.side;
  out["step"] = instance.cube.step;
  out["eps"] = instance.eps;
  Json families = Json::array();
  for (const auto& family : instance.families) {
    Json blocks = Json::array();
    for (const auto& block : family) blocks.push_back(block);
    families.push_back(std::move(blocks));
  }
  out["families"] = std::move(families);
  return out;
}

PartitionInstance partitionFromJson(const Json& j) {
  PartitionInstance instance;
  instance.cube.dimension = field<int>(j, "dimension");
  instance.cube.side = field<Coord>(j, "side");
  instance.cube.step = j.contains("step") ? field<Coord>(j, "step") : 1;
  instance.eps = field<Coord>(j, "eps");
  if (instance.cube.dimension < 1) throw ParseError("partition dimension must be positive");
  for (const auto& family : arrayField(j, "families")) {
    if (!family.is_array()) throw ParseError("partition family must be an array of blocks");
    GridFamily blocks;
    for (const auto& block : family) {
      if (!block.is_array()) throw ParseError("partition block must be an array of points");
      GridBlock points;
      for (const auto& p : block) points.push_back(gridPointFromJson(p, instance.cube.dimension));
      blocks.push_back(std::move(points));
    }
    instance.families.push_back(std::move(blocks));
  }
  return instance;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json readJsonFile(const std::string& path) {
  const std::string text = readTextFile(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace coarsedim
