#include "psikit/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace psikit {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
  // Small values stay JSON numbers; anything outside int64 range is a string.
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return json(static_cast<long long>(v));
  return json(v.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(ErrorKind::invalid_input, "expected integer, got " + j.dump());
}

json epoly_to_json(const EPoly& p) {
  json arr = json::array();
  for (const auto& t : p.triples())
    arr.push_back({int_to_json(t[0]), int_to_json(t[1]), int_to_json(t[2])});
  return arr;
}

EPoly epoly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::invalid_input, "class must be a triple list");
  std::vector<std::array<Int, 3>> ts;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorKind::invalid_input, "class entry must be [i, j, c]");
    ts.push_back({int_from_json(t[0]), int_from_json(t[1]), int_from_json(t[2])});
  }
  return EPoly::from_triples(ts);
}

IdSet ids_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::invalid_input, "expected id list");
  IdSet out;
  for (const auto& e : j) out.insert(e.get<std::string>());
  return out;
}

json ids_to_json(const IdSet& ids) {
  json arr = json::array();
  for (const auto& id : ids) arr.push_back(id);
  return arr;
}

}  // namespace

NCModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("model JSON parse error: ") + e.what());
  }
  NCModel m;
  m.ambient_dim = j.at("ambient_dim").get<int>();
  for (const auto& c : j.at("components")) {
    Component comp;
    comp.id = c.at("id").get<std::string>();
    comp.mult = c.at("mult").get<long long>();
    if (c.contains("discrepancy")) comp.discrepancy = c.at("discrepancy").get<long long>();
    m.components.push_back(comp);
  }
  for (const auto& p : j.at("points")) m.points.push_back(p.get<std::string>());
  for (const auto& s : j.at("strata_fiber")) {
    IdSet on = ids_from_json(s.at("on"));
    std::string at = s.at("at").get<std::string>();
    EPoly cls = epoly_from_json(s.at("class"));
    if (m.strata_fiber.count({on, at}))
      throw Error(ErrorKind::invalid_input, "duplicate fiber stratum key");
    if (!cls.is_zero()) m.strata_fiber.emplace(std::make_pair(on, at), cls);
  }
  if (j.contains("strata_total")) {
    m.strata_total.emplace();
    for (const auto& s : j.at("strata_total")) {
      IdSet on = ids_from_json(s.at("on"));
      EPoly cls = epoly_from_json(s.at("class"));
      if (m.strata_total->count(on))
        throw Error(ErrorKind::invalid_input, "duplicate total stratum key");
      if (!cls.is_zero()) m.strata_total->emplace(on, cls);
    }
  }
  canonicalize(m);
  return m;
}

std::string model_to_json(const NCModel& model) {
  NCModel m = model;
  canonicalize(m);
  json j;
  j["ambient_dim"] = m.ambient_dim;
  j["components"] = json::array();
  for (const auto& c : m.components) {
    json jc;
    jc["id"] = c.id;
    jc["mult"] = c.mult;
    if (c.discrepancy) jc["discrepancy"] = *c.discrepancy;
    j["components"].push_back(jc);
  }
  j["points"] = m.points;
  j["strata_fiber"] = json::array();
  for (const auto& [key, cls] : m.strata_fiber) {
    json s;
    s["on"] = ids_to_json(key.first);
    s["at"] = key.second;
    s["class"] = epoly_to_json(cls);
    j["strata_fiber"].push_back(s);
  }
  if (m.strata_total) {
    j["strata_total"] = json::array();
    for (const auto& [key, cls] : *m.strata_total) {
      json s;
      s["on"] = ids_to_json(key);
      s["class"] = epoly_to_json(cls);
      j["strata_total"].push_back(s);
    }
  }
  return j.dump(2) + "\n";
}

NCModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

void save_model(const NCModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_input, "cannot write model file: " + path);
  out << model_to_json(model);
}

CenterSpec center_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("center JSON parse error: ") + e.what());
  }
  CenterSpec c;
  c.codim = j.at("codim").get<int>();
  c.contains = ids_from_json(j.at("contains"));
  for (const auto& p : j.at("pieces")) {
    CenterPiece piece;
    piece.extra = ids_from_json(p.at("extra"));
    std::string at = p.at("at").get<std::string>();
    if (at != "away") piece.at = at;
    piece.cls = epoly_from_json(p.at("class"));
    c.pieces.push_back(std::move(piece));
  }
  return c;
}

std::string center_to_json(const CenterSpec& center) {
  json j;
  j["codim"] = center.codim;
  j["contains"] = ids_to_json(center.contains);
  j["pieces"] = json::array();
  for (const auto& p : center.pieces) {
    json jp;
    jp["extra"] = ids_to_json(p.extra);
    jp["at"] = p.at ? json(*p.at) : json("away");
    jp["class"] = epoly_to_json(p.cls);
    j["pieces"].push_back(jp);
  }
  return j.dump(2) + "\n";
}

CenterSpec load_center(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open center file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return center_from_json(ss.str());
}

}  // namespace psikit
