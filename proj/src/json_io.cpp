#include "decidua/json_io.hpp"

#include <fstream>
#include <map>

#include "decidua/errors.hpp"

namespace decidua {

namespace {

void reject_unknown_keys(const nlohmann::json& j,
                         std::initializer_list<const char*> allowed,
                         const char* what) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw JsonFormatError(std::string(what) + ": unknown key '" + key + "'");
    }
  }
}

std::vector<std::string> elems_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw JsonFormatError("'elems' must be an array");
  std::vector<std::string> elems;
  for (const auto& e : j) {
    if (!e.is_string()) throw JsonFormatError("'elems' entries must be strings");
    elems.push_back(e.get<std::string>());
  }
  return elems;
}

}  // namespace

nlohmann::json obj_to_json(const FinObj& x) {
  nlohmann::json j;
  switch (x.form()) {
    case FinObj::Form::Empty:
      j["form"] = "empty";
      break;
    case FinObj::Form::Unit:
      j["form"] = "unit";
      break;
    case FinObj::Form::Atom:
      j["form"] = "atom";
      break;
    case FinObj::Form::Sum:
      j["form"] = "sum";
      j["left"] = obj_to_json(x.left());
      j["right"] = obj_to_json(x.right());
      break;
  }
  j["elems"] = x.elems();
  return j;
}

FinObj obj_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw JsonFormatError("object value must be a JSON object");
  reject_unknown_keys(j, {"form", "elems", "left", "right"}, "object");
  if (!j.contains("form") || !j.at("form").is_string()) {
    throw JsonFormatError("object needs a string 'form'");
  }
  std::string form = j.at("form").get<std::string>();

  if (form == "sum") {
    if (!j.contains("left") || !j.contains("right")) {
      throw JsonFormatError("sum object needs 'left' and 'right'");
    }
    FinObj result =
        FinObj::sum(obj_from_json(j.at("left")), obj_from_json(j.at("right")));
    if (j.contains("elems") && elems_from_json(j.at("elems")) != result.elems()) {
      throw JsonFormatError(
          "sum object 'elems' does not match the tagged summand elements");
    }
    return result;
  }

  if (j.contains("left") || j.contains("right")) {
    throw JsonFormatError("only sum objects may carry 'left'/'right'");
  }
  if (form == "empty") {
    if (j.contains("elems") && !elems_from_json(j.at("elems")).empty()) {
      throw JsonFormatError("empty object must have no elements");
    }
    return FinObj::empty();
  }
  if (form == "unit") {
    if (!j.contains("elems")) throw JsonFormatError("unit object needs 'elems'");
    auto elems = elems_from_json(j.at("elems"));
    if (elems.size() != 1) {
      throw JsonFormatError("unit object must have exactly one element");
    }
    return FinObj::unit(elems[0]);
  }
  if (form == "atom") {
    if (!j.contains("elems")) throw JsonFormatError("atom object needs 'elems'");
    return FinObj::atom(elems_from_json(j.at("elems")));
  }
  throw JsonFormatError("unknown object form '" + form + "'");
}

nlohmann::json pmap_to_json(const PMap& f) {
  nlohmann::json j;
  j["dom"] = obj_to_json(f.dom());
  j["cod"] = obj_to_json(f.cod());
  j["map"] = nlohmann::json::object();
  for (const auto& [x, y] : f.graph()) j["map"][x] = y;
  return j;
}

PMap pmap_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw JsonFormatError("map value must be a JSON object");
  reject_unknown_keys(j, {"dom", "cod", "map"}, "map");
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("map")) {
    throw JsonFormatError("map needs 'dom', 'cod' and 'map'");
  }
  FinObj dom = obj_from_json(j.at("dom"));
  FinObj cod = obj_from_json(j.at("cod"));
  if (!j.at("map").is_object()) {
    throw JsonFormatError("'map' must be a JSON object");
  }
  std::map<std::string, std::string> graph;
  for (const auto& [x, y] : j.at("map").items()) {
    if (!y.is_string()) throw JsonFormatError("'map' values must be strings");
    graph.emplace(x, y.get<std::string>());
  }
  try {
    return PMap(std::move(dom), std::move(cod), std::move(graph));
  } catch (const InvariantError& e) {
    throw JsonFormatError(e.what());
  }
}

PMap pmap_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(std::string("invalid JSON: ") + e.what());
  }
  return pmap_from_json(j);
}

PMap load_pmap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return pmap_from_json_text(text);
}

}  // namespace decidua
