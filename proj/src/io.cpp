#include "hyparr/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyparr {

Json to_json(const Arrangement& arr) {
  Json hs = Json::array();
  for (const auto& h : arr.hyperplanes()) {
    Json normal = Json::array();
    for (const auto& x : h.normal) normal.push_back(format_rational(x));
    hs.push_back({{"normal", normal}, {"offset", format_rational(h.offset)}});
  }
  return {{"dim", arr.dim()}, {"central", arr.is_central()}, {"hyperplanes", hs}};
}

Json to_json(const ArrangementFile& file) {
  Json j = to_json(file.arrangement);
  if (file.family) j["family"] = *file.family;
  return j;
}

namespace {

Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument(where + ": expected a rational string such as \"3/4\"");
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

ArrangementFile arrangement_from_json(const Json& j) {
  const auto& dim_field = member(j, "dim", "arrangement");
  if (!dim_field.is_number_unsigned()) {
    throw std::invalid_argument("arrangement.dim: expected a positive integer");
  }
  const auto dim = dim_field.get<std::size_t>();
  const auto& central_field = member(j, "central", "arrangement");
  if (!central_field.is_boolean()) throw std::invalid_argument("arrangement.central: expected true or false");
  const auto& list = member(j, "hyperplanes", "arrangement");
  if (!list.is_array()) throw std::invalid_argument("arrangement.hyperplanes: expected an array");

  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "arrangement.hyperplanes[" + std::to_string(i) + "]";
    const auto& normal = member(list[i], "normal", where);
    if (!normal.is_array()) throw std::invalid_argument(where + ".normal: expected an array");
    Hyperplane h;
    for (std::size_t k = 0; k < normal.size(); ++k) {
      h.normal.push_back(rational_field(normal[k], where + ".normal[" + std::to_string(k) + "]"));
    }
    h.offset = list[i].contains("offset") ? rational_field(list[i]["offset"], where + ".offset")
                                          : Rational(0);
    hs.push_back(std::move(h));
  }
  ArrangementFile file{
      Arrangement(dim, std::move(hs),
                  central_field.get<bool>() ? ArrangementKind::central : ArrangementKind::affine),
      std::nullopt};
  if (j.contains("family")) file.family = j["family"];
  return file;
}

ArrangementFile parse_arrangement(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw std::invalid_argument("JSON syntax error at line " + std::to_string(line) + ", column " +
                                std::to_string(column));
  }
  return arrangement_from_json(j);
}

ArrangementFile read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_arrangement(text.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json graph_to_json(const TopeGraph& g) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"index", v}, {"tope", g.tope(v).str()}, {"color", color_name(g.color(v))}});
  }
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", vertices}, {"edges", edges}};
}

Json circuit_to_json(const TopeGraph& g, const Circuit& c) {
  Json topes = Json::array();
  for (auto v : c.order) topes.push_back(g.tope(v).str());
  return {{"length", c.order.size()}, {"indices", c.order}, {"topes", topes}};
}

Json matching_to_json(const TopeGraph& g, const Matching& m) {
  Json pairs = Json::array();
  Json topes = Json::array();
  for (auto [a, b] : m.pairs) {
    pairs.push_back({a, b});
    topes.push_back({g.tope(a).str(), g.tope(b).str()});
  }
  return {{"size", m.pairs.size()},
          {"perfect", 2 * m.pairs.size() == g.vertex_count()},
          {"pairs", pairs},
          {"topes", topes}};
}

Json report_to_json(const ConstructionReport& r) {
  Json j = {{"provenance", r.provenance}, {"factors", r.factors}};
  j["predicted_signed_oe"] = r.predicted_signed_oe ? Json(*r.predicted_signed_oe) : Json(nullptr);
  return j;
}

Json extension_to_json(const ExtensionReport& r) {
  Json j = report_to_json(r.construction);
  j["added_index"] = r.added_index;
  j["input_oe"] = r.input_oe;
  j["result_oe"] = r.result_oe;
  j["restriction_topes"] = r.restriction_topes;
  j["certificate"] = r.certificate;
  return j;
}

Json certificate_to_json(const Certificate& c) {
  Json values = Json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  return {{"kind", c.kind},
          {"hyperplane", c.hyperplane ? Json(*c.hyperplane) : Json(nullptr)},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"verdict", verdict_name(c.verdict)},
          {"detail", c.detail},
          {"values", values}};
}

std::string graph_to_dot(const TopeGraph& g) {
  std::ostringstream out;
  out << "graph topes {\n  node [style=filled, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const bool umber = g.color(v) == Color::burnt_umber;
    out << "  " << v << " [label=\"" << g.tope(v).str() << "\", fillcolor=\""
        << (umber ? "#8a3324" : "#7fff00") << "\", fontcolor=\"" << (umber ? "white" : "black")
        << "\"];\n";
  }
  for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hyparr
