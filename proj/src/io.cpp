#include "cubeplan/io.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cubeplan {

namespace {

using nlohmann::ordered_json;

ordered_json parse_document(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("input is not valid JSON");
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  return doc;
}

std::string field_error(const char* field, const char* expected) {
  return std::string("\"") + field + "\" must be " + expected;
}

std::vector<std::string> string_list(const ordered_json& node,
                                     const char* field) {
  if (!node.is_array()) throw ParseError(field_error(field, "an array"));
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_string())
      throw ParseError(field_error(field, "an array of strings"));
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<NamePair> pair_list(const ordered_json& node, const char* field) {
  if (!node.is_array()) throw ParseError(field_error(field, "an array"));
  std::vector<NamePair> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_string())
      throw ParseError(field_error(field, "an array of [name, name] pairs"));
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

// Graphviz double-quoted string: escape backslashes and quotes.
std::string quoted(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string brace_listing(const Pip& pip, const Bitset& ideal) {
  std::string out = "{";
  bool first = true;
  ideal.for_each([&](std::size_t e) {
    if (!first) out += ", ";
    out += pip.elements()[e];
    first = false;
  });
  out += "}";
  return out;
}

constexpr std::array<const char*, 10> kEdgePalette = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
    "#e6ab02", "#a6761d", "#666666", "#1f78b4", "#b2182b",
};

}  // namespace

Pip pip_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  if (!doc.contains("elements"))
    throw ParseError("missing required field \"elements\"");
  PipData data;
  data.elements = string_list(doc["elements"], "elements");
  if (doc.contains("covers")) data.covers = pair_list(doc["covers"], "covers");
  if (doc.contains("inconsistent"))
    data.inconsistent = pair_list(doc["inconsistent"], "inconsistent");
  return Pip(close(data));
}

std::string pip_to_json(const Pip& pip) {
  ordered_json doc;
  doc["elements"] = pip.elements();
  ordered_json covers = ordered_json::array();
  for (const auto& [lower, upper] : pip.hasse_covers())
    covers.push_back(ordered_json::array({lower, upper}));
  doc["covers"] = std::move(covers);
  ordered_json inconsistent = ordered_json::array();
  for (const auto& [p, q] : pip.minimal_inconsistent())
    inconsistent.push_back(ordered_json::array({p, q}));
  doc["inconsistent"] = std::move(inconsistent);
  return doc.dump(2) + "\n";
}

CubeComplex complex_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  if (!doc.contains("vertices"))
    throw ParseError("missing required field \"vertices\"");
  std::vector<std::string> vertices = string_list(doc["vertices"], "vertices");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index[vertices[v]] = v;
  auto resolve = [&](const ordered_json& node, const char* field) {
    if (!node.is_string())
      throw ParseError(field_error(field, "built from vertex names"));
    auto it = index.find(node.get<std::string>());
    if (it == index.end())
      throw ParseError("unknown vertex \"" + node.get<std::string>() +
                       "\" in \"" + field + "\"");
    return it->second;
  };

  std::vector<EdgeRec> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      throw ParseError(field_error("edges", "an array"));
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() != 3 || !item[2].is_string())
        throw ParseError(
            field_error("edges", "an array of [u, v, label] triples"));
      edges.push_back(EdgeRec{resolve(item[0], "edges"),
                              resolve(item[1], "edges"),
                              item[2].get<std::string>()});
    }
  }

  std::vector<CubeRec> cubes;
  if (doc.contains("cubes")) {
    if (!doc["cubes"].is_array())
      throw ParseError(field_error("cubes", "an array"));
    for (const auto& item : doc["cubes"]) {
      if (!item.is_array() || item.size() != 2)
        throw ParseError(
            field_error("cubes", "an array of [base, [labels]] pairs"));
      cubes.push_back(CubeRec{resolve(item[0], "cubes"),
                              string_list(item[1], "cubes")});
    }
  }

  std::optional<std::size_t> root;
  if (doc.contains("root")) root = resolve(doc["root"], "root");

  return CubeComplex(std::move(vertices), std::move(edges), std::move(cubes),
                     root);
}

std::string complex_to_json(const CubeComplex& x) {
  const auto& names = x.vertex_names();
  ordered_json doc;
  doc["vertices"] = names;
  ordered_json edges = ordered_json::array();
  for (const EdgeRec& e : x.edges())
    edges.push_back(ordered_json::array({names[e.u], names[e.v], e.label}));
  doc["edges"] = std::move(edges);
  ordered_json cubes = ordered_json::array();
  for (const CubeRec& c : x.cubes())
    cubes.push_back(ordered_json::array({names[c.base], c.labels}));
  doc["cubes"] = std::move(cubes);
  if (x.root()) doc["root"] = names[*x.root()];
  return doc.dump(2) + "\n";
}

std::string plan_to_json(const GeodesicPlan& plan, const Pip& pip) {
  return plan_to_json(plan, pip, [&pip](const Bitset& ideal) {
    return brace_listing(pip, ideal);
  });
}

std::string plan_to_json(
    const GeodesicPlan& plan, const Pip& pip,
    const std::function<std::string(const Bitset&)>& vertex_name) {
  ordered_json doc;
  doc["metric"] = plan.metric == Metric::L1 ? "l1" : "linf";
  doc["distance"] = plan.distance;
  ordered_json batches = ordered_json::array();
  for (const auto& batch : plan.batches) {
    ordered_json names = ordered_json::array();
    for (std::size_t e : batch) names.push_back(pip.elements()[e]);
    batches.push_back(std::move(names));
  }
  doc["batches"] = std::move(batches);
  ordered_json vertices = ordered_json::array();
  for (const Bitset& ideal : plan.vertex_trace)
    vertices.push_back(vertex_name(ideal));
  doc["vertices"] = std::move(vertices);
  return doc.dump() + "\n";
}

std::string pip_to_dot(const Pip& pip) {
  std::string out = "digraph pip {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const std::string& name : pip.elements())
    out += "  " + quoted(name) + ";\n";
  for (const auto& [lower, upper] : pip.hasse_covers())
    out += "  " + quoted(lower) + " -> " + quoted(upper) + ";\n";
  for (const auto& [p, q] : pip.minimal_inconsistent())
    out += "  " + quoted(p) + " -> " + quoted(q) +
           " [style=dotted, dir=none, constraint=false];\n";
  out += "}\n";
  return out;
}

std::string complex_to_dot(const CubeComplex& x) {
  const auto& names = x.vertex_names();
  std::vector<std::size_t> edge_class(x.edges().size(), 0);
  std::vector<std::vector<std::size_t>> classes = hyperplanes(x);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t e : classes[c]) edge_class[e] = c;

  std::string out = "graph complex {\n  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < names.size(); ++v) {
    out += "  " + quoted(names[v]);
    if (x.root() && *x.root() == v) out += " [peripheries=2]";
    out += ";\n";
  }
  for (std::size_t e = 0; e < x.edges().size(); ++e) {
    const EdgeRec& rec = x.edges()[e];
    out += "  " + quoted(names[rec.u]) + " -- " + quoted(names[rec.v]) +
           " [label=" + quoted(rec.label) + ", color=\"" +
           kEdgePalette[edge_class[e] % kEdgePalette.size()] + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cubeplan
