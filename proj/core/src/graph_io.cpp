#include "grpdim/graph_io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "grpdim/errors.hpp"

namespace grpdim {

namespace {

std::string sanitize_identifier(const std::string& name) {
  std::string out;
  for (char c : name)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), 'g');
  return out;
}

}  // namespace

std::string graph_to_dot(const SimpleGraph& g, const std::string& graph_name,
                         const std::vector<int>* orders) {
  std::ostringstream out;
  out << "graph " << sanitize_identifier(graph_name) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (orders) out << "(o=" << (*orders)[v] << ")";
    out << "\"];\n";
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) edges.push_back({u, v});
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = std::move(edges);
  return doc.dump();
}

SimpleGraph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw InputError("graph JSON: expected an object with fields \"n\" and \"edges\"");
  try {
    const int n = doc["n"].get<int>();
    if (n < 1) throw InputError("graph JSON: vertex count must be >= 1");
    SimpleGraph g(n);
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("graph JSON: edges must be [u, v] pairs");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
}

}  // namespace grpdim
