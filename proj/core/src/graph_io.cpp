#include "ggx/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ggx/error.hpp"

namespace ggx {

namespace {

constexpr const char* kModule = "graphs";

using nlohmann::json;

template <class G>
json labels_json(const G& g) {
  json labels = json::array();
  for (const auto& label : g.labels()) labels.push_back(label);
  return labels;
}

json pairs_json(const std::vector<Edge>& pairs) {
  json out = json::array();
  for (const auto& [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (const char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_field(const std::string& label) {
  if (label.find_first_of(",\"\r\n") == std::string::npos) return label;
  std::string out = "\"";
  for (const char c : label) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <class G>
std::string dot(const G& g, const char* keyword, const char* connector, const std::vector<Edge>& pairs) {
  std::ostringstream out;
  out << keyword << " {\n";
  for (const auto& label : g.labels()) out << "  " << dot_quote(label) << ";\n";
  for (const auto& [u, v] : pairs) {
    out << "  " << dot_quote(g.label(u)) << ' ' << connector << ' ' << dot_quote(g.label(v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

template <class G>
std::string csv(const G& g, const std::vector<Edge>& pairs) {
  std::string out = "source,target\n";
  for (const auto& [u, v] : pairs) out += csv_field(g.label(u)) + ',' + csv_field(g.label(v)) + '\n';
  return out;
}

[[noreturn]] void bad(const std::string& why) { throw Error(kModule, ErrorCode::kBadGraphFile, why); }

}  // namespace

std::string to_json(const Graph& g) {
  json doc = {{"version", 1}, {"kind", "graph"}, {"labels", labels_json(g)}, {"edges", pairs_json(g.edges())}};
  return doc.dump();
}

std::string to_json(const Digraph& g) {
  json doc = {{"version", 1}, {"kind", "digraph"}, {"labels", labels_json(g)}, {"arcs", pairs_json(g.arcs())}};
  return doc.dump();
}

AnyGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  if (doc.value("version", 0) != 1) bad("unsupported or missing version");
  const std::string kind = doc.value("kind", "");
  if (kind != "graph" && kind != "digraph") bad("kind must be \"graph\" or \"digraph\"");
  if (!doc.contains("labels") || !doc["labels"].is_array()) bad("labels must be an array");
  std::vector<std::string> labels;
  for (const auto& label : doc["labels"]) {
    if (!label.is_string()) bad("labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  const std::size_t n = labels.size();
  const char* key = kind == "graph" ? "edges" : "arcs";
  if (!doc.contains(key) || !doc[key].is_array()) bad(std::string(key) + " must be an array");
  std::vector<Edge> pairs;
  for (const auto& pair : doc[key]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
      bad(std::string("each entry of ") + key + " must be a pair of vertex indices");
    }
    const auto u = pair[0].get<std::uint64_t>(), v = pair[1].get<std::uint64_t>();
    if (u >= n || v >= n) bad("vertex index out of range");
    if (u == v) bad("loops are not allowed");
    if (kind == "graph" && u > v) bad("edges must be listed with i < j");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (kind == "graph") {
    Graph g(n, std::move(labels));
    for (const auto& [u, v] : pairs) g.add_edge(u, v);
    return g;
  }
  Digraph g(n, std::move(labels));
  for (const auto& [u, v] : pairs) g.add_arc(u, v);
  return g;
}

std::string to_dot(const Graph& g) { return dot(g, "graph", "--", g.edges()); }
std::string to_dot(const Digraph& g) { return dot(g, "digraph", "->", g.arcs()); }
std::string to_csv(const Graph& g) { return csv(g, g.edges()); }
std::string to_csv(const Digraph& g) { return csv(g, g.arcs()); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(kModule, ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(kModule, ErrorCode::kIo, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(kModule, ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace ggx
