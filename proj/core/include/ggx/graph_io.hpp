#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "ggx/graph.hpp"

namespace ggx {

using AnyGraph = std::variant<Graph, Digraph>;

// {"version":1,"kind":"graph","labels":[...],"edges":[[i,j],...]} with i < j,
// or kind "digraph" with "arcs". Output is compact and deterministic.
std::string to_json(const Graph& g);
std::string to_json(const Digraph& g);
AnyGraph graph_from_json(std::string_view text);

std::string to_dot(const Graph& g);
std::string to_dot(const Digraph& g);

// Edge or arc list under the header "source,target", labels quoted when needed.
std::string to_csv(const Graph& g);
std::string to_csv(const Digraph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ggx
