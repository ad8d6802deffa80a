#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ggx/error.hpp"
#include "ggx/finite_group.hpp"
#include "ggx/graph.hpp"

namespace ggx {

inline void PrintTo(ErrorCode code, std::ostream* os) { *os << to_string(code); }

}  // namespace ggx

namespace ggx::test {

inline Element el(const FiniteGroup& group, const std::string& label) {
  const auto x = group.find(label);
  if (!x) throw std::runtime_error("no element " + label + " in " + group.name());
  return *x;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Vertex 0 is the hub.
inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// Runs `f` and returns the ggx error code it raised.
template <class F>
ErrorCode error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ggx::Error raised";
  return ErrorCode::kIo;
}

inline std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ggx_test_" + name);
  FILE* f = std::fopen(path.c_str(), "w");
  std::fputs(content.c_str(), f);
  std::fclose(f);
  return path;
}

// Small groups that keep exhaustive oracles cheap.
inline const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> specs = {"C1", "C2",  "C6",  "C12", "C30",  "D3",    "D4",     "D6",
                                                 "D9", "Q8",  "S3",  "S4",  "A4",   "A5",    "C4xC2",  "C9xC3",
                                                 "C2xC2xC2", "C6xC6", "S3xC3", "C4xC2xC3"};
  return specs;
}

}  // namespace ggx::test
