#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ggx::tools {

// Group specs, one per line; blank lines and '#' comments are skipped.
std::vector<std::string> parse_corpus(std::string_view text);
std::vector<std::string> load_corpus(const std::filesystem::path& path);
// The corpus shipped in data/corpus.txt, compiled in.
std::vector<std::string> default_corpus();

}  // namespace ggx::tools
