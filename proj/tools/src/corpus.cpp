#include "ggx/tools/corpus.hpp"

#include "corpus_data.hpp"
#include "ggx/graph_io.hpp"

namespace ggx::tools {

std::vector<std::string> parse_corpus(std::string_view text) {
  std::vector<std::string> specs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      specs.emplace_back(line.substr(first, last - first + 1));
    }
    start = end + 1;
  }
  return specs;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) { return parse_corpus(read_text_file(path)); }

std::vector<std::string> default_corpus() { return parse_corpus(detail::kDefaultCorpusText); }

}  // namespace ggx::tools
