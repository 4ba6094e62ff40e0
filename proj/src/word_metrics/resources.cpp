#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) throw MissingResourceError(fmt::format("cannot open {} file {}", what, path.string()));
  return in;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

// --- synonyms --------------------------------------------------------------

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  auto in = open_or_throw(path, "synonym");
  return parse(in);
}

SynonymLexicon SynonymLexicon::parse(std::istream& in) {
  SynonymLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw std::runtime_error(fmt::format("synonym line {}: expected word:syn,...", lineno));
    }
    const std::string word(trim(text.substr(0, colon)));
    if (word.empty()) throw std::runtime_error(fmt::format("synonym line {}: empty word", lineno));
    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto syn = trim(rest.substr(0, comma));
      if (!syn.empty()) lex.add(word, std::string(syn));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return lex;
}

void SynonymLexicon::add(const std::string& word, const std::string& synonym) {
  if (word == synonym) return;
  entries_[word].insert(synonym);
  entries_[synonym].insert(word);
}

bool SynonymLexicon::are_synonyms(const std::string& a, const std::string& b) const {
  auto it = entries_.find(a);
  return it != entries_.end() && it->second.contains(b);
}

// --- embeddings ------------------------------------------------------------

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  auto in = open_or_throw(path, "embedding");
  return parse(in);
}

EmbeddingTable EmbeddingTable::parse(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> vec;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest = trim(line);
    if (rest.empty()) continue;
    const auto sp = rest.find_first_of(" \t");
    if (sp == std::string_view::npos) {
      throw std::runtime_error(fmt::format("embedding line {}: no vector", lineno));
    }
    std::string word(rest.substr(0, sp));
    rest = rest.substr(sp);
    vec.clear();
    while (true) {
      const auto b = rest.find_first_not_of(" \t");
      if (b == std::string_view::npos) break;
      rest = rest.substr(b);
      double x = 0.0;
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), x);
      if (ec != std::errc() || (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t')) {
        throw std::runtime_error(fmt::format("embedding line {}: bad number", lineno));
      }
      vec.push_back(x);
      rest = rest.substr(static_cast<std::size_t>(ptr - rest.data()));
    }
    if (table.dimension_ != 0 && vec.size() != table.dimension_) {
      throw std::runtime_error(fmt::format(
          "embedding line {}: expected {} values, got {}", lineno, table.dimension_, vec.size()));
    }
    table.add(word, vec);
  }
  return table;
}

void EmbeddingTable::add(const std::string& word, std::vector<double> vector) {
  if (vector.empty()) throw std::invalid_argument("empty embedding vector");
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) throw std::invalid_argument("embedding dimension mismatch");
  vectors_.insert_or_assign(word, std::move(vector));
}

const std::vector<double>* EmbeddingTable::find(const std::string& word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

}  // namespace metricide
