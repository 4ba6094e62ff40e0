#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "metricide/corpus.hpp"
#include "metricide/textproc.hpp"

namespace metricide::test {

inline std::filesystem::path fixture(std::string_view name) {
  return std::filesystem::path(METRICIDE_FIXTURE_DIR) / name;
}

inline TokenSequence toks(std::string_view text) { return tokenize(text); }

inline std::vector<TokenSequence> refs(std::initializer_list<std::string_view> texts) {
  std::vector<TokenSequence> out;
  for (auto t : texts) out.push_back(tokenize(t));
  return out;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(std::string_view name) {
  auto dir = std::filesystem::temp_directory_path() / ("metricide-test-" + std::string(name));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline Instance make_instance(std::string id, std::string dataset, std::string system,
                              std::array<int, 3> medians, std::string pair_key = "") {
  auto triple = [](Dimension d, int m) { return RatingTriple(d, {m, m, m}); };
  return Instance{
      .instance_id = std::move(id),
      .pair_key = std::move(pair_key),
      .dataset = std::move(dataset),
      .system = std::move(system),
      .mr = parse_mr("inform(name=X)"),
      .output = "x is here.",
      .references = {"x is here."},
      .ratings = {triple(Dimension::informativeness, medians[0]),
                  triple(Dimension::naturalness, medians[1]),
                  triple(Dimension::quality, medians[2])},
      .parse_score = std::nullopt,
  };
}

}  // namespace metricide::test
