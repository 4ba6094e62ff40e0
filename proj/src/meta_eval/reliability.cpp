#include "columns.hpp"

namespace metricide {

namespace {

ReliabilityRow icc_row(std::string scope, std::string dimension,
                       const std::vector<std::vector<double>>& matrix, Warnings& warnings) {
  ReliabilityRow row{std::move(scope), std::move(dimension), matrix.size(), {}};
  for (auto model : {stats::IccModel::one_way, stats::IccModel::two_way_single,
                     stats::IccModel::two_way_average}) {
    try {
      row.models[static_cast<std::size_t>(model)] = stats::icc(matrix, model);
    } catch (const stats::UndefinedStatistic& e) {
      warnings.push_back("reliability: " + row.scope + "/" + row.dimension + ": " + e.what());
      break;
    }
  }
  return row;
}

}  // namespace

std::vector<ReliabilityRow> reliability(const Corpus& corpus, Warnings& warnings) {
  std::vector<std::pair<std::string, std::vector<std::size_t>>> scopes;
  scopes.emplace_back("all", detail::all_rows(corpus));
  for (auto& [d, rows] : detail::group_by(corpus, [](const Instance& i) { return i.dataset; })) {
    scopes.emplace_back(d, rows);
  }

  std::vector<ReliabilityRow> out;
  for (const auto& [scope, rows] : scopes) {
    if (rows.empty()) continue;
    // "all" stacks the three dimensions as separate items.
    std::vector<std::vector<double>> pooled;
    for (Dimension d : kDimensions) {
      std::vector<std::vector<double>> matrix;
      for (std::size_t i : rows) {
        const auto& s = corpus.instances[i].rating(d).scores();
        matrix.push_back({static_cast<double>(s[0]), static_cast<double>(s[1]),
                          static_cast<double>(s[2])});
      }
      pooled.insert(pooled.end(), matrix.begin(), matrix.end());
      out.push_back(icc_row(scope, std::string(dimension_name(d)), matrix, warnings));
    }
    out.push_back(icc_row(scope, "all", pooled, warnings));
  }
  return out;
}

}  // namespace metricide
