#pragma once

#include <optional>
#include <string_view>

#include "bcp/embedding.hpp"
#include "bcp/graph.hpp"
#include "bcp/verify.hpp"

namespace bcp {

enum class WitnessSource { Oracle, Pipeline };

[[nodiscard]] constexpr std::string_view to_string(WitnessSource s) {
  return s == WitnessSource::Oracle ? "oracle" : "pipeline";
}

struct DispersabilityVerdict {
  int max_degree = 0;
  int pages = 0;  // best page count found
  WitnessSource source = WitnessSource::Oracle;

  [[nodiscard]] bool dispersable() const { return pages == max_degree; }
};

/// Compares the best page count found against the max degree. Small graphs go
/// through the exhaustive oracle; larger BCP graphs use the pipeline's
/// 3-page witness, which is optimal because mbt >= max degree = 3.
[[nodiscard]] inline DispersabilityVerdict dispersability_check(const Graph& g, OracleOptions options = {}) {
  DispersabilityVerdict out;
  out.max_degree = g.max_degree();
  if (g.order() <= options.vertex_limit) {
    out.pages = *mbt_oracle(g, g.size(), options);
    out.source = WitnessSource::Oracle;
    return out;
  }
  const BookEmbedding be = embed(g);
  out.pages = be.page_count();
  out.source = WitnessSource::Pipeline;
  return out;
}

}  // namespace bcp
