#ifndef QPSURF_CORPUS_HPP
#define QPSURF_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qpsurf/qp.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

/// Shipped example file. `kind` is "triangulation" or "qp".
struct CorpusEntry {
  std::string name;
  std::string kind;
  std::string description;
  std::string text;
};

[[nodiscard]] const std::vector<CorpusEntry>& corpus();
/// Throws PreconditionError for an unknown name.
[[nodiscard]] const CorpusEntry& corpus_entry(std::string_view name);
[[nodiscard]] Triangulation corpus_triangulation(std::string_view name);
/// Names of the shipped triangulations, in corpus order.
[[nodiscard]] std::vector<std::string> corpus_triangulation_names();

}  // namespace qpsurf

#endif  // QPSURF_CORPUS_HPP
