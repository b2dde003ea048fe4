#ifndef CATSIZE_REPRODUCE_HPP
#define CATSIZE_REPRODUCE_HPP

#include <string>
#include <vector>

#include "catsize/report.hpp"
#include "catsize/scenario.hpp"

namespace catsize::cli {

// One line of the comparison table: a published order-of-magnitude figure
// next to what this toolkit computes for the same setup, tagged with the
// mode that produced the number.
struct ComparisonRow {
  std::string quantity;
  std::string quoted_figure;  // the published claim, "-" where none exists
  double computed = 0.0;
  std::string mode;
  std::string scenario;  // name of the report the number came from

  bool operator==(const ComparisonRow&) const = default;
};

struct ReproduceResult {
  std::vector<Report> reports;
  std::vector<ComparisonRow> comparison;
};

// The built-in scenario battery behind `catsize reproduce-paper`: the LiF
// rigid-body estimates in both modes, the nucleon-treatment variants, the
// configured flux qubit, and the two Cooper-pair condensates.
std::vector<Scenario> builtin_scenarios();

ReproduceResult reproduce_paper();

std::string render(const ReproduceResult& result, RenderFormat format);

}  // namespace catsize::cli

#endif  // CATSIZE_REPRODUCE_HPP
