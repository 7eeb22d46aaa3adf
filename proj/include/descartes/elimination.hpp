#pragma once

#include <string>
#include <vector>

#include "descartes/box_positivity.hpp"
#include "descartes/root_counting.hpp"

namespace descartes {

/// Resultant in `var`, computed by evaluation at integer grid points and
/// interpolation, using the formal degrees of f and g in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Exact determinant by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);
/// Exact rank by Gaussian elimination.
int rank(std::vector<std::vector<Rational>> m);

struct EliminationResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string method;  // "elimination" or "subdivision"
  std::vector<std::pair<int, Polynomial>> eliminants;
  long candidate_boxes = 0;
  long boxes = 0;
  std::string note;
};

/// Shows that the square system eqs = 0 has no solution with every variable > 0.
EliminationResult verify_no_positive_solution(std::vector<MultiPoly> eqs, const std::vector<int>& vars,
                                              const PositivityOptions& opts = {});

}  // namespace descartes
