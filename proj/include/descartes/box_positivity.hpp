#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descartes/multipoly.hpp"

namespace descartes {

/// One side of a box; hi == nullopt means +infinity.
struct BoxDim {
  int var = 0;
  Rational lo;
  std::optional<Rational> hi;
};
using Box = std::vector<BoxDim>;

enum class Verdict { Verified, Refuted, Inconclusive };
const char* to_string(Verdict v);

struct PositivityOptions {
  Rational floor = Rational(1, 1000000000);  // smallest box side before giving up
  long max_boxes = 400000;
  Rational truncation = 1000;  // cut-off used when an unbounded side needs splitting
};

struct PositivityResult {
  Verdict verdict = Verdict::Inconclusive;
  std::map<int, Rational> witness;  // set when Refuted
  long boxes = 0;
  std::optional<Rational> truncation;  // set when the truncated route was used
  std::string note;
};

/// Certifies f > 0 (strict) or f >= 0 on the box.
PositivityResult verify_box_positivity(const MultiPoly& f, const Box& box, bool strict,
                                       const PositivityOptions& opts = {});

/// Rigorous lower and upper bounds of f on a compact box (Bernstein enclosure).
std::pair<Rational, Rational> enclose(const MultiPoly& f, const Box& box);

}  // namespace descartes
