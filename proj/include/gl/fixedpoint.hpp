#pragma once

#include <string_view>
#include <utility>

#include "gl/classify.hpp"
#include "gl/formula.hpp"
#include "gl/prover.hpp"

namespace gl {

struct NotModalized : Error {
  explicit NotModalized(const std::string& var)
      : Error("atom '" + var + "' occurs outside every box in the template") {}
};

// A failed certificate: the computed candidate is provably not a fixed
// point. A defect, never a valid outcome.
struct NoConvergence : Error {
  using Error::Error;
};

struct FixedPointResult {
  FormulaPtr fixed_point;
  // Halting step of the iteration from top, when it stabilizes within the
  // bound; otherwise the exhausted bound + 1 (the structural construction
  // produced the result).
  int iterations = 0;
  bool certificate_checked = false;
};

struct FixedPointOptions {
  int max_iterations = -1;  // iteration budget; -1: modal_depth(template) + 2
  ProverOptions prover;
};

// Computes a formula F with GL proving F <-> template[var := F]. The template
// must be modalized in var. First iterates the template from top, halting
// when one more application is provably equivalent to the previous stage;
// templates whose iterates never stabilize get the structural fixed point
// construction instead. Either way the result carries a prover-checked
// certificate of the defining equivalence.
FixedPointResult fixed_point(const FormulaPtr& tmpl, std::string_view var,
                             const FixedPointOptions& opts = {});

// The letterless sentence equivalent to its own "provable only if the n-fold
// tower holds" statement: the fixed point of []p -> box_tower(n), normalized,
// with its classification (classically true, smallest n of n+1).
std::pair<FormulaPtr, Classification> liar(int n,
                                           const FixedPointOptions& opts = {});

// ~box_tower(n) with its classification (classically true, smallest n of 1).
std::pair<FormulaPtr, Classification> godel_liar(int n);

}  // namespace gl
