#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl/formula.hpp"

namespace gl {

// Thrown when a tableau exceeds its node budget. The search itself always
// terminates; this only fires on adversarially large inputs.
struct ResourceLimit : Error {
  explicit ResourceLimit(std::uint64_t nodes)
      : Error("prover node budget exceeded after " + std::to_string(nodes) +
              " tableau nodes"),
        nodes_used(nodes) {}
  std::uint64_t nodes_used;
};

struct UnknownWorld : Error {
  explicit UnknownWorld(std::size_t world)
      : Error("world w" + std::to_string(world) + " is not in the model") {}
};

// Finite transitive irreflexive frame with a per-world atom valuation.
// Worlds are 0..world_count-1 and render as w0, w1, ...
struct KripkeModel {
  std::size_t world_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> relation;  // sorted pairs
  std::vector<std::vector<std::string>> valuation;  // sorted atoms per world
  std::size_t root = 0;
};

// Text form: one line per world "w<i>: {atoms}", one line "R: (i,j),...",
// one line "root: w<i>".
std::string serialize_model(const KripkeModel& m);

struct ProofOutcome {
  std::optional<KripkeModel> countermodel;  // engaged iff refuted
  bool provable() const { return !countermodel.has_value(); }
};

struct ProverOptions {
  std::uint64_t node_budget = 1'000'000;
};

// Decides GL-provability (K + the lob schema []([]p -> p) -> []p, closed
// under necessitation and modus ponens). Returns Provable, or Refuted with a
// finite transitive irreflexive countermodel falsifying f at its root.
//
// The procedure is a signed tableau. Propositional rules saturate first;
// at a saturated open branch every false []B spawns a child branch seeded
// with {B false, []B true} plus {C true, []C true} for every []C true at the
// branch. Carrying []B true into the child is what makes the search
// terminate: a branch can fire each box subformula at most once. Worlds of a
// countermodel are the saturated open branches; the relation is the
// transitive closure of the spawning edges. False boxes fire in
// leftmost-innermost order of the input formula, and branching alternatives
// are explored left first, so verdicts and countermodels are deterministic.
ProofOutcome decide(const FormulaPtr& f, const ProverOptions& opts = {});

// Standard Kripke satisfaction at a world of m. Throws UnknownWorld if
// world >= m.world_count.
bool eval_in_model(const KripkeModel& m, std::size_t world, const FormulaPtr& f);

// True iff the relation is irreflexive and transitive and root is a world.
bool validate_model(const KripkeModel& m);

// decide(f <-> g) is Provable.
bool equivalent(const FormulaPtr& f, const FormulaPtr& g,
                const ProverOptions& opts = {});

}  // namespace gl
