#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl/formula.hpp"
#include "gl/prover.hpp"
#include "gl/trace.hpp"

namespace gl {

struct BudgetExceeded : Error {
  using Error::Error;
};

enum class CategoryKind { Alpha, BetaPlus, Gamma, MixedFalse };

// Alpha carries no parameter; the other three carry the smallest n.
struct Category {
  CategoryKind kind = CategoryKind::Alpha;
  int m = 0;

  bool operator==(const Category&) const = default;
};

// "Alpha", "BetaPlus(1)", "Gamma(2)", "MixedFalse(1)"
std::string to_string(const Category& c);

// Full verdict record for a letterless sentence.
//
// Category meaning: Alpha = constructively true (a GL theorem). BetaPlus(m) =
// classically true with smallest n equal to m. Gamma(m) = classically false
// with the true ranks forming exactly the prefix 0..m-2, hence equivalent to
// box_tower(m-1). MixedFalse(m) = classically false with a nonempty,
// non-prefix set of true ranks; such sentences are equivalent to no box
// tower and the audit reports them.
struct Classification {
  bool classically_true = false;
  bool constructively_true = false;
  std::optional<int> smallest_n;
  Category category;
  Trace trace;
  FormulaPtr normal_form;
};

struct RosserStatus {
  // n such that the sentence and its negation both have smallest n equal to n.
  std::optional<int> n_rosser;
  // Least n such that both the sentence and its negation are n-constructively
  // false: max of the two smallest values. Absent when either side is
  // constructively true.
  std::optional<int> weak_rosser_n;
};

// True iff GL proves []f -> box_tower(n): n-constructive falsity, decided
// through its normal form. Requires n >= 1. Open formulas get the
// schema-level (all realizations) reading.
bool is_n_cf(const FormulaPtr& f, int n, const ProverOptions& opts = {});

// Least n with is_n_cf(f, n), computed from the trace: absent when f is
// provable, otherwise k+1 where k is the least false rank.
std::optional<int> smallest_n(const FormulaPtr& f);

Classification classify(const FormulaPtr& f);

RosserStatus rosser_status(const FormulaPtr& f);

// True iff GL proves []([]f & ~f) -> [][]bot; holds for every formula f.
bool check_neg_reflection(const FormulaPtr& f, const ProverOptions& opts = {});

struct ProbeEntry {
  int n = 0;
  ProofOutcome formula_outcome;   // decide([]f -> box_tower(n))
  ProofOutcome negation_outcome;  // decide([]~f -> box_tower(n))
};

struct ProbeReport {
  FormulaPtr formula;
  std::vector<ProbeEntry> entries;  // n = 1..N
  // Every formula_outcome refuted: f is not n-constructively false for any
  // probed n (and not provably so for any realization).
  bool strong_schema_witness = false;
  // Additionally every negation_outcome refuted.
  bool extreme_schema_witness = false;
};

ProbeReport independence_probe(const FormulaPtr& f, int max_n,
                               const ProverOptions& opts = {});

struct AuditCounterexample {
  FormulaPtr formula;
  Classification classification;
  std::string note;
};

struct AuditClaim {
  std::string claim;        // identifier, e.g. "c2.2"
  std::string description;  // what was checked
  int instances_checked = 0;
  int confirmations = 0;
  std::vector<AuditCounterexample> counterexamples;
};

struct AuditReport {
  int max_depth = 0;
  std::vector<AuditClaim> claims;
  std::string notes;  // enumeration summary (modal vs box-containing counts)

  const AuditClaim& claim(const std::string& id) const;
  std::string to_string() const;
};

// Exhaustively enumerates every trace vector of length max_depth+1, realizes
// each as a concrete letterless sentence at its stabilization depth, and
// checks the classification laws against the prover:
//   c1    constructively true xor smallest n present
//   c2.1  classically true non-theorems are provably equivalent to a
//         conjunction of tower implications with least parameter smallest_n
//   c2.2  classically false sentences are provably equivalent to
//         box_tower(smallest_n - 1) (non-prefix true sets fail this)
//   c2.3  provable iff Alpha
//   mono  tower implications and bare towers have the expected smallest n
//   multi sampled conjunctions of those have smallest n = least parameter
//   r1    negations of essentially modal sentences have smallest n = 1
//   r2    the equivalence "n-Rosser for some n / 1-Rosser / smallest n = 1"
//   r3    essentially modal sentences are weak n-Rosser for n = max of the
//         two smallest values
//   lim   nothing enumerated is strongly independent
// Counterexample lists are sorted by trace vector; every listed formula
// fails its claim deterministically (see reverify).
AuditReport audit(int max_depth, const ProverOptions& opts = {});

// Re-runs the per-sentence audit check `claim` on f; returns true iff the
// claim holds for f. Supports every claim id that can list counterexamples.
bool reverify(const std::string& claim, const FormulaPtr& f,
              const ProverOptions& opts = {});

// The conjunction of tower implications built from the maximal false-rank
// intervals of f's trace; for classically true f this is the c2.1 witness.
FormulaPtr beta_plus_witness(const FormulaPtr& f);

}  // namespace gl
