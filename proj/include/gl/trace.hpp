#pragma once

#include <string>
#include <vector>

#include "gl/formula.hpp"

namespace gl {

struct NotLetterless : Error {
  NotLetterless() : Error("formula contains atoms; a letterless sentence is required") {}
};

// Rank-indexed truth vector of a letterless sentence. Rank i is the world of
// depth i in a linear frame: bot is false at every rank, booleans are
// classical, and []B is true at rank i iff B is true at every rank j < i.
// values covers ranks 0..d where d is the modal depth of the source formula;
// the value stabilizes there, so values[d] (the tail) is the truth at every
// rank >= d.
struct Trace {
  std::vector<bool> values;

  bool tail() const { return values.back(); }
  bool at(std::size_t rank) const {
    return rank < values.size() ? values[rank] : tail();
  }

  // "[t,f,t] tail=t"
  std::string to_string() const;
};

// Traces compare as their stabilized extensions, so vectors of different
// lengths are equal when they agree rank by rank forever.
bool operator==(const Trace& a, const Trace& b);
bool operator!=(const Trace& a, const Trace& b);

// Evaluates the rank semantics for ranks 0..modal_depth(f), computing two
// extra ranks to check stabilization rather than assume it.
// Throws NotLetterless if f contains an atom.
Trace compute_trace(const FormulaPtr& f);

// Truth in the standard reading where every box tower is false: the trace
// tail.
bool classical_truth(const FormulaPtr& f);

// GL-theoremhood of letterless sentences: every trace entry is true. This is
// an oracle independent of the tableau prover.
bool letterless_provable(const FormulaPtr& f);

// Builds the letterless formula whose trace is exactly `profile`, where
// profile entries 0..n-2 are rank values and the last entry is the tail:
// the disjunction, in ascending rank order, of the indicator
// box_tower(i+1) & ~box_tower(i) for each true rank i, plus ~box_tower(n-1)
// when the tail is true. The empty disjunction is bot.
FormulaPtr profile_formula(const std::vector<bool>& profile);

// Shortest suffix-stabilized prefix of `profile` (keeps at least the tail).
std::vector<bool> trim_profile(std::vector<bool> profile);

// Canonical letterless formula GL-equivalent to f: profile_formula applied
// to f's trace. A pure function of the trace, kept unsimplified.
FormulaPtr normal_form(const FormulaPtr& f);

}  // namespace gl
