#include "gl/fixedpoint.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl/trace.hpp"

namespace gl {

namespace {

bool contains_atom(const FormulaPtr& f, std::string_view var) {
  switch (f->kind()) {
    case Kind::Falsum:
      return false;
    case Kind::Atom:
      return f->name() == var;
    case Kind::Neg:
    case Kind::Box:
      return contains_atom(f->child(), var);
    default:
      return contains_atom(f->lhs(), var) || contains_atom(f->rhs(), var);
  }
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case Kind::Falsum:
      return;
    case Kind::Atom:
      out.insert(f->name());
      return;
    case Kind::Neg:
    case Kind::Box:
      collect_atoms(f->child(), out);
      return;
    default:
      collect_atoms(f->lhs(), out);
      collect_atoms(f->rhs(), out);
      return;
  }
}

// Outermost boxed subformulas containing var, left to right, deduplicated.
void collect_maximal_boxed(const FormulaPtr& f, std::string_view var,
                           std::vector<FormulaPtr>& out) {
  switch (f->kind()) {
    case Kind::Falsum:
    case Kind::Atom:
      return;
    case Kind::Box:
      if (contains_atom(f, var)) {
        for (const FormulaPtr& seen : out) {
          if (equal(seen, f)) return;
        }
        out.push_back(f);
      }
      return;
    case Kind::Neg:
      collect_maximal_boxed(f->child(), var, out);
      return;
    default:
      collect_maximal_boxed(f->lhs(), var, out);
      collect_maximal_boxed(f->rhs(), var, out);
      return;
  }
}

// Replaces the outermost occurrences of `target` (a boxed subformula
// containing var) by `repl`, leaving other boxed var-subformulas intact.
FormulaPtr replace_maximal(const FormulaPtr& f, std::string_view var,
                           const FormulaPtr& target, const FormulaPtr& repl) {
  switch (f->kind()) {
    case Kind::Falsum:
    case Kind::Atom:
      return f;
    case Kind::Box:
      if (!contains_atom(f, var)) return f;
      return equal(f, target) ? repl : f;
    case Kind::Neg: {
      FormulaPtr c = replace_maximal(f->child(), var, target, repl);
      return c.get() == f->child().get() ? f : Formula::neg(std::move(c));
    }
    default: {
      FormulaPtr l = replace_maximal(f->lhs(), var, target, repl);
      FormulaPtr r = replace_maximal(f->rhs(), var, target, repl);
      if (l.get() == f->lhs().get() && r.get() == f->rhs().get()) return f;
      switch (f->kind()) {
        case Kind::And: return Formula::conj(std::move(l), std::move(r));
        case Kind::Or: return Formula::disj(std::move(l), std::move(r));
        case Kind::Imp: return Formula::imp(std::move(l), std::move(r));
        default: return Formula::iff(std::move(l), std::move(r));
      }
    }
  }
}

// Structural fixed point by elimination of maximal boxed subformulas.
//
// With one maximal boxed subformula []B the template is C([]B(var)) for a
// var-free context C, and C([] B[var := C(top)]) is a fixed point. With k of
// them, replace the last by a fresh atom q, solve the smaller template for
// var, then solve the single remaining boxed occurrence of q and substitute
// back. Both steps are the classical construction; the caller certifies the
// result with the prover, so a defect here cannot go unnoticed.
FormulaPtr structural_fixed_point(const FormulaPtr& tmpl, std::string_view var,
                                  std::set<std::string>& used_atoms) {
  if (!contains_atom(tmpl, var)) return tmpl;
  std::vector<FormulaPtr> maximal;
  collect_maximal_boxed(tmpl, var, maximal);

  const FormulaPtr target = maximal.back();
  if (maximal.size() == 1) {
    const FormulaPtr context_top =
        replace_maximal(tmpl, var, target, Formula::verum());
    const FormulaPtr body = substitute(target->child(), var, context_top);
    return replace_maximal(tmpl, var, target, Formula::box(body));
  }

  std::string fresh;
  for (int i = 0;; ++i) {
    fresh = "fp" + std::to_string(i);
    if (!used_atoms.count(fresh) && fresh != var) break;
  }
  used_atoms.insert(fresh);

  const FormulaPtr reduced =
      replace_maximal(tmpl, var, target, Formula::atom(fresh));
  const FormulaPtr solved = structural_fixed_point(reduced, var, used_atoms);
  // Single boxed occurrence of the fresh atom: []G(q) has fixed point []G(top).
  const FormulaPtr body = substitute(target->child(), var,
                                     substitute(solved, fresh, Formula::verum()));
  return substitute(solved, fresh, Formula::box(body));
}

}  // namespace

FixedPointResult fixed_point(const FormulaPtr& tmpl, std::string_view var,
                             const FixedPointOptions& opts) {
  if (!is_modalized_in(tmpl, var)) throw NotModalized(std::string(var));
  const int bound =
      opts.max_iterations >= 0 ? opts.max_iterations : modal_depth(tmpl) + 2;

  // The iteration from top converges for the usual diagonal templates and
  // its halting check doubles as the certificate.
  FormulaPtr current = Formula::verum();
  for (int k = 0; k <= bound; ++k) {
    FormulaPtr next = substitute(tmpl, var, current);
    if (equivalent(current, next, opts.prover)) {
      return FixedPointResult{current, k, true};
    }
    current = std::move(next);
  }

  // The iteration does not stabilize for every modalized template (for
  // example ~[][]~p, whose fixed point is bot while the iterates climb an
  // unbounded consistency tower), so fall back to the structural
  // construction and certify it.
  std::set<std::string> used_atoms;
  collect_atoms(tmpl, used_atoms);
  used_atoms.insert(std::string(var));
  const FormulaPtr solved = structural_fixed_point(tmpl, var, used_atoms);
  if (!equivalent(solved, substitute(tmpl, var, solved), opts.prover)) {
    throw NoConvergence(
        "fixed point certificate failed after structural construction for "
        "template " +
        render(tmpl));
  }
  return FixedPointResult{solved, bound + 1, true};
}

std::pair<FormulaPtr, Classification> liar(int n,
                                           const FixedPointOptions& opts) {
  if (n < 1) throw std::invalid_argument("liar requires n >= 1");
  const FormulaPtr p = Formula::atom("p");
  const FormulaPtr tmpl = Formula::imp(Formula::box(p), box_tower(n));
  const FixedPointResult fp = fixed_point(tmpl, "p", opts);
  const FormulaPtr normalized = normal_form(fp.fixed_point);
  return {normalized, classify(normalized)};
}

std::pair<FormulaPtr, Classification> godel_liar(int n) {
  if (n < 1) throw std::invalid_argument("godel_liar requires n >= 1");
  const FormulaPtr f = Formula::neg(box_tower(n));
  return {f, classify(f)};
}

}  // namespace gl
