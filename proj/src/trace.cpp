#include "gl/trace.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace gl {

std::string Trace::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i] ? 't' : 'f';
  }
  out += "] tail=";
  out += tail() ? 't' : 'f';
  return out;
}

bool operator==(const Trace& a, const Trace& b) {
  const std::size_t n = std::max(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

bool operator!=(const Trace& a, const Trace& b) { return !(a == b); }

namespace {

// Unique subformulas in postorder, so children precede parents.
void collect_subformulas(const FormulaPtr& f,
                         std::unordered_map<FormulaPtr, std::size_t,
                                            FormulaHash, FormulaEq>& seen,
                         std::vector<FormulaPtr>& order) {
  if (seen.count(f)) return;
  switch (f->kind()) {
    case Kind::Falsum:
      break;
    case Kind::Atom:
      throw NotLetterless();
    case Kind::Neg:
    case Kind::Box:
      collect_subformulas(f->child(), seen, order);
      break;
    default:
      collect_subformulas(f->lhs(), seen, order);
      collect_subformulas(f->rhs(), seen, order);
      break;
  }
  seen.emplace(f, order.size());
  order.push_back(f);
}

}  // namespace

Trace compute_trace(const FormulaPtr& f) {
  std::unordered_map<FormulaPtr, std::size_t, FormulaHash, FormulaEq> id;
  std::vector<FormulaPtr> order;
  collect_subformulas(f, id, order);

  const std::size_t d = static_cast<std::size_t>(modal_depth(f));
  const std::size_t ranks = d + 3;  // two extra ranks to witness stabilization
  const std::size_t n = order.size();

  // rows[s][i] = truth of subformula s at rank i; all_true_below[s] tracks
  // whether subformula s has been true at every rank below the current one.
  std::vector<std::vector<bool>> rows(n, std::vector<bool>(ranks));
  std::vector<bool> all_true_below(n, true);

  for (std::size_t i = 0; i < ranks; ++i) {
    for (std::size_t s = 0; s < n; ++s) {
      const FormulaPtr& g = order[s];
      bool v = false;
      switch (g->kind()) {
        case Kind::Falsum:
          v = false;
          break;
        case Kind::Neg:
          v = !rows[id.at(g->child())][i];
          break;
        case Kind::Box:
          v = all_true_below[id.at(g->child())];
          break;
        case Kind::And:
          v = rows[id.at(g->lhs())][i] && rows[id.at(g->rhs())][i];
          break;
        case Kind::Or:
          v = rows[id.at(g->lhs())][i] || rows[id.at(g->rhs())][i];
          break;
        case Kind::Imp:
          v = !rows[id.at(g->lhs())][i] || rows[id.at(g->rhs())][i];
          break;
        case Kind::Iff:
          v = rows[id.at(g->lhs())][i] == rows[id.at(g->rhs())][i];
          break;
        case Kind::Atom:
          break;  // unreachable, collect_subformulas rejects atoms
      }
      rows[s][i] = v;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (!rows[s][i]) all_true_below[s] = false;
    }
  }

  const std::vector<bool>& full = rows[id.at(f)];
  // The semantics stabilizes at the modal depth; the two extra ranks verify.
  assert(full[d + 1] == full[d] && full[d + 2] == full[d]);

  Trace t;
  t.values.assign(full.begin(), full.begin() + static_cast<long>(d) + 1);
  return t;
}

bool classical_truth(const FormulaPtr& f) { return compute_trace(f).tail(); }

bool letterless_provable(const FormulaPtr& f) {
  const Trace t = compute_trace(f);
  return std::all_of(t.values.begin(), t.values.end(), [](bool v) { return v; });
}

FormulaPtr profile_formula(const std::vector<bool>& profile) {
  assert(!profile.empty());
  const std::size_t d = profile.size() - 1;
  FormulaPtr out;
  auto append = [&out](FormulaPtr clause) {
    out = out ? Formula::disj(std::move(out), std::move(clause)) : std::move(clause);
  };
  for (std::size_t i = 0; i < d; ++i) {
    if (profile[i]) {
      append(Formula::conj(box_tower(static_cast<int>(i) + 1),
                           Formula::neg(box_tower(static_cast<int>(i)))));
    }
  }
  if (profile[d]) append(Formula::neg(box_tower(static_cast<int>(d))));
  return out ? out : Formula::falsum();
}

std::vector<bool> trim_profile(std::vector<bool> profile) {
  while (profile.size() >= 2 && profile[profile.size() - 2] == profile.back()) {
    profile.pop_back();
  }
  return profile;
}

FormulaPtr normal_form(const FormulaPtr& f) {
  return profile_formula(compute_trace(f).values);
}

}  // namespace gl
