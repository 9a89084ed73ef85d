#include "gl/classify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gl {

std::string to_string(const Category& c) {
  switch (c.kind) {
    case CategoryKind::Alpha: return "Alpha";
    case CategoryKind::BetaPlus: return "BetaPlus(" + std::to_string(c.m) + ")";
    case CategoryKind::Gamma: return "Gamma(" + std::to_string(c.m) + ")";
    case CategoryKind::MixedFalse:
      return "MixedFalse(" + std::to_string(c.m) + ")";
  }
  return "?";
}

bool is_n_cf(const FormulaPtr& f, int n, const ProverOptions& opts) {
  if (n < 1) throw std::invalid_argument("is_n_cf requires n >= 1");
  return decide(Formula::imp(Formula::box(f), box_tower(n)), opts).provable();
}

namespace {

std::optional<int> least_false_rank_plus_one(const Trace& t) {
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    if (!t.values[k]) return static_cast<int>(k) + 1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> smallest_n(const FormulaPtr& f) {
  return least_false_rank_plus_one(compute_trace(f));
}

namespace {

// True ranks form the prefix 0..m-2 (empty for m = 1) and nothing else.
bool true_set_is_prefix(const Trace& t, int m) {
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    const bool expected = static_cast<int>(i) < m - 1;
    if (t.values[i] != expected) return false;
  }
  return !t.tail();
}

bool has_true_rank(const Trace& t) {
  return std::any_of(t.values.begin(), t.values.end(), [](bool v) { return v; });
}

bool essentially_modal(const Trace& t) {
  const bool all_true =
      std::all_of(t.values.begin(), t.values.end(), [](bool v) { return v; });
  const bool all_false = !has_true_rank(t);
  return !all_true && !all_false;
}

}  // namespace

Classification classify(const FormulaPtr& f) {
  Classification c;
  c.trace = compute_trace(f);
  c.classically_true = c.trace.tail();
  c.normal_form = profile_formula(c.trace.values);
  c.smallest_n = least_false_rank_plus_one(c.trace);
  c.constructively_true = !c.smallest_n.has_value();
  if (c.constructively_true) {
    c.category = Category{CategoryKind::Alpha, 0};
  } else if (c.classically_true) {
    c.category = Category{CategoryKind::BetaPlus, *c.smallest_n};
  } else if (true_set_is_prefix(c.trace, *c.smallest_n)) {
    c.category = Category{CategoryKind::Gamma, *c.smallest_n};
  } else {
    c.category = Category{CategoryKind::MixedFalse, *c.smallest_n};
  }
  return c;
}

RosserStatus rosser_status(const FormulaPtr& f) {
  RosserStatus status;
  const auto a = smallest_n(f);
  const auto b = smallest_n(Formula::neg(f));
  if (!a || !b) return status;
  if (*a == *b) status.n_rosser = *a;
  status.weak_rosser_n = std::max(*a, *b);
  return status;
}

bool check_neg_reflection(const FormulaPtr& f, const ProverOptions& opts) {
  const FormulaPtr not_reflected =
      Formula::conj(Formula::box(f), Formula::neg(f));
  return decide(Formula::imp(Formula::box(not_reflected), box_tower(2)), opts)
      .provable();
}

ProbeReport independence_probe(const FormulaPtr& f, int max_n,
                               const ProverOptions& opts) {
  if (max_n < 1) throw std::invalid_argument("independence_probe requires N >= 1");
  ProbeReport report;
  report.formula = f;
  bool f_side = true;
  bool neg_side = true;
  const FormulaPtr negated = Formula::neg(f);
  for (int n = 1; n <= max_n; ++n) {
    ProbeEntry e;
    e.n = n;
    e.formula_outcome =
        decide(Formula::imp(Formula::box(f), box_tower(n)), opts);
    e.negation_outcome =
        decide(Formula::imp(Formula::box(negated), box_tower(n)), opts);
    f_side = f_side && !e.formula_outcome.provable();
    neg_side = neg_side && !e.negation_outcome.provable();
    report.entries.push_back(std::move(e));
  }
  report.strong_schema_witness = f_side;
  report.extreme_schema_witness = f_side && neg_side;
  return report;
}

FormulaPtr beta_plus_witness(const FormulaPtr& f) {
  const std::vector<bool> profile = trim_profile(compute_trace(f).values);
  FormulaPtr out;
  std::size_t i = 0;
  while (i < profile.size()) {
    if (profile[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;  // maximal false interval [i, j]
    while (j + 1 < profile.size() && !profile[j + 1]) ++j;
    FormulaPtr clause = Formula::imp(box_tower(static_cast<int>(j) + 1),
                                     box_tower(static_cast<int>(i)));
    out = out ? Formula::conj(std::move(out), std::move(clause))
              : std::move(clause);
    i = j + 1;
  }
  return out ? out : Formula::verum();
}

namespace {

// ---- syntactic parameter extraction for the mono/multi claims ----

std::optional<int> tower_height(const FormulaPtr& f) {
  if (f->kind() == Kind::Falsum) return 0;
  if (f->kind() == Kind::Box) {
    auto h = tower_height(f->child());
    if (h) return *h + 1;
  }
  return std::nullopt;
}

// box_tower(m) -> box_tower(n-1) with 1 <= n <= m gives n; a bare tower
// box_tower(n-1) gives n.
std::optional<int> shape_parameter(const FormulaPtr& f) {
  if (auto h = tower_height(f)) return *h + 1;
  if (f->kind() == Kind::Imp) {
    const auto m = tower_height(f->lhs());
    const auto t = tower_height(f->rhs());
    if (m && t && *t + 1 <= *m) return *t + 1;
  }
  return std::nullopt;
}

std::optional<int> least_conjunct_parameter(const FormulaPtr& f) {
  if (f->kind() == Kind::And) {
    const auto l = least_conjunct_parameter(f->lhs());
    const auto r = least_conjunct_parameter(f->rhs());
    if (l && r) return std::min(*l, *r);
    return std::nullopt;
  }
  return shape_parameter(f);
}

// Prover-backed check that f is n-constructively false at the smallest.
bool smallest_is(const FormulaPtr& f, int n, const ProverOptions& opts) {
  if (smallest_n(f) != std::optional<int>(n)) return false;
  if (!is_n_cf(f, n, opts)) return false;
  return n == 1 || !is_n_cf(f, n - 1, opts);
}

bool check_c1(const Classification& c) {
  return c.constructively_true != c.smallest_n.has_value();
}

bool check_c21(const FormulaPtr& f, const Classification& c,
               const ProverOptions& opts) {
  if (!c.classically_true || c.constructively_true) return true;
  return equivalent(f, beta_plus_witness(f), opts);
}

bool check_c22(const FormulaPtr& f, const Classification& c,
               const ProverOptions& opts) {
  if (c.classically_true) return true;
  return equivalent(f, box_tower(*c.smallest_n - 1), opts);
}

bool check_c23(const FormulaPtr& f, const Classification& c,
               const ProverOptions& opts) {
  return decide(f, opts).provable() ==
         (c.category.kind == CategoryKind::Alpha);
}

bool check_r1(const FormulaPtr& f, const Classification& c) {
  if (!essentially_modal(c.trace)) return true;
  return smallest_n(Formula::neg(f)) == std::optional<int>(1);
}

bool check_r2(const FormulaPtr& f, const Classification& c) {
  if (!essentially_modal(c.trace)) return true;
  const auto a = c.smallest_n;
  const auto b = smallest_n(Formula::neg(f));
  const bool rosser_some_n = a && b && *a == *b;
  const bool rosser_one = a && b && *a == 1 && *b == 1;
  const bool one_cf = a && *a == 1;
  return rosser_some_n == rosser_one && rosser_one == one_cf;
}

bool check_r3(const FormulaPtr& f, const Classification& c,
              const ProverOptions& opts) {
  if (!essentially_modal(c.trace)) return true;
  const auto a = c.smallest_n;
  const auto b = smallest_n(Formula::neg(f));
  if (!a || !b) return false;
  const int n = std::max(*a, *b);
  return is_n_cf(f, n, opts) && is_n_cf(Formula::neg(f), n, opts);
}

bool check_limitation(const FormulaPtr& f, const Classification& c,
                      const ProverOptions& opts) {
  if (c.constructively_true) return true;
  return c.smallest_n && is_n_cf(f, *c.smallest_n, opts);
}

}  // namespace

const AuditClaim& AuditReport::claim(const std::string& id) const {
  for (const AuditClaim& c : claims) {
    if (c.claim == id) return c;
  }
  throw std::out_of_range("no such audit claim: " + id);
}

std::string AuditReport::to_string() const {
  std::ostringstream out;
  out << "audit of all trace vectors of length " << (max_depth + 1) << "\n";
  for (const AuditClaim& c : claims) {
    out << "claim " << c.claim << ": " << c.description << "\n"
        << "  checked " << c.instances_checked << ", confirmed "
        << c.confirmations << ", counterexamples " << c.counterexamples.size()
        << "\n";
    for (const AuditCounterexample& cx : c.counterexamples) {
      out << "  counterexample: " << render(cx.formula) << " -- " << cx.note
          << "\n";
    }
  }
  if (!notes.empty()) out << notes << "\n";
  return out.str();
}

AuditReport audit(int max_depth, const ProverOptions& opts) {
  if (max_depth < 1) throw std::invalid_argument("audit requires max_depth >= 1");
  if (max_depth > 8) {
    throw BudgetExceeded("audit depth guard is 8, got " +
                         std::to_string(max_depth));
  }

  AuditReport report;
  report.max_depth = max_depth;

  AuditClaim c1{"c1",
                "constructively true xor some least n makes it "
                "n-constructively false",
                0, 0, {}};
  AuditClaim c21{"c2.1",
                 "classically true non-theorems are equivalent to a "
                 "tower-implication conjunction with least parameter = "
                 "smallest n",
                 0, 0, {}};
  AuditClaim c22{"c2.2",
                 "classically false sentences are equivalent to the box "
                 "tower of height smallest n - 1",
                 0, 0, {}};
  AuditClaim c23{"c2.3", "provable iff category Alpha", 0, 0, {}};
  AuditClaim mono{"mono",
                  "tower implications and bare towers are n-constructively "
                  "false at the smallest, n read off their shape",
                  0, 0, {}};
  AuditClaim multi{"multi",
                   "conjunctions of tower implications and towers have "
                   "smallest n = least conjunct parameter",
                   0, 0, {}};
  AuditClaim r1{"r1",
                "the negation of an essentially modal sentence is "
                "1-constructively false",
                0, 0, {}};
  AuditClaim r2{"r2",
                "for essentially modal sentences: n-Rosser for some n, "
                "1-Rosser, and smallest n = 1 are equivalent",
                0, 0, {}};
  AuditClaim r3{"r3",
                "essentially modal sentences are weak n-Rosser at n = max "
                "of both smallest values",
                0, 0, {}};
  AuditClaim lim{"limitation",
                 "no letterless sentence is strongly independent", 0, 0, {}};

  // Every boolean vector of length max_depth+1 is the trace of some
  // letterless sentence; realize each at its stabilization depth so the
  // representatives are minimal (e.g. [f,t,t,t] realizes as ~[]bot).
  std::vector<std::vector<bool>> profiles;
  const std::size_t len = static_cast<std::size_t>(max_depth) + 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    std::vector<bool> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = (mask >> i) & 1;
    profiles.push_back(std::move(v));
  }
  std::sort(profiles.begin(), profiles.end());

  auto record = [](AuditClaim& claim, bool ok, const FormulaPtr& f,
                   const Classification& c, const std::string& note) {
    ++claim.instances_checked;
    if (ok) {
      ++claim.confirmations;
    } else {
      claim.counterexamples.push_back(AuditCounterexample{f, c, note});
    }
  };

  int box_containing = 0;
  int modal_count = 0;

  for (const std::vector<bool>& profile : profiles) {
    const FormulaPtr f = profile_formula(trim_profile(profile));
    const Classification c = classify(f);
    const bool modal = essentially_modal(c.trace);
    if (modal) ++modal_count;
    if (modal_depth(f) > 0) ++box_containing;

    record(c1, check_c1(c), f, c, "dichotomy fails");
    if (c.classically_true && !c.constructively_true) {
      record(c21, check_c21(f, c, opts), f, c,
             "not equivalent to its tower-implication conjunction");
    }
    if (!c.classically_true) {
      record(c22, check_c22(f, c, opts), f, c,
             "trace " + c.trace.to_string() +
                 " is not equivalent to box_tower(" +
                 std::to_string(*c.smallest_n - 1) + ")");
    }
    record(c23, check_c23(f, c, opts), f, c, "provability/Alpha mismatch");
    if (modal) {
      const auto nb = smallest_n(Formula::neg(f));
      record(r1, check_r1(f, c), f, c,
             "negation has smallest n = " +
                 (nb ? std::to_string(*nb) : std::string("none")) +
                 ", not 1");
      record(r2, check_r2(f, c), f, c,
             "smallest n = " + std::to_string(*c.smallest_n) +
                 " but negation has smallest n = " +
                 (nb ? std::to_string(*nb) : std::string("none")));
      record(r3, check_r3(f, c, opts), f, c, "weak Rosser bound fails");
    }
    record(lim, check_limitation(f, c, opts), f, c,
           "strongly independent sentence found");
  }

  // Shape witnesses for the taxonomy laws.
  for (int n = 1; n <= max_depth + 1; ++n) {
    const FormulaPtr gamma = box_tower(n - 1);
    record(mono, smallest_is(gamma, n, opts), gamma, classify(gamma),
           "bare tower with expected smallest n = " + std::to_string(n));
    for (int m = n; m <= max_depth + 1; ++m) {
      const FormulaPtr beta = Formula::imp(box_tower(m), box_tower(n - 1));
      record(mono, smallest_is(beta, n, opts), beta, classify(beta),
             "tower implication with expected smallest n = " +
                 std::to_string(n));
    }
  }

  std::mt19937_64 rng(0x6c1a5u);
  for (int sample = 0; sample < 20; ++sample) {
    const int conjuncts = 1 + static_cast<int>(rng() % 3);
    FormulaPtr conj;
    int least = max_depth + 2;
    for (int i = 0; i < conjuncts; ++i) {
      const int n = 1 + static_cast<int>(rng() % (max_depth + 1));
      FormulaPtr clause;
      if (rng() % 2) {
        clause = box_tower(n - 1);
      } else {
        const int m = n + static_cast<int>(rng() % (max_depth + 2 - n));
        clause = Formula::imp(box_tower(m), box_tower(n - 1));
      }
      least = std::min(least, n);
      conj = conj ? Formula::conj(std::move(conj), std::move(clause))
                  : std::move(clause);
    }
    record(multi, smallest_is(conj, least, opts), conj, classify(conj),
           "conjunction with least parameter " + std::to_string(least));
  }

  report.claims = {c1, c21, c22, c23, mono, multi, r1, r2, r3, lim};
  report.notes =
      "essentially modal sentences: " + std::to_string(modal_count) +
      "; box-containing realizations: " + std::to_string(box_containing);
  return report;
}

bool reverify(const std::string& claim, const FormulaPtr& f,
              const ProverOptions& opts) {
  if (claim == "mono") {
    const auto n = shape_parameter(f);
    return n && smallest_is(f, *n, opts);
  }
  if (claim == "multi") {
    const auto n = least_conjunct_parameter(f);
    return n && smallest_is(f, *n, opts);
  }
  const Classification c = classify(f);
  if (claim == "c1") return check_c1(c);
  if (claim == "c2.1") return check_c21(f, c, opts);
  if (claim == "c2.2") return check_c22(f, c, opts);
  if (claim == "c2.3") return check_c23(f, c, opts);
  if (claim == "r1") return check_r1(f, c);
  if (claim == "r2") return check_r2(f, c);
  if (claim == "r3") return check_r3(f, c, opts);
  if (claim == "limitation") return check_limitation(f, c, opts);
  throw std::out_of_range("no such audit claim: " + claim);
}

}  // namespace gl
