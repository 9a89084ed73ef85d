#include "gl/prover.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace gl {

namespace {

// Rewrites every <-> into the conjunction of the two implications. The
// tableau rule set then only handles seven node kinds.
FormulaPtr desugar_iff(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::Falsum:
    case Kind::Atom:
      return f;
    case Kind::Neg: {
      FormulaPtr c = desugar_iff(f->child());
      return c.get() == f->child().get() ? f : Formula::neg(std::move(c));
    }
    case Kind::Box: {
      FormulaPtr c = desugar_iff(f->child());
      return c.get() == f->child().get() ? f : Formula::box(std::move(c));
    }
    case Kind::Iff: {
      FormulaPtr l = desugar_iff(f->lhs());
      FormulaPtr r = desugar_iff(f->rhs());
      return Formula::conj(Formula::imp(l, r), Formula::imp(r, l));
    }
    default: {
      FormulaPtr l = desugar_iff(f->lhs());
      FormulaPtr r = desugar_iff(f->rhs());
      if (l.get() == f->lhs().get() && r.get() == f->rhs().get()) return f;
      if (f->kind() == Kind::And) return Formula::conj(std::move(l), std::move(r));
      if (f->kind() == Kind::Or) return Formula::disj(std::move(l), std::move(r));
      return Formula::imp(std::move(l), std::move(r));
    }
  }
}

struct SignedKey {
  std::size_t hash;
  bool sign;
  bool operator==(const SignedKey&) const = default;
};

struct SignedKeyHash {
  std::size_t operator()(const SignedKey& k) const {
    return k.hash * 2 + (k.sign ? 1 : 0);
  }
};

struct Item {
  FormulaPtr f;
  bool sign;
  bool processed = false;
};

// Rule class of a signed formula: literals carry no propositional rule.
enum class RuleClass { Literal, Alpha, Beta };

RuleClass rule_class(const Item& it) {
  switch (it.f->kind()) {
    case Kind::Falsum:
    case Kind::Atom:
    case Kind::Box:
      return RuleClass::Literal;
    case Kind::Neg:
      return RuleClass::Alpha;
    case Kind::And:
      return it.sign ? RuleClass::Alpha : RuleClass::Beta;
    case Kind::Or:
      return it.sign ? RuleClass::Beta : RuleClass::Alpha;
    case Kind::Imp:
      return it.sign ? RuleClass::Beta : RuleClass::Alpha;
    default:
      return RuleClass::Literal;  // Iff never reaches the tableau
  }
}

struct Branch {
  std::vector<Item> items;
  std::unordered_map<SignedKey, std::vector<FormulaPtr>, SignedKeyHash> index;
  bool closed = false;

  bool contains(const FormulaPtr& f, bool sign) const {
    auto it = index.find(SignedKey{f->hash(), sign});
    if (it == index.end()) return false;
    for (const FormulaPtr& g : it->second)
      if (equal(f, g)) return true;
    return false;
  }

  void add(FormulaPtr f, bool sign) {
    if (closed || contains(f, sign)) return;
    if (contains(f, !sign) || (f->kind() == Kind::Falsum && sign)) {
      closed = true;
      return;
    }
    index[SignedKey{f->hash(), sign}].push_back(f);
    items.push_back(Item{std::move(f), sign});
  }
};

// Countermodel under construction: a tree of saturated open branches.
struct WorldTree {
  std::vector<std::string> atoms;  // sorted
  std::vector<WorldTree> children;
};

class Tableau {
 public:
  Tableau(const FormulaPtr& query, std::uint64_t budget) : budget_(budget) {
    index_subformulas(query);
  }

  std::optional<WorldTree> satisfy(Branch b) {
    spend();
    while (true) {
      if (b.closed) return std::nullopt;
      int idx = next_unprocessed(b, RuleClass::Alpha);
      if (idx >= 0) {
        apply_alpha(b, idx);
        continue;
      }
      idx = next_unprocessed(b, RuleClass::Beta);
      if (idx >= 0) return split_beta(b, idx);
      break;  // saturated
    }
    return realize_boxes(b);
  }

 private:
  void spend() {
    if (++used_ > budget_) throw ResourceLimit(used_);
  }

  // Postorder position of each subformula of the query; used to fire false
  // boxes in leftmost-innermost order. Every formula appearing on a branch
  // is a subformula of the query, so lookups always hit.
  void index_subformulas(const FormulaPtr& f) {
    switch (f->kind()) {
      case Kind::Falsum:
      case Kind::Atom:
        break;
      case Kind::Neg:
      case Kind::Box:
        index_subformulas(f->child());
        break;
      default:
        index_subformulas(f->lhs());
        index_subformulas(f->rhs());
        break;
    }
    if (!postorder_.count(PKey{f})) {
      postorder_.emplace(PKey{f}, static_cast<int>(postorder_.size()));
    }
  }

  struct PKey {
    FormulaPtr f;
    bool operator==(const PKey& o) const { return equal(f, o.f); }
  };
  struct PKeyHash {
    std::size_t operator()(const PKey& k) const { return k.f->hash(); }
  };

  int position(const FormulaPtr& f) const {
    return postorder_.at(PKey{f});
  }

  static int next_unprocessed(const Branch& b, RuleClass rc) {
    for (std::size_t i = 0; i < b.items.size(); ++i) {
      if (!b.items[i].processed && rule_class(b.items[i]) == rc)
        return static_cast<int>(i);
    }
    return -1;
  }

  static void apply_alpha(Branch& b, int idx) {
    b.items[idx].processed = true;
    const FormulaPtr f = b.items[idx].f;
    const bool sign = b.items[idx].sign;
    switch (f->kind()) {
      case Kind::Neg:
        b.add(f->child(), !sign);
        break;
      case Kind::And:  // sign is true
        b.add(f->lhs(), true);
        b.add(f->rhs(), true);
        break;
      case Kind::Or:  // sign is false
        b.add(f->lhs(), false);
        b.add(f->rhs(), false);
        break;
      default:  // Imp, sign is false
        b.add(f->lhs(), true);
        b.add(f->rhs(), false);
        break;
    }
  }

  std::optional<WorldTree> split_beta(Branch& b, int idx) {
    b.items[idx].processed = true;
    const FormulaPtr f = b.items[idx].f;
    std::pair<Item, Item> alts;
    switch (f->kind()) {
      case Kind::And:  // sign is false
        alts = {Item{f->lhs(), false}, Item{f->rhs(), false}};
        break;
      case Kind::Or:  // sign is true
        alts = {Item{f->lhs(), true}, Item{f->rhs(), true}};
        break;
      default:  // Imp, sign is true
        alts = {Item{f->lhs(), false}, Item{f->rhs(), true}};
        break;
    }
    Branch left = b;
    left.add(alts.first.f, alts.first.sign);
    if (auto w = satisfy(std::move(left))) return w;
    Branch right = std::move(b);
    right.add(alts.second.f, alts.second.sign);
    return satisfy(std::move(right));
  }

  std::optional<WorldTree> realize_boxes(const Branch& b) {
    std::vector<std::size_t> false_boxes;
    for (std::size_t i = 0; i < b.items.size(); ++i) {
      if (b.items[i].f->kind() == Kind::Box && !b.items[i].sign)
        false_boxes.push_back(i);
    }
    std::sort(false_boxes.begin(), false_boxes.end(),
              [&](std::size_t x, std::size_t y) {
                return position(b.items[x].f) < position(b.items[y].f);
              });

    WorldTree world;
    for (const Item& it : b.items) {
      if (it.f->kind() == Kind::Atom && it.sign)
        world.atoms.push_back(it.f->name());
    }
    std::sort(world.atoms.begin(), world.atoms.end());

    for (std::size_t i : false_boxes) {
      const FormulaPtr& boxed = b.items[i].f;
      Branch child;
      child.add(boxed->child(), false);
      child.add(boxed, true);
      for (const Item& it : b.items) {
        if (it.f->kind() == Kind::Box && it.sign) {
          child.add(it.f->child(), true);
          child.add(it.f, true);
        }
      }
      auto sub = satisfy(std::move(child));
      if (!sub) return std::nullopt;
      world.children.push_back(std::move(*sub));
    }
    return world;
  }

  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::unordered_map<PKey, int, PKeyHash> postorder_;
};

// Preorder world numbering; the relation is the ancestor closure of the
// spawning tree, so it is transitive and irreflexive by construction.
void flatten(const WorldTree& t, KripkeModel& m,
             std::vector<std::size_t>& ancestors) {
  const std::size_t id = m.world_count++;
  m.valuation.push_back(t.atoms);
  for (std::size_t a : ancestors) m.relation.emplace_back(a, id);
  ancestors.push_back(id);
  for (const WorldTree& c : t.children) flatten(c, m, ancestors);
  ancestors.pop_back();
}

KripkeModel extract_model(const WorldTree& tree) {
  KripkeModel m;
  std::vector<std::size_t> ancestors;
  flatten(tree, m, ancestors);
  m.root = 0;
  std::sort(m.relation.begin(), m.relation.end());
  return m;
}

class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(m), succ_(m.world_count) {
    for (const auto& [a, b] : m.relation) {
      if (a >= m.world_count || b >= m.world_count) throw UnknownWorld(std::max(a, b));
      succ_[a].push_back(b);
    }
  }

  bool eval(std::size_t w, const FormulaPtr& f) {
    const auto key = std::make_pair(f.get(), w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = false;
    switch (f->kind()) {
      case Kind::Falsum:
        v = false;
        break;
      case Kind::Atom:
        v = std::binary_search(m_.valuation[w].begin(), m_.valuation[w].end(),
                               f->name());
        break;
      case Kind::Neg:
        v = !eval(w, f->child());
        break;
      case Kind::And:
        v = eval(w, f->lhs()) && eval(w, f->rhs());
        break;
      case Kind::Or:
        v = eval(w, f->lhs()) || eval(w, f->rhs());
        break;
      case Kind::Imp:
        v = !eval(w, f->lhs()) || eval(w, f->rhs());
        break;
      case Kind::Iff:
        v = eval(w, f->lhs()) == eval(w, f->rhs());
        break;
      case Kind::Box:
        v = true;
        for (std::size_t s : succ_[w]) {
          if (!eval(s, f->child())) {
            v = false;
            break;
          }
        }
        break;
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<const Formula*, std::size_t>& p) const {
      return std::hash<const Formula*>{}(p.first) * 1000003u + p.second;
    }
  };
  const KripkeModel& m_;
  std::vector<std::vector<std::size_t>> succ_;
  std::unordered_map<std::pair<const Formula*, std::size_t>, bool, PairHash> memo_;
};

}  // namespace

ProofOutcome decide(const FormulaPtr& f, const ProverOptions& opts) {
  const FormulaPtr query = desugar_iff(f);
  Tableau tableau(query, opts.node_budget);
  Branch root;
  root.add(query, false);
  auto tree = tableau.satisfy(std::move(root));
  if (!tree) return ProofOutcome{};
  return ProofOutcome{extract_model(*tree)};
}

bool eval_in_model(const KripkeModel& m, std::size_t world, const FormulaPtr& f) {
  if (world >= m.world_count) throw UnknownWorld(world);
  return Evaluator(m).eval(world, f);
}

bool validate_model(const KripkeModel& m) {
  if (m.root >= m.world_count) return false;
  if (m.valuation.size() != m.world_count) return false;
  std::set<std::pair<std::size_t, std::size_t>> rel(m.relation.begin(),
                                                    m.relation.end());
  for (const auto& [a, b] : rel) {
    if (a >= m.world_count || b >= m.world_count) return false;
    if (a == b) return false;
    for (const auto& [c, d] : rel) {
      if (b == c && !rel.count({a, d})) return false;
    }
  }
  return true;
}

bool equivalent(const FormulaPtr& f, const FormulaPtr& g,
                const ProverOptions& opts) {
  return decide(Formula::iff(f, g), opts).provable();
}

std::string serialize_model(const KripkeModel& m) {
  std::ostringstream out;
  for (std::size_t w = 0; w < m.world_count; ++w) {
    out << 'w' << w << ": {";
    for (std::size_t i = 0; i < m.valuation[w].size(); ++i) {
      if (i) out << ", ";
      out << m.valuation[w][i];
    }
    out << "}\n";
  }
  out << "R:";
  for (std::size_t i = 0; i < m.relation.size(); ++i) {
    out << (i ? "," : " ") << '(' << m.relation[i].first << ','
        << m.relation[i].second << ')';
  }
  out << "\n";
  out << "root: w" << m.root << "\n";
  return out.str();
}

}  // namespace gl
