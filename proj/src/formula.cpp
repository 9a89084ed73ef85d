#include "gl/formula.hpp"

#include <functional>
#include <sstream>
#include <utility>

namespace gl {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(Kind k, const std::string& name, const FormulaPtr& lhs,
                      const FormulaPtr& rhs) {
  std::size_t h = static_cast<std::size_t>(k) * 0x100000001b3ULL + 0xcbf29ce4ULL;
  if (!name.empty()) h = mix(h, std::hash<std::string>{}(name));
  if (lhs) h = mix(h, lhs->hash());
  if (rhs) h = mix(h, rhs->hash());
  return h;
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t offset_,
                       std::vector<std::string> expected_)
    : Error(std::move(message)), offset(offset_), expected(std::move(expected_)) {}

Formula::Formula(Kind k, std::string name, FormulaPtr lhs, FormulaPtr rhs)
    : kind_(k),
      name_(std::move(name)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      hash_(node_hash(k, name_, lhs_, rhs_)) {}

FormulaPtr Formula::falsum() {
  static const FormulaPtr instance(new Formula(Kind::Falsum, {}, nullptr, nullptr));
  return instance;
}

FormulaPtr Formula::verum() { return neg(falsum()); }

FormulaPtr Formula::atom(std::string name) {
  return FormulaPtr(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::neg(FormulaPtr a) {
  return FormulaPtr(new Formula(Kind::Neg, {}, std::move(a), nullptr));
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::And, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Or, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::imp(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Imp, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::iff(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Iff, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::box(FormulaPtr a) {
  return FormulaPtr(new Formula(Kind::Box, {}, std::move(a), nullptr));
}

FormulaPtr Formula::diamond(FormulaPtr a) { return neg(box(neg(std::move(a)))); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Kind::Falsum:
      return true;
    case Kind::Atom:
      return a->name() == b->name();
    case Kind::Neg:
    case Kind::Box:
      return equal(a->child(), b->child());
    default:
      return equal(a->lhs(), b->lhs()) && equal(a->rhs(), b->rhs());
  }
}

namespace {

// Grammar levels, loosest binding first. A node may appear unparenthesized in
// a context requiring at least its own level.
constexpr int kIffLevel = 1;
constexpr int kImpLevel = 2;
constexpr int kOrLevel = 3;
constexpr int kAndLevel = 4;
constexpr int kUnaryLevel = 5;

int level_of(Kind k) {
  switch (k) {
    case Kind::Iff: return kIffLevel;
    case Kind::Imp: return kImpLevel;
    case Kind::Or: return kOrLevel;
    case Kind::And: return kAndLevel;
    case Kind::Neg:
    case Kind::Box: return kUnaryLevel;
    default: return kUnaryLevel + 1;  // Falsum, Atom
  }
}

void render_into(const FormulaPtr& f, int min_level, std::string& out) {
  const bool parens = level_of(f->kind()) < min_level;
  if (parens) out += '(';
  switch (f->kind()) {
    case Kind::Falsum:
      out += "bot";
      break;
    case Kind::Atom:
      out += f->name();
      break;
    case Kind::Neg:
      out += '~';
      render_into(f->child(), kUnaryLevel, out);
      break;
    case Kind::Box:
      out += "[]";
      render_into(f->child(), kUnaryLevel, out);
      break;
    case Kind::And:
      render_into(f->lhs(), kAndLevel, out);
      out += " & ";
      render_into(f->rhs(), kAndLevel + 1, out);
      break;
    case Kind::Or:
      render_into(f->lhs(), kOrLevel, out);
      out += " | ";
      render_into(f->rhs(), kOrLevel + 1, out);
      break;
    case Kind::Imp:
      render_into(f->lhs(), kImpLevel + 1, out);
      out += " -> ";
      render_into(f->rhs(), kImpLevel, out);
      break;
    case Kind::Iff:
      render_into(f->lhs(), kIffLevel, out);
      out += " <-> ";
      render_into(f->rhs(), kIffLevel + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string render(const FormulaPtr& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

int modal_depth(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::Falsum:
    case Kind::Atom:
      return 0;
    case Kind::Neg:
      return modal_depth(f->child());
    case Kind::Box:
      return 1 + modal_depth(f->child());
    default:
      return std::max(modal_depth(f->lhs()), modal_depth(f->rhs()));
  }
}

bool is_letterless(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::Falsum:
      return true;
    case Kind::Atom:
      return false;
    case Kind::Neg:
    case Kind::Box:
      return is_letterless(f->child());
    default:
      return is_letterless(f->lhs()) && is_letterless(f->rhs());
  }
}

FormulaPtr substitute(const FormulaPtr& f, std::string_view var,
                      const FormulaPtr& g) {
  switch (f->kind()) {
    case Kind::Falsum:
      return f;
    case Kind::Atom:
      return f->name() == var ? g : f;
    case Kind::Neg: {
      FormulaPtr c = substitute(f->child(), var, g);
      return c.get() == f->child().get() ? f : Formula::neg(std::move(c));
    }
    case Kind::Box: {
      FormulaPtr c = substitute(f->child(), var, g);
      return c.get() == f->child().get() ? f : Formula::box(std::move(c));
    }
    default: {
      FormulaPtr l = substitute(f->lhs(), var, g);
      FormulaPtr r = substitute(f->rhs(), var, g);
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

namespace {

bool occurs_unboxed(const FormulaPtr& f, std::string_view var) {
  switch (f->kind()) {
    case Kind::Falsum:
      return false;
    case Kind::Atom:
      return f->name() == var;
    case Kind::Neg:
      return occurs_unboxed(f->child(), var);
    case Kind::Box:
      return false;  // everything below is boxed
    default:
      return occurs_unboxed(f->lhs(), var) || occurs_unboxed(f->rhs(), var);
  }
}

}  // namespace

bool is_modalized_in(const FormulaPtr& f, std::string_view var) {
  return !occurs_unboxed(f, var);
}

FormulaPtr box_tower(int n) {
  FormulaPtr t = Formula::falsum();
  for (int i = 0; i < n; ++i) t = Formula::box(std::move(t));
  return t;
}

FormulaPtr reflection(const FormulaPtr& f) {
  return Formula::imp(Formula::box(f), f);
}

}  // namespace gl
