#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gl {

// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by parse() on malformed input. `offset` is the byte position of the
// offending token; `expected` lists the token classes that would have been
// accepted there.
struct ParseError : Error {
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected);
  std::size_t offset;
  std::vector<std::string> expected;
};

enum class Kind : unsigned char {
  Falsum,
  Atom,
  Neg,
  And,
  Or,
  Imp,
  Iff,
  Box,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable modal formula tree. Verum and diamond are not node kinds: the
// builders desugar them to ~bot and ~[]~A respectively, so every consumer
// only ever sees the eight kinds above. Each node caches a structural hash,
// making hash lookups O(1) and inequality checks cheap.
class Formula {
 public:
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }     // Atom only
  const FormulaPtr& child() const { return lhs_; }      // Neg, Box
  const FormulaPtr& lhs() const { return lhs_; }        // binary nodes
  const FormulaPtr& rhs() const { return rhs_; }
  std::size_t hash() const { return hash_; }

  static FormulaPtr falsum();
  static FormulaPtr verum();  // ~bot
  static FormulaPtr atom(std::string name);
  static FormulaPtr neg(FormulaPtr a);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr imp(FormulaPtr l, FormulaPtr r);
  static FormulaPtr iff(FormulaPtr l, FormulaPtr r);
  static FormulaPtr box(FormulaPtr a);
  static FormulaPtr diamond(FormulaPtr a);  // ~[]~a

 private:
  Formula(Kind k, std::string name, FormulaPtr lhs, FormulaPtr rhs);

  Kind kind_;
  std::string name_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
  std::size_t hash_;
};

// Structural equality; this is the notion of formula identity used everywhere.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Hash/equality adaptors for keying containers by formula structure.
struct FormulaHash {
  std::size_t operator()(const FormulaPtr& f) const { return f->hash(); }
};
struct FormulaEq {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return equal(a, b);
  }
};

// Parses the concrete grammar:
//   formula := iff
//   iff     := imp ("<->" imp)*          left-associative
//   imp     := or ("->" imp)?            right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("~" | "[]" | "<>" | "box" | "dia") unary | atom
//   atom    := "bot" | "top" | ident | "(" formula ")"
//   ident   := [a-z][a-zA-Z0-9_]*
// Whitespace-insensitive; {bot, top, box, dia} are reserved and never parse
// as atoms.
FormulaPtr parse(std::string_view text);

// Canonical ASCII rendering with minimal parentheses; parse(render(f)) is
// structurally equal to f.
std::string render(const FormulaPtr& f);

// Maximum Box nesting along any root-to-leaf path.
int modal_depth(const FormulaPtr& f);

// True iff f contains no atom.
bool is_letterless(const FormulaPtr& f);

// Replaces every occurrence of Atom(var) in f by g; shares unchanged subtrees.
FormulaPtr substitute(const FormulaPtr& f, std::string_view var,
                      const FormulaPtr& g);

// True iff every occurrence of Atom(var) lies beneath at least one Box
// (vacuously true when var does not occur).
bool is_modalized_in(const FormulaPtr& f, std::string_view var);

// n-fold box of bot; box_tower(0) is bot.
FormulaPtr box_tower(int n);

// []f -> f.
FormulaPtr reflection(const FormulaPtr& f);

}  // namespace gl
