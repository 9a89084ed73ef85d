#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gl/formula.hpp"
#include "gl/prover.hpp"

namespace gl::test {

// Deterministic random formulas; every suite seeds its own generator so test
// corpora are reproducible run to run.
class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  // Random formula over `atoms` with modal depth <= box_budget and roughly
  // size_budget constructors.
  FormulaPtr sample(int box_budget, int size_budget,
                    const std::vector<std::string>& atoms) {
    return gen(box_budget, size_budget, atoms, nullptr, false);
  }

  FormulaPtr letterless(int box_budget, int size_budget) {
    return gen(box_budget, size_budget, {}, nullptr, false);
  }

  // Random template in which `var` occurs only beneath boxes. Other atoms may
  // occur anywhere.
  FormulaPtr modalized_template(const std::string& var, int box_budget,
                                int size_budget,
                                const std::vector<std::string>& extra_atoms) {
    return gen(box_budget, size_budget, extra_atoms, &var, false);
  }

  std::uint64_t next() { return rng_(); }

 private:
  FormulaPtr gen(int box_budget, int size_budget,
                 const std::vector<std::string>& atoms,
                 const std::string* modal_var, bool under_box) {
    if (size_budget <= 1) return leaf(atoms, modal_var, under_box);
    switch (rng_() % 12) {
      case 0:
      case 1:
        return Formula::neg(
            gen(box_budget, size_budget - 1, atoms, modal_var, under_box));
      case 2:
      case 3:
      case 4:
        if (box_budget > 0) {
          return Formula::box(
              gen(box_budget - 1, size_budget - 1, atoms, modal_var, true));
        }
        return leaf(atoms, modal_var, under_box);
      case 5:
      case 6:
        return binary(Kind::And, box_budget, size_budget, atoms, modal_var,
                      under_box);
      case 7:
      case 8:
        return binary(Kind::Or, box_budget, size_budget, atoms, modal_var,
                      under_box);
      case 9:
      case 10:
        return binary(Kind::Imp, box_budget, size_budget, atoms, modal_var,
                      under_box);
      default:
        return binary(Kind::Iff, box_budget, size_budget, atoms, modal_var,
                      under_box);
    }
  }

  FormulaPtr binary(Kind kind, int box_budget, int size_budget,
                    const std::vector<std::string>& atoms,
                    const std::string* modal_var, bool under_box) {
    const int left_size = 1 + static_cast<int>(rng_() % (size_budget - 1));
    FormulaPtr l = gen(box_budget, left_size, atoms, modal_var, under_box);
    FormulaPtr r =
        gen(box_budget, size_budget - left_size, atoms, modal_var, under_box);
    switch (kind) {
      case Kind::And: return Formula::conj(std::move(l), std::move(r));
      case Kind::Or: return Formula::disj(std::move(l), std::move(r));
      case Kind::Imp: return Formula::imp(std::move(l), std::move(r));
      default: return Formula::iff(std::move(l), std::move(r));
    }
  }

  FormulaPtr leaf(const std::vector<std::string>& atoms,
                  const std::string* modal_var, bool under_box) {
    std::vector<std::string> pool = atoms;
    if (modal_var && under_box) pool.push_back(*modal_var);
    if (pool.empty() || rng_() % 3 == 0) return Formula::falsum();
    return Formula::atom(pool[rng_() % pool.size()]);
  }

  std::mt19937_64 rng_;
};

// Every letterless formula with at most max_size constructors drawn from
// {bot, ~, [], &, |, ->} and modal depth <= max_depth.
inline std::vector<FormulaPtr> enumerate_letterless(int max_size,
                                                    int max_depth) {
  std::vector<std::vector<FormulaPtr>> by_size(max_size + 1);
  by_size[1].push_back(Formula::falsum());
  for (int size = 2; size <= max_size; ++size) {
    for (const FormulaPtr& f : by_size[size - 1]) {
      by_size[size].push_back(Formula::neg(f));
      by_size[size].push_back(Formula::box(f));
    }
    for (int left = 1; left <= size - 2; ++left) {
      for (const FormulaPtr& l : by_size[left]) {
        for (const FormulaPtr& r : by_size[size - 1 - left]) {
          by_size[size].push_back(Formula::conj(l, r));
          by_size[size].push_back(Formula::disj(l, r));
          by_size[size].push_back(Formula::imp(l, r));
        }
      }
    }
  }
  std::vector<FormulaPtr> out;
  for (const auto& bucket : by_size) {
    for (const FormulaPtr& f : bucket) {
      if (modal_depth(f) <= max_depth) out.push_back(f);
    }
  }
  return out;
}

// Linear frame on `size` worlds where world i sees exactly the worlds below
// it; world i realizes rank i of the trace semantics.
inline KripkeModel linear_chain(std::size_t size) {
  KripkeModel m;
  m.world_count = size;
  m.valuation.assign(size, {});
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) m.relation.emplace_back(i, j);
  }
  std::sort(m.relation.begin(), m.relation.end());
  m.root = 0;
  return m;
}

}  // namespace gl::test
