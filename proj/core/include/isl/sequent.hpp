#pragma once

#include <optional>
#include <vector>

#include "isl/formula.hpp"

namespace isl {

using Multiset = std::vector<Formula>;

/// Single-conclusion sequent. The antecedent is kept sorted by `compare`,
/// so equal multisets have equal representations.
struct Sequent {
  Multiset ante;
  std::optional<Formula> succ;

  Sequent() = default;
  Sequent(Multiset a, std::optional<Formula> s);

  bool contains(Formula f) const;
  std::size_t count(Formula f) const;
  /// Removes one occurrence of `f`; throws ContractError if absent.
  Sequent without(Formula f) const;
  Sequent with(Formula f) const;
  Sequent with_succ(std::optional<Formula> s) const;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.ante == b.ante && a.succ == b.succ;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
};

struct SequentLess {
  bool operator()(const Sequent& a, const Sequent& b) const;
};

void sort_multiset(Multiset& m);
Multiset sorted(Multiset m);
/// Removes one occurrence of `f` from a sorted multiset.
bool erase_one(Multiset& m, Formula f);
void insert_sorted(Multiset& m, Formula f);

unsigned box_count(const Sequent& s);
/// Total number of □ occurrences in all formulas of the sequent.
unsigned box_occurrences(const Sequent& s);
std::set<std::string> atoms(const Sequent& s);

/// Dershowitz-Manna extension of the weight order: a ≪ b.
bool multiset_less(const Multiset& a, const Multiset& b);

struct SearchOrderContext {
  unsigned c = 0;
};

/// s1 ⊏^c s2. Throws ContractError if c < b(s1) or c < b(s2).
bool sequent_less(const Sequent& s1, const Sequent& s2, SearchOrderContext ctx);

}  // namespace isl
