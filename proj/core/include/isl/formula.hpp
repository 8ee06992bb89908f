#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isl {

/// Raised when an operation is called outside its precondition.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Kind : std::uint8_t { Bottom, Atom, And, Or, Imp, Box };

struct FormulaNode;

/// Hash-consed immutable formula. Two formulas are structurally equal iff
/// their node pointers are equal, so copies are cheap and comparison is O(1).
class Formula {
 public:
  Formula();  // ⊥

  Kind kind() const;
  const std::string& name() const;  // atoms only
  Formula left() const;             // binary connectives
  Formula right() const;
  Formula inner() const;  // □

  unsigned weight() const;
  unsigned degree() const;
  unsigned box_occurrences() const;
  std::size_t hash() const;

  bool is_bottom() const { return kind() == Kind::Bottom; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_box() const { return kind() == Kind::Box; }
  bool is_imp() const { return kind() == Kind::Imp; }
  bool is_and() const { return kind() == Kind::And; }
  bool is_or() const { return kind() == Kind::Or; }

  const FormulaNode* node() const { return p_; }

  friend bool operator==(Formula a, Formula b) { return a.p_ == b.p_; }
  friend bool operator!=(Formula a, Formula b) { return a.p_ != b.p_; }

 private:
  explicit Formula(const FormulaNode* p) : p_(p) {}
  friend Formula intern(Kind, std::string_view, const FormulaNode*, const FormulaNode*);
  const FormulaNode* p_;
};

// ── constructors ─────────────────────────────────────────────────────────

Formula bot();
Formula atom(std::string_view name);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula box(Formula a);
Formula neg(Formula a);  // a -> false
Formula top();           // false -> false

// ── measures and order ───────────────────────────────────────────────────

inline unsigned weight(Formula f) { return f.weight(); }
inline unsigned degree(Formula f) { return f.degree(); }

/// Total syntactic order: weight, then constructor, then atom name, then
/// children left to right. Deterministic across runs.
int compare(Formula a, Formula b);

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return compare(a, b) < 0; }
};

std::set<std::string> atoms(Formula f);
void collect_atoms(Formula f, std::set<std::string>& out);

}  // namespace isl

template <>
struct std::hash<isl::Formula> {
  std::size_t operator()(isl::Formula f) const noexcept { return f.hash(); }
};
