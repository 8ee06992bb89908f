#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "isl/g3.hpp"

namespace isl {

/// Premise indices from the root.
using Path = std::vector<std::size_t>;
using IdMap = std::map<OccId, OccId>;

// ── identifiers ──────────────────────────────────────────────────────────

/// Consistent renaming: ids in `m` are mapped, every other id gets a fresh
/// one. `root_map`, when given, receives old → new for the endsequent.
G3Ptr refresh_ids(const G3Ptr& p, const IdMap& m = {}, IdMap* root_map = nullptr);
/// Renames the ids in `m` and leaves the others alone.
G3Ptr rename_ids(const G3Ptr& p, const IdMap& m);
/// Renames the endsequent to `target`, matching equal ids first and then
/// equal formulas. The antecedent multisets must be equal.
G3Ptr relabel(const G3Ptr& p, const G3Seq& target);
/// Contracts surplus and weakens missing occurrences, then relabels.
/// Every formula of the endsequent must occur in `target`.
G3Ptr adjust(const G3Ptr& p, const G3Seq& target);

// ── height-preserving transformations (cut-free inputs unless noted) ────

/// Adds `o` to the endsequent. Also defined on proofs with cuts.
G3Ptr weaken(const G3Ptr& p, const Occ& o);
G3Ptr weaken(const G3Ptr& p, const std::vector<Occ>& os);
/// Removes occurrence `drop`, which must have the same formula as `keep`.
G3Ptr contract(const G3Ptr& p, OccId keep, OccId drop);

enum class Inversion { LAnd, LOr0, LOr1, LImp, RAnd0, RAnd1, RImp };
/// Left inversions replace occurrence `x` by fresh occurrences of its
/// components (B for LImp). Right inversions ignore `x`.
G3Ptr invert(const G3Ptr& p, Inversion k, OccId x = 0);
/// Γ ⇒ ⊥ becomes Γ ⇒ succ.
G3Ptr falsum(const G3Ptr& p, std::optional<Formula> succ);
/// Proof of `s`, whose succedent equals the formula of occurrence `a`.
G3Ptr identity(const G3Seq& s, OccId a);

/// RSL with the given conclusion over a premise whose ids are already
/// final: kept boxes become principal, fresh formulas are matched to them
/// as copies, boxes absent from the premise form Σ. Missing copies and
/// missing Π formulas are weakened in.
G3Ptr build_rsl(const G3Seq& conclusion, const G3Ptr& premise, std::optional<OccId> diag = std::nullopt);
/// RSL over a premise with arbitrary ids: boxes whose formula or unboxed
/// formula the premise uses become principal, the rest form Σ.
G3Ptr rsl_over(const G3Seq& conclusion, const G3Ptr& premise);

// ── positions ────────────────────────────────────────────────────────────

const G3Node& node_at(const G3Node& root, const Path& path);
G3Ptr subproof(const G3Ptr& root, const Path& path);
G3Ptr replace_at(const G3Ptr& root, const Path& path, const G3Ptr& sub);
/// Number of modal inferences strictly below the node at `path`.
unsigned grade(const G3Node& root, const Path& path);

// ── strong weakening ─────────────────────────────────────────────────────

/// Every sequent S becomes S^χ; the endsequent gains χ.
G3Ptr strong_weaken_up(const G3Ptr& p, Formula chi);
G3Ptr strong_weaken_up(const G3Ptr& p, const Multiset& theta);
/// Every sequent S becomes S_χ; the endsequent gains □χ.
G3Ptr strong_weaken_down(const G3Ptr& p, Formula chi);
G3Ptr strong_weaken_down(const G3Ptr& p, const Multiset& theta);

/// Deletes occurrence `d` and its ancestors. Throws ContractError if an
/// ancestor of `d` is principal somewhere.
G3Ptr prune_occurrence(const G3Ptr& p, OccId d);

// ── measures ─────────────────────────────────────────────────────────────

struct CutMeasure {
  unsigned degree = 0;
  unsigned width = 0;
  unsigned level = 0;
  friend auto operator<=>(const CutMeasure&, const CutMeasure&) = default;
};

/// Paths (relative to `p`) of the □φ-critical inferences over the
/// endsequent of `p`, where `boxed` is □φ.
std::vector<Path> critical_inferences(const G3Node& p, Formula boxed);
/// Measure of a cut with left premise `left` and right premise `right`.
CutMeasure cut_measure(const G3Node& left, const G3Node& right, Formula cut);
CutMeasure cut_measure(const G3Node& cut_node);
/// (0, 0, 0) for cut-free proofs.
CutMeasure dwl(const G3Node& p);

}  // namespace isl
