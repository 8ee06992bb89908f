#pragma once

#include <optional>
#include <vector>

#include "isl/g3_ops.hpp"

namespace isl {

/// One reduction of a topmost cut.
struct CutStep {
  Path path;                    // position of the reduced cut
  CutMeasure measure;           // its (degree, width, level)
  std::size_t inner_cuts = 0;   // cuts introduced and eliminated while reducing it
};

struct CutElimResult {
  G3Ptr proof;
  std::vector<CutStep> steps;
};

/// Cut-free proof of left.ante, right.ante − cut_id ⇒ right.succ with the
/// ids of both endsequents. Both inputs must be cut-free and `cut_id` must
/// name an occurrence of left's succedent in right. Every cut created on
/// the way is checked to be smaller than the cut it replaces; a violation
/// throws ContractError.
G3Ptr eliminate_cut(const G3Ptr& left, const G3Ptr& right, OccId cut_id, std::size_t* inner_cuts = nullptr);

/// Leftmost of the cuts whose premises are cut-free.
std::optional<Path> topmost_cut(const G3Node& p);
/// Replaces the topmost cut by a cut-free derivation of its conclusion.
/// Returns `p` unchanged when it is cut-free.
G3Ptr reduce_topmost_cut(const G3Ptr& p, CutStep* step = nullptr);
CutElimResult eliminate_cuts(const G3Ptr& p);

}  // namespace isl
