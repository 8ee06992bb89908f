#pragma once

#include <stdexcept>

#include "isl/g3.hpp"
#include "isl/parser.hpp"

namespace isl {

struct InterpolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Interpolant read off a cut-free core proof of split.whole(). The result
/// is checked with `decide` on both halves and for the atom condition;
/// a failed check throws InterpolationError.
Formula interpolate(const G3Node& p, const SplitSequent& split);

/// Same construction without the final checks.
Formula interpolant_candidate(const G3Node& p, const SplitSequent& split);

/// Proves split.whole() and interpolates. Throws InterpolationError if the
/// sequent is not provable.
Formula interpolate(const SplitSequent& split);

/// Both halves provable and atoms(I) ⊆ atoms(left) ∩ atoms(right, succ).
bool is_interpolant(Formula i, const SplitSequent& split);

}  // namespace isl
