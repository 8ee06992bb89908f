#pragma once

#include "isl/g3.hpp"
#include "isl/g4.hpp"

namespace isl {

/// G3 proof (with_cut profile) of the same endsequent. Rules without a G3
/// counterpart are compiled with Cut on small lemmas.
G3Ptr g4_to_g3(const G4Proof& p);

/// Rewrites a cut-free core proof for a variant profile: RSL becomes RSL4
/// under b_variant, and L□ steps followed by RGL under glc_variant.
G3Ptr to_profile(const G3Ptr& p, Profile profile);

}  // namespace isl
