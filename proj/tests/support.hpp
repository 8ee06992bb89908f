#pragma once

// Shared test helpers: hand-rolled generators and independent oracles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isl/isl.hpp"

namespace isl::test {

inline Formula F(const char* s) { return parse_formula(s); }
inline Sequent S(const char* s) { return parse_sequent(s); }

/// Small random formulas over a fixed atom list, independent of the
/// library's fuzz generator.
class Gen {
 public:
  explicit Gen(std::uint64_t seed, std::vector<std::string> atoms = {"p", "q", "r"})
      : rng_(seed), atoms_(std::move(atoms)) {}

  Formula formula(int depth);
  Multiset multiset(int max_size, int depth);
  Sequent sequent(int max_ante, int depth);
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
};

/// Forcing by direct recursion on the definition, quantifying over worlds
/// each time. Slow and independent of ModelEvaluator.
bool naive_forces(const KripkeModel& m, const World& w, Formula f);
bool naive_refutes_at(const KripkeModel& m, const World& w, const Sequent& s);

/// Cut-free core proofs obtained from provable generated sequents.
std::vector<G3Ptr> cut_free_proofs(std::size_t n, std::uint64_t seed, unsigned max_weight = 12);

/// ⇒ □□φ by two RSL inferences over ⊡□φ, □φ ⇒ φ, closed above by R→ and
/// At; φ must have the shape a → a for an atom a.
G3Ptr minimal_segment(Formula phi);

/// Builds the G3 occurrence sequent `s` with fresh ids.
inline G3Seq occs(const Sequent& s) { return make_g3seq(s); }

/// Antecedent formulas of `p`'s endsequent as a sorted multiset.
inline Multiset ante_of(const G3Node& p) { return p.seq.formulas().ante; }

}  // namespace isl::test
