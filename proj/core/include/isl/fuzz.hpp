#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isl/g3.hpp"
#include "isl/semantics.hpp"

namespace isl {

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned max_weight = 12;
  unsigned atoms = 2;
  unsigned max_model_worlds = 3;
};

/// Throws std::invalid_argument on count = 0, max_weight = 0 or atoms = 0.
void validate(const FuzzConfig& c);

/// Atom names used by the generator: p, q, r, s, t, u, v, w, then a8, a9, ...
std::vector<std::string> atom_names(unsigned n);

/// Seed-deterministic stream of sequents whose total weight is at most
/// max_weight.
class SequentGenerator {
 public:
  explicit SequentGenerator(const FuzzConfig& c);
  Sequent next();
  /// Formula of weight at most `budget` (and at least 1).
  Formula formula(unsigned budget);

 private:
  unsigned pick(unsigned lo, unsigned hi);

  FuzzConfig cfg_;
  std::vector<Formula> atoms_;
  std::mt19937_64 rng_;
};

std::vector<Sequent> fuzz_corpus(const FuzzConfig& c);

/// Everything the cross-check learned about one sequent.
struct FuzzCase {
  std::size_t index = 0;
  Sequent sequent;
  bool provable = false;
  bool ok = true;
  std::string error;          // first discrepancy, empty when ok
  std::size_t g4_size = 0;    // provable: extracted proof size
  std::size_t cuts = 0;       // provable: cuts after translation
  std::size_t reductions = 0; // provable: topmost-cut reductions
  std::size_t worlds = 0;     // unprovable: countermodel size
};

struct FuzzReport {
  std::vector<FuzzCase> cases;
  std::size_t provable = 0;
  std::size_t refuted = 0;
  std::size_t failures = 0;

  /// One line per case and a summary; identical configs give identical text.
  std::string text() const;
};

/// Semantic models used for the soundness half of the cross-check.
class ModelPool {
 public:
  ModelPool(const std::set<std::string>& atoms, unsigned max_worlds);
  /// A model and world refuting `s`, if any.
  std::optional<std::pair<std::size_t, std::size_t>> refute(const Sequent& s);
  std::size_t size() const { return evals_.size(); }

 private:
  std::vector<ModelEvaluator> evals_;
};

/// Decides `s` and cross-checks the verdict: proofs are checked, translated,
/// cut-eliminated and re-checked, and no pooled model may refute them;
/// countermodels must validate and refute.
FuzzCase cross_check(const Sequent& s, ModelPool& pool);

/// Adds up to `count` cuts to `p` without changing its endsequent: a
/// subproof of Γ ⇒ A becomes a cut against the identity proof of A, or an
/// antecedent occurrence is cut against its own identity proof.
G3Ptr inject_cuts(const G3Ptr& p, std::uint64_t seed, unsigned count);
FuzzReport run_fuzz(const FuzzConfig& c);

}  // namespace isl
