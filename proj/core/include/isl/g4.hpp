#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "isl/sequent.hpp"

namespace isl {

// ── rules ────────────────────────────────────────────────────────────────

enum class RuleG4 {
  At, LBot, RAnd, LAnd, ROr0, ROr1, LOr, RImp,
  LpImp,     // p, p→φ
  LAndImp,   // (φ∧ψ)→γ
  LOrImp,    // (φ∨ψ)→γ
  LImpImpA,  // (φ→ψ)→γ, a-variant
  ImpSL1,    // □φ→ψ with □φ absent
  ImpSL2,    // □φ→ψ with □φ present
  RSLa,
};

std::string_view rule_name(RuleG4 r);
std::optional<RuleG4> rule_g4_from_name(std::string_view name);
bool is_invertible(RuleG4 r);

/// Premises of `rule` applied backwards to `s` with the given principal
/// formula (antecedent formula for left rules, ignored for right rules).
/// Empty optional when the instance does not exist or a side condition fails.
std::optional<std::vector<Sequent>> apply_g4(const Sequent& s, RuleG4 rule, std::optional<Formula> principal);

struct RuleApp {
  RuleG4 rule;
  std::optional<Formula> principal;
  std::vector<Sequent> premises;
};

/// The invertible rules in the order they are tried. At/L⊥ detection is
/// always first and not part of the priority.
using Priority = std::array<RuleG4, 8>;
Priority default_priority();

bool is_axiom(const Sequent& s);  // At or L⊥ instance
bool is_extended_axiom(const Sequent& s);
bool is_irreducible(const Sequent& s);

/// Leaves (axioms, extended axioms) get no applications; reducible
/// sequents get the first invertible instance under `prio`; irreducible
/// sequents get every non-invertible instance.
std::vector<RuleApp> backward_applications(const Sequent& s, const Priority& prio = default_priority());

// ── search ───────────────────────────────────────────────────────────────

enum class Mark { Positive, Negative };
enum class Note { ExtendedAxiom, Axiom, Irreducible, Reducible };

struct SearchGroup {
  RuleG4 rule;
  std::optional<Formula> principal;
  std::vector<int> children;  // may be a prefix of the premises when pruned
};

struct SearchNode {
  Sequent sequent;
  Note note;
  Mark mark = Mark::Negative;
  std::vector<SearchGroup> groups;
};

/// Search DAG: identical sequents share one node.
struct SearchTree {
  std::vector<SearchNode> nodes;
  int root = 0;
  unsigned c = 0;  // box occurrences of the root sequent

  const SearchNode& node(int i) const { return nodes.at(static_cast<std::size_t>(i)); }
  bool positive() const { return node(root).mark == Mark::Positive; }
};

struct SearchOptions {
  /// Expand every premise even when the verdict is already known.
  bool full = false;
  Priority priority = default_priority();
};

SearchTree search(const Sequent& s, const SearchOptions& opts = {});
bool decide(const Sequent& s);
bool decide(const Sequent& s, const Priority& prio);

struct EdgeViolation {
  int parent, child;
};
/// Every recorded parent→child edge checked against sequent_less.
std::vector<EdgeViolation> termination_violations(const SearchTree& t);
std::size_t edge_count(const SearchTree& t);

// ── proofs ───────────────────────────────────────────────────────────────

struct G4Proof;
using G4Ptr = std::shared_ptr<const G4Proof>;

struct G4Proof {
  Sequent sequent;
  RuleG4 rule;
  std::optional<Formula> principal;
  std::vector<G4Ptr> premises;
};

G4Ptr make_g4(Sequent s, RuleG4 r, std::optional<Formula> principal, std::vector<G4Ptr> premises);

/// Reads the positive part of the tree; extended-axiom leaves are expanded.
G4Ptr extract_proof(const SearchTree& t);
G4Ptr extract_proof(const SearchTree& t, int node);
/// Proof of Γ, φ ⇒ φ in G4iSL□^a.
G4Ptr prove_identity(const Sequent& s);

struct CheckResult {
  bool ok = true;
  std::string message;
  std::string path;  // premise indices from the root, e.g. "0.1"

  explicit operator bool() const { return ok; }
};

CheckResult check_g4_proof(const G4Proof& p);
std::size_t proof_size(const G4Proof& p);
std::size_t proof_height(const G4Proof& p);

nlohmann::json to_json(const G4Proof& p);
/// Throws std::runtime_error on schema errors (two-formula succedents
/// included, which the sequent grammar rejects).
G4Ptr g4_from_json(const nlohmann::json& j);
std::string to_dot(const G4Proof& p);

}  // namespace isl
