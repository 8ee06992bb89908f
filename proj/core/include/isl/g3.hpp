#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "isl/g4.hpp"

namespace isl {

// ── occurrences ──────────────────────────────────────────────────────────

/// Identifies one antecedent occurrence. An id shared by a conclusion and
/// a premise names the same occurrence (the premise one is its ancestor);
/// ids that appear only in a premise were introduced by the rule.
using OccId = std::uint64_t;

/// Process-wide counter; ids are never reused.
OccId fresh_id();

struct Occ {
  OccId id;
  Formula f;
  friend bool operator==(const Occ& a, const Occ& b) { return a.id == b.id && a.f == b.f; }
};

struct G3Seq {
  std::vector<Occ> ante;
  std::optional<Formula> succ;

  const Occ* find(OccId id) const;
  bool has(OccId id) const { return find(id) != nullptr; }
  Sequent formulas() const;
  G3Seq without(OccId id) const;
  G3Seq with(Occ o) const;
  G3Seq with_succ(std::optional<Formula> s) const;
};

/// Fresh occurrences for the given formulas.
std::vector<Occ> make_occs(const Multiset& fs);
G3Seq make_g3seq(const Sequent& s);

// ── proofs ───────────────────────────────────────────────────────────────

enum class RuleG3 { At, LBot, RAnd, LAnd, ROr0, ROr1, LOr, RImp, LImp, RSL, Cut, RSL4, RGL, LBox };

std::string_view rule_name(RuleG3 r);
std::optional<RuleG3> rule_g3_from_name(std::string_view name);
/// RSL, RSL4 and RGL.
bool is_modal_rule(RuleG3 r);

struct G3Node;
using G3Ptr = std::shared_ptr<const G3Node>;

struct G3Node {
  G3Seq seq;
  RuleG3 rule;
  std::optional<OccId> principal;  // At, LBot, left rules, LBox
  std::optional<OccId> diag;       // modal rules: id of □φ in the premise
  std::optional<Formula> cut;      // Cut: the cut formula
  std::optional<OccId> cut_id;     // Cut: its id in the right premise
  /// Modal rules: (premise id, conclusion id) for each unboxed copy φ of a
  /// principal □φ. LBox: (premise id of □φ, conclusion id of φ).
  std::vector<std::pair<OccId, OccId>> links;
  std::vector<G3Ptr> premises;
  unsigned height = 1;
  bool cut_free = true;
  std::size_t size = 1;
};

struct G3Extra {
  std::optional<OccId> principal = {};
  std::optional<OccId> diag = {};
  std::optional<Formula> cut = {};
  std::optional<OccId> cut_id = {};
  std::vector<std::pair<OccId, OccId>> links = {};
};

G3Ptr make_g3(G3Seq seq, RuleG3 rule, std::vector<G3Ptr> premises, G3Extra extra = {});

enum class Profile { Core, WithCut, BVariant, GlcVariant };
std::string_view profile_name(Profile p);
std::optional<Profile> profile_from_name(std::string_view name);

CheckResult check_g3_proof(const G3Node& p, Profile profile);
inline unsigned height(const G3Node& p) { return p.height; }
std::size_t count_cuts(const G3Node& p);

/// Ids are renumbered 1, 2, ... in order of first appearance.
nlohmann::json g3_to_json(const G3Node& p);
/// Ids in the file are replaced by fresh ones (consistently).
G3Ptr g3_from_json(const nlohmann::json& j);
std::string g3_to_dot(const G3Node& p);

}  // namespace isl
