#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "isl/g4.hpp"

namespace isl {

using World = std::string;
using WorldPair = std::pair<World, World>;

struct KripkeModel {
  std::vector<World> worlds;
  std::set<WorldPair> le;  // intuitionistic relation ≤
  std::set<WorldPair> r;   // modal relation R
  std::map<World, std::set<std::string>> val;

  bool has_world(const World& w) const;
  std::size_t size() const { return worlds.size(); }
};

struct Violation {
  std::string condition;  // e.g. "R transitive"
  std::vector<World> witnesses;

  std::string message() const;
};

/// Empty iff the model satisfies all eight conditions of an iSL-model.
std::vector<Violation> validate_model(const KripkeModel& m);

/// Index-based view of a model for repeated forcing queries. Does not
/// validate; callers check `validate_model` first when the input is untrusted.
class ModelEvaluator {
 public:
  explicit ModelEvaluator(const KripkeModel& m);

  bool forces(std::size_t w, Formula f);
  bool forces(const World& w, Formula f);
  /// Index of a world forcing the antecedent and not the succedent.
  std::optional<std::size_t> refuting_world(const Sequent& s);
  const World& name(std::size_t i) const { return names_[i]; }
  std::size_t size() const { return names_.size(); }

 private:
  const std::vector<char>& eval(Formula f);

  std::vector<World> names_;
  std::map<World, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_;     // v with w ≤ v
  std::vector<std::vector<std::size_t>> rsucc_;  // x with w R x
  std::vector<std::set<std::string>> val_;
  std::unordered_map<Formula, std::vector<char>> memo_;
};

/// Throws ContractError if the model is invalid or w is not a world.
bool forces(const KripkeModel& m, const World& w, Formula f);
std::optional<World> refutes(const KripkeModel& m, const Sequent& s);
KripkeModel generated_submodel(const KripkeModel& m, const World& w);

/// Calls `visit` on every iSL-model with 1..max_worlds worlds named
/// w0, w1, ... over the given atoms; stops early when `visit` returns false.
void for_each_model(const std::set<std::string>& atoms, unsigned max_worlds,
                    const std::function<bool(const KripkeModel&)>& visit);
std::vector<KripkeModel> enumerate_models(const std::set<std::string>& atoms, unsigned max_worlds);

struct Countermodel {
  KripkeModel model;
  World world;  // designated, refutes the root sequent
};

/// Requires a search tree built with `full = true` and a negative node.
Countermodel countermodel(const SearchTree& t);
Countermodel countermodel(const SearchTree& t, int node);
/// Runs a full search; throws ContractError if the sequent is provable.
Countermodel countermodel(const Sequent& s);

nlohmann::json model_to_json(const KripkeModel& m, const std::optional<World>& designated = std::nullopt);
/// Reflexive ≤ pairs are added automatically. Throws std::runtime_error
/// on malformed input.
KripkeModel model_from_json(const nlohmann::json& j);
std::string model_to_dot(const KripkeModel& m, const std::optional<World>& designated = std::nullopt);

}  // namespace isl
