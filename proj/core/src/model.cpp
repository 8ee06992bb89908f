#include <algorithm>
#include <sstream>

#include "isl/parser.hpp"
#include "isl/semantics.hpp"

namespace isl {

bool KripkeModel::has_world(const World& w) const {
  return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

std::string Violation::message() const {
  std::string out = condition;
  if (!witnesses.empty()) {
    out += ":";
    for (const World& w : witnesses) out += " " + w;
  }
  return out;
}

// ── validation ───────────────────────────────────────────────────────────

std::vector<Violation> validate_model(const KripkeModel& m) {
  std::vector<Violation> out;
  if (m.worlds.empty()) out.push_back({"W nonempty", {}});
  std::set<World> ws;
  for (const World& w : m.worlds)
    if (!ws.insert(w).second) out.push_back({"duplicate world", {w}});
  auto known = [&](const World& w) { return ws.count(w) > 0; };
  for (auto& [a, b] : m.le)
    if (!known(a) || !known(b)) out.push_back({"<= mentions an unknown world", {a, b}});
  for (auto& [a, b] : m.r)
    if (!known(a) || !known(b)) out.push_back({"R mentions an unknown world", {a, b}});
  for (auto& [w, atoms] : m.val)
    if (!known(w)) out.push_back({"valuation mentions an unknown world", {w}});
  if (!out.empty()) return out;

  auto le = [&](const World& a, const World& b) { return m.le.count({a, b}) > 0; };
  auto rr = [&](const World& a, const World& b) { return m.r.count({a, b}) > 0; };
  const auto& W = m.worlds;

  for (const World& w : W)
    if (!le(w, w)) out.push_back({"<= reflexive", {w}});
  for (auto& [a, b] : m.le)
    if (a != b && le(b, a) && a < b) out.push_back({"<= antisymmetric", {a, b}});
  for (auto& [a, b] : m.le)
    for (const World& c : W)
      if (le(b, c) && !le(a, c)) out.push_back({"<= transitive", {a, b, c}});
  for (auto& [a, b] : m.le)
    for (const World& c : W)
      if (rr(b, c) && !rr(a, c)) out.push_back({"w <= v R x implies w R x", {a, b, c}});
  static const std::set<std::string> none;
  auto atoms_at = [&](const World& w) -> const std::set<std::string>& {
    auto it = m.val.find(w);
    return it == m.val.end() ? none : it->second;
  };
  for (auto& [a, b] : m.le)
    for (const std::string& p : atoms_at(a))
      if (!atoms_at(b).count(p)) out.push_back({"valuation monotone (" + p + ")", {a, b}});
  for (auto& [a, b] : m.r)
    for (const World& c : W)
      if (rr(b, c) && !rr(a, c)) out.push_back({"R transitive", {a, b, c}});

  // R acyclic: iterative DFS with colours.
  std::map<World, std::vector<World>> succ;
  for (auto& [a, b] : m.r) succ[a].push_back(b);
  std::map<World, int> colour;
  bool cyclic = false;
  std::vector<World> cycle_witness;
  std::function<void(const World&)> dfs = [&](const World& w) {
    colour[w] = 1;
    for (const World& x : succ[w]) {
      if (cyclic) return;
      if (colour[x] == 1) {
        cyclic = true;
        cycle_witness = {w, x};
        return;
      }
      if (colour[x] == 0) dfs(x);
    }
    colour[w] = 2;
  };
  for (const World& w : W)
    if (!cyclic && colour[w] == 0) dfs(w);
  if (cyclic) out.push_back({"R conversely well-founded (R-cycle)", cycle_witness});

  for (auto& [a, b] : m.r)
    if (!le(a, b)) out.push_back({"w R x implies w <= x", {a, b}});
  return out;
}

// ── forcing ──────────────────────────────────────────────────────────────

ModelEvaluator::ModelEvaluator(const KripkeModel& m) : names_(m.worlds) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
  up_.resize(names_.size());
  rsucc_.resize(names_.size());
  val_.resize(names_.size());
  for (auto& [a, b] : m.le) up_[index_.at(a)].push_back(index_.at(b));
  for (auto& [a, b] : m.r) rsucc_[index_.at(a)].push_back(index_.at(b));
  for (auto& [w, atoms] : m.val) val_[index_.at(w)] = atoms;
}

const std::vector<char>& ModelEvaluator::eval(Formula f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  std::size_t n = names_.size();
  std::vector<char> out(n, 0);
  switch (f.kind()) {
    case Kind::Bottom:
      break;
    case Kind::Atom:
      for (std::size_t w = 0; w < n; ++w) out[w] = val_[w].count(f.name()) > 0;
      break;
    case Kind::And: {
      auto a = eval(f.left());
      const auto& b = eval(f.right());
      for (std::size_t w = 0; w < n; ++w) out[w] = a[w] && b[w];
      break;
    }
    case Kind::Or: {
      auto a = eval(f.left());
      const auto& b = eval(f.right());
      for (std::size_t w = 0; w < n; ++w) out[w] = a[w] || b[w];
      break;
    }
    case Kind::Imp: {
      auto a = eval(f.left());
      const auto& b = eval(f.right());
      for (std::size_t w = 0; w < n; ++w) {
        out[w] = 1;
        for (std::size_t v : up_[w])
          if (a[v] && !b[v]) {
            out[w] = 0;
            break;
          }
      }
      break;
    }
    case Kind::Box: {
      const auto& a = eval(f.inner());
      for (std::size_t w = 0; w < n; ++w) {
        out[w] = 1;
        for (std::size_t x : rsucc_[w])
          if (!a[x]) {
            out[w] = 0;
            break;
          }
      }
      break;
    }
  }
  return memo_.emplace(f, std::move(out)).first->second;
}

bool ModelEvaluator::forces(std::size_t w, Formula f) { return eval(f).at(w) != 0; }

bool ModelEvaluator::forces(const World& w, Formula f) { return forces(index_.at(w), f); }

std::optional<std::size_t> ModelEvaluator::refuting_world(const Sequent& s) {
  std::vector<const std::vector<char>*> ante;
  for (Formula f : s.ante) ante.push_back(&eval(f));
  const std::vector<char>* succ = s.succ ? &eval(*s.succ) : nullptr;
  for (std::size_t w = 0; w < names_.size(); ++w) {
    bool all = true;
    for (auto* a : ante) all = all && (*a)[w];
    if (all && !(succ && (*succ)[w])) return w;
  }
  return std::nullopt;
}

bool forces(const KripkeModel& m, const World& w, Formula f) {
  if (!validate_model(m).empty()) throw ContractError("forces: invalid model");
  if (!m.has_world(w)) throw ContractError("forces: unknown world " + w);
  return ModelEvaluator(m).forces(w, f);
}

std::optional<World> refutes(const KripkeModel& m, const Sequent& s) {
  if (!validate_model(m).empty()) throw ContractError("refutes: invalid model");
  ModelEvaluator ev(m);
  if (auto w = ev.refuting_world(s)) return ev.name(*w);
  return std::nullopt;
}

KripkeModel generated_submodel(const KripkeModel& m, const World& w) {
  if (!m.has_world(w)) throw ContractError("generated_submodel: unknown world " + w);
  std::set<World> keep{w};
  std::vector<World> todo{w};
  while (!todo.empty()) {
    World a = todo.back();
    todo.pop_back();
    for (const auto* rel : {&m.le, &m.r})
      for (auto it = rel->lower_bound({a, ""}); it != rel->end() && it->first == a; ++it)
        if (keep.insert(it->second).second) todo.push_back(it->second);
  }
  KripkeModel out;
  for (const World& x : m.worlds)
    if (keep.count(x)) out.worlds.push_back(x);
  for (auto& p : m.le)
    if (keep.count(p.first) && keep.count(p.second)) out.le.insert(p);
  for (auto& p : m.r)
    if (keep.count(p.first) && keep.count(p.second)) out.r.insert(p);
  for (auto& [x, atoms] : m.val)
    if (keep.count(x)) out.val[x] = atoms;
  return out;
}

// ── enumeration ──────────────────────────────────────────────────────────

void for_each_model(const std::set<std::string>& atoms, unsigned max_worlds,
                    const std::function<bool(const KripkeModel&)>& visit) {
  std::vector<std::string> atom_list(atoms.begin(), atoms.end());
  for (unsigned n = 1; n <= max_worlds; ++n) {
    std::vector<World> names;
    for (unsigned i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    std::vector<std::pair<unsigned, unsigned>> off;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (i != j) off.push_back({i, j});
    for (std::uint64_t lemask = 0; lemask < (1ULL << off.size()); ++lemask) {
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
      for (unsigned i = 0; i < n; ++i) le[i][i] = true;
      for (std::size_t k = 0; k < off.size(); ++k)
        if (lemask >> k & 1) le[off[k].first][off[k].second] = true;
      bool order = true;
      for (unsigned i = 0; i < n && order; ++i)
        for (unsigned j = 0; j < n && order; ++j) {
          if (i != j && le[i][j] && le[j][i]) order = false;
          for (unsigned k = 0; k < n && order; ++k)
            if (le[i][j] && le[j][k] && !le[i][k]) order = false;
        }
      if (!order) continue;
      std::vector<std::pair<unsigned, unsigned>> strict;
      for (auto& [i, j] : off)
        if (le[i][j]) strict.push_back({i, j});
      // up-sets for the valuation
      std::vector<std::uint64_t> upsets;
      for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        bool closed = true;
        for (unsigned i = 0; i < n && closed; ++i)
          for (unsigned j = 0; j < n && closed; ++j)
            if ((s >> i & 1) && le[i][j] && !(s >> j & 1)) closed = false;
        if (closed) upsets.push_back(s);
      }
      for (std::uint64_t rmask = 0; rmask < (1ULL << strict.size()); ++rmask) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (std::size_t k = 0; k < strict.size(); ++k)
          if (rmask >> k & 1) r[strict[k].first][strict[k].second] = true;
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i)
          for (unsigned j = 0; j < n && ok; ++j)
            for (unsigned k = 0; k < n && ok; ++k) {
              if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
              if (le[i][j] && r[j][k] && !r[i][k]) ok = false;
            }
        if (!ok) continue;
        KripkeModel base;
        base.worlds = names;
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j) {
            if (le[i][j]) base.le.insert({names[i], names[j]});
            if (r[i][j]) base.r.insert({names[i], names[j]});
          }
        std::vector<std::size_t> choice(atom_list.size(), 0);
        while (true) {
          KripkeModel m = base;
          for (unsigned i = 0; i < n; ++i) m.val[names[i]];
          for (std::size_t a = 0; a < atom_list.size(); ++a)
            for (unsigned i = 0; i < n; ++i)
              if (upsets[choice[a]] >> i & 1) m.val[names[i]].insert(atom_list[a]);
          if (!visit(m)) return;
          std::size_t a = 0;
          while (a < choice.size() && ++choice[a] == upsets.size()) choice[a++] = 0;
          if (a == choice.size()) break;
        }
      }
    }
  }
}

std::vector<KripkeModel> enumerate_models(const std::set<std::string>& atoms, unsigned max_worlds) {
  std::vector<KripkeModel> out;
  for_each_model(atoms, max_worlds, [&](const KripkeModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// ── I/O ──────────────────────────────────────────────────────────────────

nlohmann::json model_to_json(const KripkeModel& m, const std::optional<World>& designated) {
  nlohmann::json j;
  j["worlds"] = m.worlds;
  j["le"] = nlohmann::json::array();
  for (auto& [a, b] : m.le)
    if (a != b) j["le"].push_back({a, b});
  j["r"] = nlohmann::json::array();
  for (auto& [a, b] : m.r) j["r"].push_back({a, b});
  j["val"] = nlohmann::json::object();
  for (const World& w : m.worlds) {
    auto it = m.val.find(w);
    j["val"][w] = it == m.val.end() ? std::vector<std::string>{}
                                    : std::vector<std::string>(it->second.begin(), it->second.end());
  }
  if (designated) j["designated"] = *designated;
  return j;
}

KripkeModel model_from_json(const nlohmann::json& j) {
  try {
    KripkeModel m;
    m.worlds = j.at("worlds").get<std::vector<World>>();
    auto pairs = [&](const char* key, std::set<WorldPair>& out) {
      if (!j.contains(key)) return;
      for (const auto& p : j.at(key)) {
        if (!p.is_array() || p.size() != 2) throw std::runtime_error(std::string(key) + ": pairs must have two worlds");
        out.insert({p[0].get<World>(), p[1].get<World>()});
      }
    };
    pairs("le", m.le);
    pairs("r", m.r);
    for (const World& w : m.worlds) m.le.insert({w, w});
    if (j.contains("val"))
      for (auto& [w, atoms] : j.at("val").items()) {
        auto& set = m.val[w];
        for (const auto& a : atoms) set.insert(a.get<std::string>());
      }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("model file: ") + e.what());
  }
}

std::string model_to_dot(const KripkeModel& m, const std::optional<World>& designated) {
  std::ostringstream os;
  os << "digraph model {\n  rankdir=BT;\n";
  std::map<World, int> id;
  for (const World& w : m.worlds) {
    int i = static_cast<int>(id.size());
    id[w] = i;
    std::string atoms;
    if (auto it = m.val.find(w); it != m.val.end())
      for (const std::string& p : it->second) atoms += (atoms.empty() ? "" : ",") + p;
    os << "  n" << i << " [label=\"" << dot_escape(w) << "\\n{" << dot_escape(atoms) << "}\"";
    if (designated && *designated == w) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (auto& [a, b] : m.le)
    if (a != b && !m.r.count({a, b})) os << "  n" << id[a] << " -> n" << id[b] << " [style=dashed];\n";
  for (auto& [a, b] : m.r) os << "  n" << id[a] << " -> n" << id[b] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace isl
