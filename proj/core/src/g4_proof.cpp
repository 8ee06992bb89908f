#include <functional>
#include <map>
#include <sstream>

#include "isl/g4.hpp"
#include "isl/parser.hpp"

namespace isl {

G4Ptr make_g4(Sequent s, RuleG4 r, std::optional<Formula> principal, std::vector<G4Ptr> premises) {
  return std::make_shared<const G4Proof>(G4Proof{std::move(s), r, principal, std::move(premises)});
}

namespace {

std::vector<Sequent> premises_of(const Sequent& s, RuleG4 r, std::optional<Formula> p) {
  auto prem = apply_g4(s, r, p);
  if (!prem) throw ContractError(std::string("rule ") + std::string(rule_name(r)) + " does not apply to " + render(s));
  return *prem;
}

G4Ptr prove_mp(const Sequent& s, std::vector<Formula> hyps, Formula f);

// ── extended axioms: Γ, φ ⇒ φ by induction on the weight of φ ───────────

G4Ptr prove_id(const Sequent& s) {
  Formula phi = *s.succ;
  if (s.contains(bot())) return make_g4(s, RuleG4::LBot, bot(), {});
  switch (phi.kind()) {
    case Kind::Atom:
      return make_g4(s, RuleG4::At, phi, {});
    case Kind::And: {
      Sequent s1 = premises_of(s, RuleG4::LAnd, phi)[0];
      auto prem = premises_of(s1, RuleG4::RAnd, std::nullopt);
      G4Ptr r = make_g4(s1, RuleG4::RAnd, std::nullopt, {prove_id(prem[0]), prove_id(prem[1])});
      return make_g4(s, RuleG4::LAnd, phi, {r});
    }
    case Kind::Or: {
      auto br = premises_of(s, RuleG4::LOr, phi);
      Sequent a = premises_of(br[0], RuleG4::ROr0, std::nullopt)[0];
      Sequent b = premises_of(br[1], RuleG4::ROr1, std::nullopt)[0];
      return make_g4(s, RuleG4::LOr, phi,
                     {make_g4(br[0], RuleG4::ROr0, std::nullopt, {prove_id(a)}),
                      make_g4(br[1], RuleG4::ROr1, std::nullopt, {prove_id(b)})});
    }
    case Kind::Box: {
      Sequent prem = premises_of(s, RuleG4::RSLa, std::nullopt)[0];
      return make_g4(s, RuleG4::RSLa, std::nullopt, {prove_id(prem)});
    }
    case Kind::Imp: {
      Sequent prem = premises_of(s, RuleG4::RImp, std::nullopt)[0];
      return make_g4(s, RuleG4::RImp, std::nullopt, {prove_mp(prem, {phi.left()}, phi)});
    }
    case Kind::Bottom:
      break;
  }
  throw ContractError("prove_identity: unreachable");
}

// Γ, A1, …, An, A1→…→An→B ⇒ B, by cases on the shape of A1.
G4Ptr prove_mp(const Sequent& s, std::vector<Formula> hyps, Formula f) {
  if (s.contains(bot())) return make_g4(s, RuleG4::LBot, bot(), {});
  if (hyps.empty()) return prove_id(s);
  Formula a = hyps.front();
  Formula rest = f.right();
  std::vector<Formula> tail(hyps.begin() + 1, hyps.end());
  switch (a.kind()) {
    case Kind::Atom: {
      Sequent p = premises_of(s, RuleG4::LpImp, f)[0];
      return make_g4(s, RuleG4::LpImp, f, {prove_mp(p, tail, rest)});
    }
    case Kind::Box: {
      Sequent p = premises_of(s, RuleG4::ImpSL2, f)[0];
      return make_g4(s, RuleG4::ImpSL2, f, {prove_mp(p, tail, rest)});
    }
    case Kind::And: {
      Sequent s1 = premises_of(s, RuleG4::LAnd, a)[0];
      Sequent s2 = premises_of(s1, RuleG4::LAndImp, f)[0];
      std::vector<Formula> h{a.left(), a.right()};
      h.insert(h.end(), tail.begin(), tail.end());
      Formula g = imp(a.left(), imp(a.right(), rest));
      G4Ptr inner = make_g4(s1, RuleG4::LAndImp, f, {prove_mp(s2, h, g)});
      return make_g4(s, RuleG4::LAnd, a, {inner});
    }
    case Kind::Or: {
      auto br = premises_of(s, RuleG4::LOr, a);
      std::vector<G4Ptr> sides;
      for (int i = 0; i < 2; ++i) {
        Formula part = i == 0 ? a.left() : a.right();
        Sequent s2 = premises_of(br[i], RuleG4::LOrImp, f)[0];
        std::vector<Formula> h{part};
        h.insert(h.end(), tail.begin(), tail.end());
        sides.push_back(make_g4(br[i], RuleG4::LOrImp, f, {prove_mp(s2, h, imp(part, rest))}));
      }
      return make_g4(s, RuleG4::LOr, a, std::move(sides));
    }
    case Kind::Imp: {
      auto prem = premises_of(s, RuleG4::LImpImpA, f);
      G4Ptr left = prove_mp(prem[0], {a.left()}, a);
      G4Ptr right = prove_mp(prem[1], tail, rest);
      return make_g4(s, RuleG4::LImpImpA, f, {left, right});
    }
    case Kind::Bottom:
      break;
  }
  throw ContractError("prove_mp: unreachable");
}

std::size_t count_premises(const Sequent& s, const SearchGroup& g) {
  auto prem = apply_g4(s, g.rule, g.principal);
  return prem ? prem->size() : 0;
}

}  // namespace

G4Ptr prove_identity(const Sequent& s) {
  if (!is_extended_axiom(s)) throw ContractError("prove_identity: succedent not in antecedent");
  return prove_id(s);
}

G4Ptr extract_proof(const SearchTree& t) { return extract_proof(t, t.root); }

G4Ptr extract_proof(const SearchTree& t, int start) {
  std::map<int, G4Ptr> memo;
  std::function<G4Ptr(int)> go = [&](int i) -> G4Ptr {
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    const SearchNode& n = t.node(i);
    if (n.mark != Mark::Positive) throw ContractError("extract_proof: node is not positive");
    G4Ptr out;
    if (n.note == Note::Axiom) {
      if (n.sequent.contains(bot())) out = make_g4(n.sequent, RuleG4::LBot, bot(), {});
      else out = make_g4(n.sequent, RuleG4::At, n.sequent.succ, {});
    } else if (n.note == Note::ExtendedAxiom) {
      out = prove_id(n.sequent);
    } else {
      for (const SearchGroup& g : n.groups) {
        if (g.children.size() != count_premises(n.sequent, g)) continue;
        bool all = true;
        for (int c : g.children) all = all && t.node(c).mark == Mark::Positive;
        if (!all) continue;
        std::vector<G4Ptr> prem;
        for (int c : g.children) prem.push_back(go(c));
        out = make_g4(n.sequent, g.rule, g.principal, std::move(prem));
        break;
      }
      if (!out) throw ContractError("extract_proof: positive node without a positive group");
    }
    memo.emplace(i, out);
    return out;
  };
  return go(start);
}

// ── checker ──────────────────────────────────────────────────────────────

namespace {

CheckResult check_at(const G4Proof& p, const std::string& path) {
  auto fail = [&](std::string msg) { return CheckResult{false, std::move(msg) + " at " + render(p.sequent), path}; };
  if (p.rule == RuleG4::At && (!p.principal || !p.principal->is_atom() || p.sequent.succ != p.principal))
    return fail("At: principal must be the atomic succedent");
  if (p.rule == RuleG4::LBot && p.principal && !p.principal->is_bottom())
    return fail("LBot: principal must be false");
  auto prem = apply_g4(p.sequent, p.rule, p.principal);
  if (!prem) return fail(std::string(rule_name(p.rule)) + ": not an instance (shape or side condition)");
  if (prem->size() != p.premises.size()) return fail(std::string(rule_name(p.rule)) + ": wrong number of premises");
  for (std::size_t i = 0; i < prem->size(); ++i) {
    std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (!p.premises[i]) return CheckResult{false, "missing premise", sub};
    if (p.premises[i]->sequent != (*prem)[i])
      return CheckResult{false, std::string(rule_name(p.rule)) + ": premise " + std::to_string(i) + " is " +
                                    render(p.premises[i]->sequent) + ", expected " + render((*prem)[i]),
                         sub};
    if (CheckResult r = check_at(*p.premises[i], sub); !r) return r;
  }
  return {};
}

}  // namespace

CheckResult check_g4_proof(const G4Proof& p) { return check_at(p, ""); }

std::size_t proof_size(const G4Proof& p) {
  std::size_t n = 1;
  for (const G4Ptr& q : p.premises) n += proof_size(*q);
  return n;
}

std::size_t proof_height(const G4Proof& p) {
  std::size_t h = 0;
  for (const G4Ptr& q : p.premises) h = std::max(h, proof_height(*q));
  return h + 1;
}

// ── serialization ────────────────────────────────────────────────────────

nlohmann::json to_json(const G4Proof& p) {
  nlohmann::json j;
  j["calculus"] = "g4";
  j["rule"] = std::string(rule_name(p.rule));
  j["sequent"] = render(p.sequent);
  j["principal"] = p.principal ? nlohmann::json(render(*p.principal)) : nlohmann::json(nullptr);
  j["premises"] = nlohmann::json::array();
  for (const G4Ptr& q : p.premises) j["premises"].push_back(to_json(*q));
  return j;
}

G4Ptr g4_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw std::runtime_error("proof node must be an object");
    if (j.contains("calculus") && j.at("calculus") != "g4") throw std::runtime_error("not a g4 proof");
    auto rule = rule_g4_from_name(j.at("rule").get<std::string>());
    if (!rule) throw std::runtime_error("unknown rule " + j.at("rule").dump());
    Sequent s = parse_sequent(j.at("sequent").get<std::string>());
    std::optional<Formula> principal;
    if (j.contains("principal") && !j.at("principal").is_null())
      principal = parse_formula(j.at("principal").get<std::string>());
    std::vector<G4Ptr> prem;
    for (const auto& q : j.at("premises")) prem.push_back(g4_from_json(q));
    return make_g4(std::move(s), *rule, principal, std::move(prem));
  } catch (const ParseError& e) {
    throw std::runtime_error(std::string("proof file: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("proof file: ") + e.what());
  }
}

std::string to_dot(const G4Proof& p) {
  std::ostringstream os;
  os << "digraph proof {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  int next = 0;
  std::function<int(const G4Proof&)> emit = [&](const G4Proof& n) {
    int id = next++;
    os << "  n" << id << " [label=\"" << dot_escape(render(n.sequent)) << "\\n" << rule_name(n.rule) << "\"];\n";
    for (const G4Ptr& q : n.premises) {
      int c = emit(*q);
      os << "  n" << c << " -> n" << id << ";\n";
    }
    return id;
  };
  emit(p);
  os << "}\n";
  return os.str();
}

}  // namespace isl
