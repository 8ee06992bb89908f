#include <map>

#include "isl/parser.hpp"
#include "isl/semantics.hpp"

namespace isl {

namespace {

class Builder {
 public:
  explicit Builder(const SearchTree& t) : t_(t) {}

  Countermodel build(int i) {
    if (auto it = memo_.find(i); it != memo_.end()) return it->second;
    const SearchNode& n = t_.node(i);
    if (n.mark != Mark::Negative) throw ContractError("countermodel: node is positive: " + render(n.sequent));
    Countermodel out = n.note == Note::Reducible ? reducible(n) : irreducible(n);
    memo_.emplace(i, out);
    return out;
  }

 private:
  int first_negative(const SearchGroup& g) const {
    for (int c : g.children)
      if (t_.node(c).mark == Mark::Negative) return c;
    throw ContractError("countermodel: negative group without a negative premise (search not full?)");
  }

  Countermodel reducible(const SearchNode& n) {
    if (n.groups.empty()) throw ContractError("countermodel: reducible node was not expanded");
    return build(first_negative(n.groups.front()));
  }

  Countermodel irreducible(const SearchNode& n) {
    // A negative right premise of L→→^a or →SL,1 already refutes the node.
    for (const SearchGroup& g : n.groups)
      if ((g.rule == RuleG4::LImpImpA || g.rule == RuleG4::ImpSL1) && g.children.size() == 2 &&
          t_.node(g.children[1]).mark == Mark::Negative)
        return build(g.children[1]);

    Countermodel out;
    const World root = "w";
    out.model.worlds.push_back(root);
    out.model.le.insert({root, root});
    auto& v = out.model.val[root];
    for (Formula f : n.sequent.ante)
      if (f.is_atom()) v.insert(f.name());
    out.world = root;

    int k = 0, l = 0;
    for (const SearchGroup& g : n.groups) {
      if (g.children.empty()) throw ContractError("countermodel: group was not expanded");
      std::string prefix;
      bool modal = false;
      switch (g.rule) {
        case RuleG4::LImpImpA: prefix = "k" + std::to_string(k++); break;
        case RuleG4::ImpSL1: prefix = "l" + std::to_string(l++); modal = true; break;
        case RuleG4::RSLa: prefix = "x"; modal = true; break;
        case RuleG4::ROr0: prefix = "h1"; break;
        case RuleG4::ROr1: prefix = "h2"; break;
        default: throw ContractError("countermodel: unexpected rule at irreducible node");
      }
      int child = g.children[0];
      if (t_.node(child).mark != Mark::Negative) throw ContractError("countermodel: expected a negative left premise");
      Countermodel sub = build(child);
      KripkeModel part = generated_submodel(sub.model, sub.world);
      auto rename = [&](const World& w) { return prefix + "." + w; };
      for (const World& w : part.worlds) out.model.worlds.push_back(rename(w));
      for (auto& [a, b] : part.le) out.model.le.insert({rename(a), rename(b)});
      for (auto& [a, b] : part.r) out.model.r.insert({rename(a), rename(b)});
      for (auto& [w, atoms] : part.val) out.model.val[rename(w)] = atoms;
      for (const World& w : part.worlds) out.model.le.insert({root, rename(w)});
      if (modal) out.model.r.insert({root, rename(sub.world)});
    }
    close_relations(out.model);
    return out;
  }

  // R := R ∪ R∘R ∪ ≤∘R until nothing changes.
  static void close_relations(KripkeModel& m) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<WorldPair> add;
      for (const auto* rel : {&m.r, &m.le})
        for (auto& [a, b] : *rel)
          for (auto it = m.r.lower_bound({b, ""}); it != m.r.end() && it->first == b; ++it)
            if (!m.r.count({a, it->second})) add.insert({a, it->second});
      if (!add.empty()) {
        m.r.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }

  const SearchTree& t_;
  std::map<int, Countermodel> memo_;
};

}  // namespace

Countermodel countermodel(const SearchTree& t) { return countermodel(t, t.root); }

Countermodel countermodel(const SearchTree& t, int node) { return Builder(t).build(node); }

Countermodel countermodel(const Sequent& s) {
  SearchOptions o;
  o.full = true;
  SearchTree t = search(s, o);
  if (t.positive()) throw ContractError("countermodel: sequent is provable");
  return countermodel(t);
}

}  // namespace isl
