#include "support.hpp"

namespace isl::test {

Formula Gen::formula(int depth) {
  int k = depth <= 0 ? below(2) : below(8);
  switch (k) {
    case 0: return below(6) == 0 ? bot() : atom(atoms_[static_cast<std::size_t>(below(static_cast<int>(atoms_.size())))]);
    case 1: return atom(atoms_[static_cast<std::size_t>(below(static_cast<int>(atoms_.size())))]);
    case 2: return conj(formula(depth - 1), formula(depth - 1));
    case 3: return disj(formula(depth - 1), formula(depth - 1));
    case 4:
    case 5: return imp(formula(depth - 1), formula(depth - 1));
    default: return box(formula(depth - 1));
  }
}

Multiset Gen::multiset(int max_size, int depth) {
  Multiset m;
  for (int i = below(max_size + 1); i > 0; --i) m.push_back(formula(depth));
  return m;
}

Sequent Gen::sequent(int max_ante, int depth) {
  Multiset a = multiset(max_ante, depth);
  if (below(8) == 0) return Sequent(std::move(a), std::nullopt);
  return Sequent(std::move(a), formula(depth));
}

namespace {

std::vector<World> related(const std::set<WorldPair>& rel, const World& w) {
  std::vector<World> out;
  for (const auto& [a, b] : rel)
    if (a == w) out.push_back(b);
  return out;
}

}  // namespace

bool naive_forces(const KripkeModel& m, const World& w, Formula f) {
  switch (f.kind()) {
    case Kind::Bottom: return false;
    case Kind::Atom: return m.val.count(w) && m.val.at(w).count(f.name());
    case Kind::And: return naive_forces(m, w, f.left()) && naive_forces(m, w, f.right());
    case Kind::Or: return naive_forces(m, w, f.left()) || naive_forces(m, w, f.right());
    case Kind::Imp:
      for (const World& v : related(m.le, w))
        if (naive_forces(m, v, f.left()) && !naive_forces(m, v, f.right())) return false;
      return true;
    case Kind::Box:
      for (const World& v : related(m.r, w))
        if (!naive_forces(m, v, f.inner())) return false;
      return true;
  }
  return false;
}

bool naive_refutes_at(const KripkeModel& m, const World& w, const Sequent& s) {
  for (Formula a : s.ante)
    if (!naive_forces(m, w, a)) return false;
  return !s.succ || !naive_forces(m, w, *s.succ);
}

std::vector<G3Ptr> cut_free_proofs(std::size_t n, std::uint64_t seed, unsigned max_weight) {
  FuzzConfig cfg;
  cfg.seed = seed;
  cfg.max_weight = max_weight;
  cfg.atoms = 3;
  SequentGenerator g(cfg);
  std::vector<G3Ptr> out;
  for (std::size_t tries = 0; out.size() < n && tries < 50 * n; ++tries) {
    Sequent s = g.next();
    SearchTree t = search(s);
    if (!t.positive()) continue;
    out.push_back(eliminate_cuts(g4_to_g3(*extract_proof(t))).proof);
  }
  return out;
}

G3Ptr minimal_segment(Formula phi) {
  Occ d1{fresh_id(), box(box(phi))};
  Occ c{fresh_id(), box(phi)};
  Occ d2{fresh_id(), box(phi)};
  Occ a{fresh_id(), phi.left()};
  G3Ptr at = make_g3(G3Seq{{d1, c, d2, a}, phi.right()}, RuleG3::At, {}, {.principal = a.id});
  G3Ptr top = make_g3(G3Seq{{d1, c, d2}, phi}, RuleG3::RImp, {at});
  G3Ptr mid = make_g3(G3Seq{{d1}, box(phi)}, RuleG3::RSL, {top}, {.diag = d2.id, .links = {{c.id, d1.id}}});
  return make_g3(G3Seq{{}, box(box(phi))}, RuleG3::RSL, {mid}, {.diag = d1.id});
}

}  // namespace isl::test
