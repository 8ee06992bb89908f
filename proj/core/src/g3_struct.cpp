#include <algorithm>
#include <functional>
#include <unordered_map>

#include "isl/g3_ops.hpp"
#include "isl/parser.hpp"

namespace isl {

namespace {

G3Extra extra_of(const G3Node& n) { return {n.principal, n.diag, n.cut, n.cut_id, n.links}; }

G3Ptr rebuild(const G3Node& n, G3Seq seq, std::vector<G3Ptr> prem) {
  return make_g3(std::move(seq), n.rule, std::move(prem), extra_of(n));
}

G3Ptr rebuild(const G3Node& n, G3Seq seq, std::vector<G3Ptr> prem, G3Extra x) {
  return make_g3(std::move(seq), n.rule, std::move(prem), std::move(x));
}

G3Seq plus(G3Seq s, const std::vector<Occ>& add) {
  s.ante.insert(s.ante.end(), add.begin(), add.end());
  return s;
}

const Occ& must_find(const G3Seq& s, OccId id, const char* who) {
  const Occ* o = s.find(id);
  if (!o) throw ContractError(std::string(who) + ": occurrence not in " + render(s.formulas()));
  return *o;
}

std::vector<Occ> fresh_in(const G3Seq& premise, const G3Seq& conclusion) {
  std::vector<Occ> out;
  for (const Occ& o : premise.ante)
    if (!conclusion.has(o.id)) out.push_back(o);
  return out;
}

bool is_left_rule(RuleG3 r) { return r == RuleG3::LAnd || r == RuleG3::LOr || r == RuleG3::LImp; }

// Premises of a left rule that share the conclusion's succedent.
bool inherits_succ(const G3Node& n, std::size_t i) {
  switch (n.rule) {
    case RuleG3::LAnd: case RuleG3::LOr: case RuleG3::LBox: return true;
    case RuleG3::LImp: case RuleG3::Cut: return i == 1;
    default: return false;
  }
}

void require_core(const G3Node& n, const char* who) {
  if (n.rule == RuleG3::Cut || n.rule == RuleG3::RSL4 || n.rule == RuleG3::RGL || n.rule == RuleG3::LBox)
    throw ContractError(std::string(who) + ": needs a cut-free core proof, found " + std::string(rule_name(n.rule)));
}

class Renamer {
 public:
  Renamer(IdMap m, bool fresh_others) : m_(std::move(m)), fresh_(fresh_others) {}

  OccId operator()(OccId id) {
    if (auto it = m_.find(id); it != m_.end()) return it->second;
    if (!fresh_) return id;
    OccId n = fresh_id();
    m_.emplace(id, n);
    return n;
  }

  G3Ptr run(const G3Ptr& p) {
    if (auto it = memo_.find(p.get()); it != memo_.end()) return it->second;
    G3Seq s{{}, p->seq.succ};
    for (const Occ& o : p->seq.ante) s.ante.push_back({(*this)(o.id), o.f});
    G3Extra x = extra_of(*p);
    if (x.principal) x.principal = (*this)(*x.principal);
    if (x.diag) x.diag = (*this)(*x.diag);
    if (x.cut_id) x.cut_id = (*this)(*x.cut_id);
    for (auto& [a, b] : x.links) a = (*this)(a), b = (*this)(b);
    std::vector<G3Ptr> prem;
    for (const G3Ptr& q : p->premises) prem.push_back(run(q));
    G3Ptr out = make_g3(std::move(s), p->rule, std::move(prem), std::move(x));
    memo_.emplace(p.get(), out);
    return out;
  }

 private:
  IdMap m_;
  bool fresh_;
  std::unordered_map<const G3Node*, G3Ptr> memo_;
};

// Endsequent occurrences of `p` matched to `target`: same id first, then
// same formula. Returns pairs (p id, target id) plus the leftovers.
struct Matching {
  IdMap map;
  std::vector<Occ> surplus;  // in p, unmatched
  std::vector<Occ> missing;  // in target, unmatched
};

Matching match(const G3Seq& have, const G3Seq& target) {
  Matching m;
  std::vector<bool> used(target.ante.size(), false);
  std::vector<bool> done(have.ante.size(), false);
  for (std::size_t i = 0; i < have.ante.size(); ++i)
    for (std::size_t j = 0; j < target.ante.size(); ++j)
      if (!used[j] && have.ante[i].id == target.ante[j].id && have.ante[i].f == target.ante[j].f) {
        used[j] = done[i] = true;
        m.map[have.ante[i].id] = target.ante[j].id;
        break;
      }
  for (std::size_t i = 0; i < have.ante.size(); ++i) {
    if (done[i]) continue;
    for (std::size_t j = 0; j < target.ante.size(); ++j)
      if (!used[j] && have.ante[i].f == target.ante[j].f) {
        used[j] = done[i] = true;
        m.map[have.ante[i].id] = target.ante[j].id;
        break;
      }
    if (!done[i]) m.surplus.push_back(have.ante[i]);
  }
  for (std::size_t j = 0; j < target.ante.size(); ++j)
    if (!used[j]) m.missing.push_back(target.ante[j]);
  return m;
}

// ── inversions ──────────────────────────────────────────────────────────

RuleG3 inverted_rule(Inversion k) {
  switch (k) {
    case Inversion::LAnd: return RuleG3::LAnd;
    case Inversion::LOr0: case Inversion::LOr1: return RuleG3::LOr;
    case Inversion::LImp: return RuleG3::LImp;
    case Inversion::RAnd0: case Inversion::RAnd1: return RuleG3::RAnd;
    case Inversion::RImp: return RuleG3::RImp;
  }
  return RuleG3::At;
}

std::size_t inverted_premise(Inversion k) {
  switch (k) {
    case Inversion::LOr1: case Inversion::LImp: case Inversion::RAnd1: return 1;
    default: return 0;
  }
}

G3Ptr inv_left(const G3Ptr& p, OccId x, Inversion k, const std::vector<Occ>& repl) {
  const G3Node& n = *p;
  must_find(n.seq, x, "invert");
  G3Seq concl = plus(n.seq.without(x), repl);
  if (n.principal == x && is_left_rule(n.rule)) {
    if (n.rule != inverted_rule(k)) throw ContractError("invert: principal has a different shape");
    const G3Ptr& prem = n.premises[inverted_premise(k)];
    std::vector<Occ> comp = fresh_in(prem->seq, n.seq);
    IdMap m;
    for (const Occ& r : repl)
      for (auto it = comp.begin(); it != comp.end(); ++it)
        if (it->f == r.f) {
          m[it->id] = r.id;
          comp.erase(it);
          break;
        }
    if (m.size() != repl.size()) throw ContractError("invert: component mismatch");
    return rename_ids(prem, m);
  }
  require_core(n, "invert");
  switch (n.rule) {
    case RuleG3::At:
    case RuleG3::LBot:
      return rebuild(n, concl, {});
    case RuleG3::RSL: {
      G3Ptr prem = inv_left(n.premises[0], x, k, repl);
      G3Extra ex = extra_of(n);
      for (const Occ& r : repl)
        if (r.f.is_box()) {
          Occ copy{fresh_id(), r.f.inner()};
          prem = weaken(prem, copy);
          ex.links.emplace_back(copy.id, r.id);
        }
      return rebuild(n, concl, {prem}, ex);
    }
    default: {
      std::vector<G3Ptr> prem;
      for (const G3Ptr& q : n.premises) prem.push_back(q->seq.has(x) ? inv_left(q, x, k, repl) : q);
      return rebuild(n, concl, std::move(prem));
    }
  }
}

// Right inversions and the falsum rule share one traversal: the succedent
// is replaced along the premises that inherit it.
G3Ptr inv_right(const G3Ptr& p, Inversion k, std::optional<Occ> added, std::optional<Formula> succ) {
  const G3Node& n = *p;
  G3Seq concl = n.seq.with_succ(succ);
  if (added) concl.ante.push_back(*added);
  if (n.rule == RuleG3::LBot) return rebuild(n, concl, {});
  if (n.rule == inverted_rule(k) && (k == Inversion::RImp || k == Inversion::RAnd0 || k == Inversion::RAnd1)) {
    const G3Ptr& prem = n.premises[inverted_premise(k)];
    if (k != Inversion::RImp) return prem;
    std::vector<Occ> comp = fresh_in(prem->seq, n.seq);
    return rename_ids(prem, {{comp.at(0).id, added->id}});
  }
  if (!is_left_rule(n.rule)) throw ContractError("invert: succedent is not principal-free at " + std::string(rule_name(n.rule)));
  std::vector<G3Ptr> prem;
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    const G3Ptr& q = n.premises[i];
    if (inherits_succ(n, i)) prem.push_back(inv_right(q, k, added, succ));
    else prem.push_back(added ? weaken(q, *added) : q);
  }
  return rebuild(n, concl, std::move(prem));
}

}  // namespace

// ── identifiers ─────────────────────────────────────────────────────────

G3Ptr refresh_ids(const G3Ptr& p, const IdMap& m, IdMap* root_map) {
  Renamer r(m, true);
  G3Ptr out = r.run(p);
  if (root_map)
    for (std::size_t i = 0; i < p->seq.ante.size(); ++i) (*root_map)[p->seq.ante[i].id] = out->seq.ante[i].id;
  return out;
}

G3Ptr rename_ids(const G3Ptr& p, const IdMap& m) {
  if (m.empty()) return p;
  return Renamer(m, false).run(p);
}

G3Ptr relabel(const G3Ptr& p, const G3Seq& target) {
  if (p->seq.succ != target.succ) throw ContractError("relabel: succedents differ");
  Matching m = match(p->seq, target);
  if (!m.surplus.empty() || !m.missing.empty())
    throw ContractError("relabel: " + render(p->seq.formulas()) + " vs " + render(target.formulas()));
  return refresh_ids(p, m.map);
}

G3Ptr adjust(const G3Ptr& p, const G3Seq& target) {
  if (p->seq.succ != target.succ)
    throw ContractError("adjust: succedents differ: " + render(p->seq.formulas()) + " vs " + render(target.formulas()));
  Matching m = match(p->seq, target);
  G3Ptr q = p;
  for (const Occ& s : m.surplus) {
    auto keep = std::find_if(m.map.begin(), m.map.end(),
                             [&](const auto& kv) { return p->seq.find(kv.first)->f == s.f; });
    if (keep == m.map.end())
      throw ContractError("adjust: " + render(s.f) + " not available in " + render(target.formulas()));
    q = contract(q, keep->first, s.id);
  }
  q = refresh_ids(q, m.map);
  return weaken(q, m.missing);
}

// ── weakening and contraction ───────────────────────────────────────────

G3Ptr weaken(const G3Ptr& p, const Occ& o) {
  const G3Node& n = *p;
  G3Seq concl = n.seq.with(o);
  switch (n.rule) {
    case RuleG3::At:
    case RuleG3::LBot:
    case RuleG3::RGL:
      return rebuild(n, concl, n.premises);
    case RuleG3::RSL:
      if (o.f.is_box()) return rebuild(n, concl, n.premises);
      return rebuild(n, concl, {weaken(n.premises[0], o)});
    case RuleG3::Cut:
      return rebuild(n, concl, {n.premises[0], weaken(n.premises[1], o)});
    default: {
      std::vector<G3Ptr> prem;
      for (const G3Ptr& q : n.premises) prem.push_back(weaken(q, o));
      return rebuild(n, concl, std::move(prem));
    }
  }
}

G3Ptr weaken(const G3Ptr& p, const std::vector<Occ>& os) {
  G3Ptr q = p;
  for (const Occ& o : os) q = weaken(q, o);
  return q;
}

G3Ptr contract(const G3Ptr& p, OccId a, OccId b) {
  const G3Node& n = *p;
  const Occ& oa = must_find(n.seq, a, "contract");
  const Occ& ob = must_find(n.seq, b, "contract");
  if (a == b || oa.f != ob.f) throw ContractError("contract: occurrences differ");
  require_core(n, "contract");
  G3Seq concl = n.seq.without(b);
  // Swap roles when the kept occurrence is the one consumed by the rule.
  auto swapped = [&] { return rename_ids(contract(p, b, a), {{b, a}}); };

  switch (n.rule) {
    case RuleG3::At:
    case RuleG3::LBot: {
      G3Extra x = extra_of(n);
      if (x.principal == b) x.principal = a;
      return rebuild(n, concl, {}, x);
    }
    case RuleG3::RSL: {
      const G3Ptr& prem = n.premises[0];
      if (!oa.f.is_box()) return rebuild(n, concl, {contract(prem, a, b)});
      bool ina = prem->seq.has(a), inb = prem->seq.has(b);
      if (!inb) return rebuild(n, concl, {prem});
      if (!ina) return swapped();
      OccId ca = 0, cb = 0;
      for (auto& [c, box] : n.links) {
        if (box == a) ca = c;
        if (box == b) cb = c;
      }
      G3Ptr q = contract(contract(prem, a, b), ca, cb);
      G3Extra x = extra_of(n);
      std::erase_if(x.links, [&](const auto& l) { return l.second == b; });
      return rebuild(n, concl, {q}, x);
    }
    default:
      break;
  }
  if (n.principal == a) return swapped();
  if (n.principal != b) {
    std::vector<G3Ptr> prem;
    for (const G3Ptr& q : n.premises) prem.push_back(q->seq.has(b) ? contract(q, a, b) : q);
    return rebuild(n, concl, std::move(prem));
  }
  // b is principal: invert a in the premises and contract the components.
  G3Extra x = extra_of(n);
  x.principal = a;
  auto merge = [&](const G3Ptr& q, Inversion k) {
    std::vector<Occ> comp = fresh_in(q->seq, n.seq);
    std::vector<Occ> repl;
    for (const Occ& c : comp) repl.push_back({fresh_id(), c.f});
    G3Ptr r = inv_left(q, a, k, repl);
    for (std::size_t i = 0; i < comp.size(); ++i) r = contract(r, comp[i].id, repl[i].id);
    return r;
  };
  switch (n.rule) {
    case RuleG3::LAnd:
      return rebuild(n, concl, {merge(n.premises[0], Inversion::LAnd)}, x);
    case RuleG3::LOr:
      return rebuild(n, concl, {merge(n.premises[0], Inversion::LOr0), merge(n.premises[1], Inversion::LOr1)}, x);
    case RuleG3::LImp:
      return rebuild(n, concl, {contract(n.premises[0], a, b), merge(n.premises[1], Inversion::LImp)}, x);
    default:
      throw ContractError("contract: unexpected principal");
  }
}

// ── inversions ──────────────────────────────────────────────────────────

G3Ptr invert(const G3Ptr& p, Inversion k, OccId x) {
  switch (k) {
    case Inversion::LAnd: case Inversion::LOr0: case Inversion::LOr1: case Inversion::LImp: {
      Formula f = must_find(p->seq, x, "invert").f;
      std::vector<Occ> repl;
      if (k == Inversion::LAnd) {
        if (!f.is_and()) throw ContractError("invert: not a conjunction");
        repl = {{fresh_id(), f.left()}, {fresh_id(), f.right()}};
      } else if (k == Inversion::LImp) {
        if (!f.is_imp()) throw ContractError("invert: not an implication");
        repl = {{fresh_id(), f.right()}};
      } else {
        if (!f.is_or()) throw ContractError("invert: not a disjunction");
        repl = {{fresh_id(), k == Inversion::LOr0 ? f.left() : f.right()}};
      }
      return inv_left(p, x, k, repl);
    }
    case Inversion::RAnd0: case Inversion::RAnd1: {
      if (!p->seq.succ || !p->seq.succ->is_and()) throw ContractError("invert: succedent is not a conjunction");
      Formula part = k == Inversion::RAnd0 ? p->seq.succ->left() : p->seq.succ->right();
      return inv_right(p, k, std::nullopt, part);
    }
    case Inversion::RImp: {
      if (!p->seq.succ || !p->seq.succ->is_imp()) throw ContractError("invert: succedent is not an implication");
      return inv_right(p, k, Occ{fresh_id(), p->seq.succ->left()}, p->seq.succ->right());
    }
  }
  return p;
}

G3Ptr falsum(const G3Ptr& p, std::optional<Formula> succ) {
  if (p->seq.succ != bot()) throw ContractError("falsum: succedent is not false");
  // RImp never matches a left rule or LBot, so this is the plain traversal.
  return inv_right(p, Inversion::RImp, std::nullopt, succ);
}

G3Ptr identity(const G3Seq& s, OccId id) {
  Formula f = must_find(s, id, "identity").f;
  if (s.succ != f) throw ContractError("identity: succedent differs from the occurrence");
  switch (f.kind()) {
    case Kind::Bottom: return make_g3(s, RuleG3::LBot, {}, {.principal = id});
    case Kind::Atom: return make_g3(s, RuleG3::At, {}, {.principal = id});
    case Kind::And: {
      Occ l{fresh_id(), f.left()}, r{fresh_id(), f.right()};
      G3Seq prem = s.without(id).with(l).with(r);
      G3Ptr conj_proof = make_g3(prem, RuleG3::RAnd,
                                 {identity(prem.with_succ(f.left()), l.id), identity(prem.with_succ(f.right()), r.id)});
      return make_g3(s, RuleG3::LAnd, {conj_proof}, {.principal = id});
    }
    case Kind::Or: {
      std::vector<G3Ptr> prem;
      for (int i = 0; i < 2; ++i) {
        Formula part = i == 0 ? f.left() : f.right();
        Occ o{fresh_id(), part};
        G3Seq ps = s.without(id).with(o);
        prem.push_back(make_g3(ps, i == 0 ? RuleG3::ROr0 : RuleG3::ROr1, {identity(ps.with_succ(part), o.id)}));
      }
      return make_g3(s, RuleG3::LOr, std::move(prem), {.principal = id});
    }
    case Kind::Imp: {
      Occ y{fresh_id(), f.left()}, z{fresh_id(), f.right()};
      G3Seq inner = s.with(y).with_succ(f.right());
      G3Ptr left = identity(inner.with_succ(f.left()), y.id);
      G3Ptr right = identity(inner.without(id).with(z), z.id);
      G3Ptr limp = make_g3(inner, RuleG3::LImp, {left, right}, {.principal = id});
      return make_g3(s, RuleG3::RImp, {limp});
    }
    case Kind::Box: {
      G3Seq prem{{}, f.inner()};
      for (const Occ& o : s.ante)
        if (!o.f.is_box() || o.id == id) prem.ante.push_back(o);
      Occ copy{fresh_id(), f.inner()}, diag{fresh_id(), f};
      prem.ante.push_back(copy);
      prem.ante.push_back(diag);
      return make_g3(s, RuleG3::RSL, {identity(prem, copy.id)}, {.diag = diag.id, .links = {{copy.id, id}}});
    }
  }
  throw ContractError("identity: unknown formula");
}

// ── modal rule construction ─────────────────────────────────────────────

G3Ptr build_rsl(const G3Seq& c, const G3Ptr& premise, std::optional<OccId> diag_hint) {
  if (!c.succ || !c.succ->is_box()) throw ContractError("build_rsl: succedent is not boxed");
  if (premise->seq.succ != c.succ->inner()) throw ContractError("build_rsl: premise succedent is wrong");
  G3Ptr prem = premise;
  // Ids taken from the conclusion must not clash with ids inside the premise.
  IdMap keep_root;
  for (const Occ& o : prem->seq.ante) keep_root[o.id] = o.id;
  bool refreshed = false;
  auto add = [&](const Occ& o) {
    if (!refreshed) prem = refresh_ids(prem, keep_root), refreshed = true;
    prem = weaken(prem, o);
  };

  std::vector<const Occ*> principal;  // boxes kept in the premise, waiting for a copy
  std::vector<Occ> sigma;             // boxes not (yet) in the premise
  for (const Occ& o : c.ante) {
    const Occ* q = premise->seq.find(o.id);
    if (q && q->f != o.f) throw ContractError("build_rsl: id reused for a different formula");
    if (!o.f.is_box()) {
      if (!q) add(o);
    } else if (q) {
      principal.push_back(&o);
    } else {
      sigma.push_back(o);
    }
  }
  std::vector<Occ> fresh = fresh_in(premise->seq, c);
  std::optional<OccId> diag;
  auto take = [&](auto pred) -> std::optional<Occ> {
    for (auto it = fresh.begin(); it != fresh.end(); ++it)
      if (pred(*it)) {
        Occ o = *it;
        fresh.erase(it);
        return o;
      }
    return std::nullopt;
  };
  if (diag_hint)
    if (auto d = take([&](const Occ& o) { return o.id == *diag_hint && o.f == *c.succ; })) diag = d->id;
  if (!diag)
    if (auto d = take([&](const Occ& o) { return o.f == *c.succ; })) diag = d->id;
  if (!diag) {
    Occ d{fresh_id(), *c.succ};
    add(d);
    diag = d.id;
  }

  std::vector<std::pair<OccId, OccId>> links;
  for (const Occ* box : principal) {
    if (auto copy = take([&](const Occ& o) { return o.f == box->f.inner(); })) {
      links.emplace_back(copy->id, box->id);
    } else {
      Occ cp{fresh_id(), box->f.inner()};
      add(cp);
      links.emplace_back(cp.id, box->id);
    }
  }
  // Leftover fresh formulas need a box from Σ to become principal.
  for (const Occ& f : fresh) {
    auto it = std::find_if(sigma.begin(), sigma.end(), [&](const Occ& o) { return o.f.inner() == f.f; });
    if (it == sigma.end()) throw ContractError("build_rsl: unexplained premise formula " + render(f.f));
    add(*it);
    links.emplace_back(f.id, it->id);
    sigma.erase(it);
  }
  return make_g3(c, RuleG3::RSL, {prem}, {.diag = diag, .links = std::move(links)});
}

G3Ptr rsl_over(const G3Seq& c, const G3Ptr& premise) {
  if (!c.succ || !c.succ->is_box()) throw ContractError("rsl_over: succedent is not boxed");
  std::set<Formula, FormulaLess> used;
  for (const Occ& o : premise->seq.ante) used.insert(o.f);
  G3Seq target{{}, c.succ->inner()};
  std::vector<std::pair<OccId, OccId>> links;
  for (const Occ& o : c.ante) {
    if (!o.f.is_box()) {
      target.ante.push_back(o);
    } else if (used.count(o.f) || used.count(o.f.inner())) {
      Occ copy{fresh_id(), o.f.inner()};
      target.ante.push_back(o);
      target.ante.push_back(copy);
      links.emplace_back(copy.id, o.id);
    }
  }
  Occ diag{fresh_id(), *c.succ};
  target.ante.push_back(diag);
  return make_g3(c, RuleG3::RSL, {adjust(premise, target)}, {.diag = diag.id, .links = std::move(links)});
}

// ── positions ───────────────────────────────────────────────────────────

const G3Node& node_at(const G3Node& root, const Path& path) {
  const G3Node* n = &root;
  for (std::size_t i : path) {
    if (i >= n->premises.size()) throw ContractError("node_at: path leaves the proof");
    n = n->premises[i].get();
  }
  return *n;
}

G3Ptr subproof(const G3Ptr& root, const Path& path) {
  G3Ptr n = root;
  for (std::size_t i : path) {
    if (i >= n->premises.size()) throw ContractError("subproof: path leaves the proof");
    n = n->premises[i];
  }
  return n;
}

G3Ptr replace_at(const G3Ptr& root, const Path& path, const G3Ptr& sub) {
  std::function<G3Ptr(const G3Ptr&, std::size_t)> go = [&](const G3Ptr& n, std::size_t depth) -> G3Ptr {
    if (depth == path.size()) return sub;
    std::vector<G3Ptr> prem = n->premises;
    prem.at(path[depth]) = go(prem.at(path[depth]), depth + 1);
    return rebuild(*n, n->seq, std::move(prem));
  };
  return go(root, 0);
}

unsigned grade(const G3Node& root, const Path& path) {
  unsigned g = 0;
  const G3Node* n = &root;
  for (std::size_t i : path) {
    if (is_modal_rule(n->rule)) ++g;
    n = n->premises.at(i).get();
  }
  return g;
}

// ── strong weakening ────────────────────────────────────────────────────

namespace {

G3Ptr down(const G3Ptr& p, Formula chi, const std::vector<Occ>& adds) {
  const G3Node& n = *p;
  require_core(n, "strong_weaken_down");
  G3Seq concl = plus(n.seq, adds);
  if (n.rule != RuleG3::RSL) {
    std::vector<G3Ptr> prem;
    for (const G3Ptr& q : n.premises) prem.push_back(down(q, chi, adds));
    return rebuild(n, concl, std::move(prem));
  }
  // adds = [□χ, χ^k]; □χ becomes principal with a fresh copy.
  const Occ& boxed = adds.at(0);
  Occ copy{fresh_id(), chi};
  std::vector<Occ> up{boxed, copy};
  if (!chi.is_box()) up.insert(up.end(), adds.begin() + 1, adds.end());
  G3Extra x = extra_of(n);
  x.links.emplace_back(copy.id, boxed.id);
  return rebuild(n, concl, {down(n.premises[0], chi, up)}, x);
}

G3Ptr up(const G3Ptr& p, Formula chi, const std::vector<Occ>& adds) {
  const G3Node& n = *p;
  require_core(n, "strong_weaken_up");
  G3Seq concl = plus(n.seq, adds);
  std::vector<G3Ptr> prem;
  for (const G3Ptr& q : n.premises) prem.push_back(up(q, chi, n.rule == RuleG3::RSL && chi.is_box() ? std::vector<Occ>{} : adds));
  return rebuild(n, concl, std::move(prem));
}

}  // namespace

G3Ptr strong_weaken_down(const G3Ptr& p, Formula chi) { return down(p, chi, {Occ{fresh_id(), box(chi)}}); }

G3Ptr strong_weaken_up(const G3Ptr& p, Formula chi) { return up(p, chi, {Occ{fresh_id(), chi}}); }

G3Ptr strong_weaken_down(const G3Ptr& p, const Multiset& theta) {
  G3Ptr q = p;
  for (Formula f : theta) q = strong_weaken_down(q, f);
  return q;
}

G3Ptr strong_weaken_up(const G3Ptr& p, const Multiset& theta) {
  G3Ptr q = p;
  for (Formula f : theta) q = strong_weaken_up(q, f);
  return q;
}

G3Ptr prune_occurrence(const G3Ptr& p, OccId d) {
  const G3Node& n = *p;
  if (!n.seq.has(d)) return p;
  if (n.principal == d) throw ContractError("prune: occurrence is principal");
  for (auto& [c, b] : n.links)
    if (b == d) throw ContractError("prune: occurrence is principal in a modal rule");
  std::vector<G3Ptr> prem;
  for (const G3Ptr& q : n.premises) prem.push_back(prune_occurrence(q, d));
  return rebuild(n, n.seq.without(d), std::move(prem));
}

}  // namespace isl
