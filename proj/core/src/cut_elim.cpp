#include "isl/cut_elim.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "isl/parser.hpp"

namespace isl {

namespace {

G3Extra extra_of(const G3Node& n) { return {n.principal, n.diag, n.cut, n.cut_id, n.links}; }

std::vector<Occ> fresh_in(const G3Seq& premise, const G3Seq& conclusion) {
  std::vector<Occ> out;
  for (const Occ& o : premise.ante)
    if (!conclusion.has(o.id)) out.push_back(o);
  return out;
}

std::vector<Occ> others(const G3Seq& s, OccId skip) {
  std::vector<Occ> out;
  for (const Occ& o : s.ante)
    if (o.id != skip) out.push_back(o);
  return out;
}

G3Seq combine(const G3Seq& left, const G3Seq& right, OccId cut_id) {
  G3Seq t{left.ante, right.succ};
  for (const Occ& o : right.ante)
    if (o.id != cut_id) t.ante.push_back(o);
  return t;
}

G3Ptr keep_root_refresh(const G3Ptr& p) {
  IdMap m;
  for (const Occ& o : p->seq.ante) m[o.id] = o.id;
  return refresh_ids(p, m);
}

bool overlap(const G3Seq& a, const G3Seq& b) {
  return std::any_of(a.ante.begin(), a.ante.end(), [&](const Occ& o) { return b.has(o.id); });
}

OccId copy_of(const G3Node& rsl, OccId box_id) {
  for (auto& [c, b] : rsl.links)
    if (b == box_id) return c;
  throw ContractError("cut elimination: box has no unboxed copy");
}

bool is_left_rule(RuleG3 r) { return r == RuleG3::LAnd || r == RuleG3::LOr || r == RuleG3::LImp; }

std::string show(const CutMeasure& m) {
  return "(" + std::to_string(m.degree) + "," + std::to_string(m.width) + "," + std::to_string(m.level) + ")";
}

class Eliminator {
 public:
  std::size_t inner_cuts = 0;

  G3Ptr elim(G3Ptr d1, G3Ptr d2, OccId cid) {
    const Occ* c = d2->seq.find(cid);
    if (!c || d1->seq.succ != c->f) throw ContractError("cut elimination: cut occurrence does not match");
    if (!d1->cut_free || !d2->cut_free) throw ContractError("cut elimination: premises must be cut-free");
    if (overlap(d1->seq, d2->seq)) throw ContractError("cut elimination: premise contexts share ids");
    G3Seq target = combine(d1->seq, d2->seq, cid);
    d1 = keep_root_refresh(d1);
    d2 = keep_root_refresh(d2);
    CutMeasure here = cut_measure(*d1, *d2, c->f);
    return adjust(reduce(d1, d2, cid, here), target);
  }

 private:
  // Recursive cut with the measure check. Left endsequent ids are renamed
  // when they clash with the right ones; the final adjust contracts them.
  G3Ptr cut(G3Ptr left, const G3Ptr& right, OccId cid, const CutMeasure& bound) {
    if (overlap(left->seq, right->seq)) left = refresh_ids(left);
    CutMeasure m = cut_measure(*left, *right, *left->seq.succ);
    if (!(m < bound))
      throw ContractError("cut elimination: new cut " + show(m) + " is not below " + show(bound) + " on " +
                          render(*left->seq.succ));
    ++inner_cuts;
    return elim(left, right, cid);
  }

  G3Ptr reduce(const G3Ptr& d1, const G3Ptr& d2, OccId cid, const CutMeasure& here) {
    const G3Node& n1 = *d1;
    const G3Node& n2 = *d2;
    G3Seq target = combine(n1.seq, n2.seq, cid);
    std::vector<Occ> gamma2 = others(n2.seq, cid);

    // Axioms.
    if (n1.rule == RuleG3::LBot) return make_g3(target, RuleG3::LBot, {}, {.principal = n1.principal});
    if (n1.rule == RuleG3::At) {
      OccId p = *n1.principal;
      return weaken(rename_ids(d2, {{cid, p}}), others(n1.seq, p));
    }
    if (n2.rule == RuleG3::LBot) {
      if (n2.principal != cid) return make_g3(target, RuleG3::LBot, {}, {.principal = n2.principal});
      return weaken(falsum(d1, n2.seq.succ), gamma2);
    }
    if (n2.rule == RuleG3::At) {
      if (n2.principal != cid) return make_g3(target, RuleG3::At, {}, {.principal = n2.principal});
      return weaken(d1, gamma2);
    }

    // The cut formula is not principal on the left.
    if (is_left_rule(n1.rule)) {
      std::vector<G3Ptr> prem;
      for (std::size_t i = 0; i < n1.premises.size(); ++i) {
        const G3Ptr& q = n1.premises[i];
        if (n1.rule == RuleG3::LImp && i == 0) prem.push_back(weaken(q, gamma2));
        else prem.push_back(cut(q, d2, cid, here));
      }
      return make_g3(target, n1.rule, std::move(prem), extra_of(n1));
    }

    bool modal2 = n2.rule == RuleG3::RSL;
    bool principal2 = modal2 ? n2.premises[0]->seq.has(cid) && c_is_box(n2, cid) : n2.principal == cid;
    if (!principal2) return right_context(d1, d2, cid, here, target);
    if (modal2) return box_case(d1, d2, cid, here, target);
    return principal_case(d1, d2, cid, here, target);
  }

  static bool c_is_box(const G3Node& n, OccId id) { return n.seq.find(id)->f.is_box(); }

  // The cut formula is not principal on the right.
  G3Ptr right_context(const G3Ptr& d1, const G3Ptr& d2, OccId cid, const CutMeasure& here, const G3Seq& target) {
    const G3Node& n2 = *d2;
    if (n2.rule != RuleG3::RSL) {
      std::vector<G3Ptr> prem;
      for (const G3Ptr& q : n2.premises) prem.push_back(cut(d1, q, cid, here));
      return make_g3(target, n2.rule, std::move(prem), extra_of(n2));
    }
    const G3Ptr& q = n2.premises[0];
    if (!q->seq.has(cid)) {
      // A boxed cut formula dropped by the rule: remove it and weaken.
      G3Ptr dropped = make_g3(n2.seq.without(cid), RuleG3::RSL, n2.premises, extra_of(n2));
      return weaken(dropped, d1->seq.ante);
    }
    G3Ptr e = cut(d1, q, cid, here);
    G3Extra x = extra_of(n2);
    for (const Occ& o : d1->seq.ante)
      if (o.f.is_box()) {
        Occ copy{fresh_id(), o.f.inner()};
        e = weaken(e, copy);
        x.links.emplace_back(copy.id, o.id);
      }
    return make_g3(target, RuleG3::RSL, {e}, std::move(x));
  }

  // Principal on both sides, propositional cut formula.
  G3Ptr principal_case(const G3Ptr& d1, const G3Ptr& d2, OccId cid, const CutMeasure& here, const G3Seq& target) {
    const G3Node& n1 = *d1;
    const G3Node& n2 = *d2;
    Formula a = n2.seq.find(cid)->f;
    switch (n2.rule) {
      case RuleG3::LAnd: {
        if (n1.rule != RuleG3::RAnd) break;
        const G3Ptr& p = n2.premises[0];
        std::vector<Occ> comp = fresh_in(p->seq, n2.seq);
        if (comp[0].f != a.left()) std::swap(comp[0], comp[1]);
        G3Ptr e1 = cut(n1.premises[0], p, comp[0].id, here);
        G3Ptr e2 = cut(n1.premises[1], e1, comp[1].id, here);
        return adjust(e2, target);
      }
      case RuleG3::LOr: {
        if (n1.rule != RuleG3::ROr0 && n1.rule != RuleG3::ROr1) break;
        std::size_t i = n1.rule == RuleG3::ROr0 ? 0 : 1;
        const G3Ptr& q = n2.premises[i];
        return cut(n1.premises[0], q, fresh_in(q->seq, n2.seq).at(0).id, here);
      }
      case RuleG3::LImp: {
        if (n1.rule != RuleG3::RImp) break;
        const G3Ptr& p = n1.premises[0];  // Γ1, A ⇒ B
        OccId av = fresh_in(p->seq, n1.seq).at(0).id;
        const G3Ptr& q0 = n2.premises[0];  // Γ2, A→B ⇒ A
        const G3Ptr& q1 = n2.premises[1];  // Γ2', B ⇒ C
        OccId bv = fresh_in(q1->seq, n2.seq).at(0).id;
        G3Ptr ea = cut(d1, q0, cid, here);
        IdMap mp;
        G3Ptr p2 = refresh_ids(p, {}, &mp);
        G3Ptr eb = cut(ea, p2, mp.at(av), here);
        IdMap mq;
        G3Ptr q2 = refresh_ids(q1, {}, &mq);
        G3Ptr ec = cut(eb, q2, mq.at(bv), here);
        return adjust(ec, target);
      }
      default:
        break;
    }
    throw ContractError("cut elimination: cut formula " + render(a) + " is principal on the right but the left proof ends in " +
                        std::string(rule_name(n1.rule)));
  }

  // Principal on both sides, boxed cut formula: both premises end in RSL.
  G3Ptr box_case(const G3Ptr& d1, const G3Ptr& d2, OccId cid, const CutMeasure& here, const G3Seq& target) {
    const G3Node& n1 = *d1;
    const G3Node& n2 = *d2;
    if (n1.rule != RuleG3::RSL) throw ContractError("cut elimination: boxed cut formula not introduced by RSL");
    Formula boxed = *n1.seq.succ;
    const G3Ptr& d1p = n1.premises[0];
    OccId d = *n1.diag;

    // Left proof without the boxes it drops.
    G3Seq bar_seq{{}, n1.seq.succ};
    for (const Occ& o : n1.seq.ante)
      if (d1p->seq.has(o.id)) bar_seq.ante.push_back(o);
    G3Ptr d1bar = make_g3(bar_seq, RuleG3::RSL, n1.premises, extra_of(n1));

    std::vector<Path> crit = critical_inferences(n1, boxed);
    if (crit.empty()) {
      G3Ptr d3 = prune_occurrence(d1p, d);
      G3Ptr e3 = cut(d1bar, n2.premises[0], cid, here);
      G3Ptr e2 = cut(d3, e3, copy_of(n2, cid), here);
      return rsl_over(target, e2);
    }

    const Path& pi = crit.front();
    const G3Node& r = node_at(n1, pi);
    Formula chi = r.seq.succ->inner();
    OccId u = copy_of(r, d);

    // One critical inference less: the top of the segment no longer uses □φ.
    G3Ptr wchi = strong_weaken_down(d1bar, chi);
    const G3Node& wr = node_at(*wchi, pi);
    G3Seq s4 = wr.premises[0]->seq.without(d).without(u);
    auto x = std::find_if(s4.ante.begin(), s4.ante.end(), [&](const Occ& o) { return o.f == chi; });
    if (x == s4.ante.end()) throw ContractError("cut elimination: strong weakening lost the critical formula");
    G3Ptr d1circ = replace_at(wchi, pi, build_rsl(wr.seq, identity(s4, x->id), wr.diag));

    G3Ptr e3 = cut(d1circ, d1p, d, here);
    IdMap m;
    G3Ptr s3 = refresh_ids(r.premises[0], {}, &m);
    G3Ptr e4 = cut(refresh_ids(d1circ), s3, m.at(d), here);
    G3Ptr e2 = cut(e3, e4, m.at(u), here);

    Multiset gamma1, pi1;
    for (const Occ& o : bar_seq.ante) (o.f.is_box() ? gamma1.push_back(o.f.inner()) : pi1.push_back(o.f));
    G3Ptr w = strong_weaken_up(strong_weaken_down(d1bar, gamma1), pi1);
    const G3Node& wr2 = node_at(*w, pi);
    G3Seq s5 = wr2.premises[0]->seq.without(d).without(u);
    G3Ptr d1tri = replace_at(w, pi, build_rsl(wr2.seq, adjust(e2, s5), wr2.diag));
    return cut(d1tri, d2, cid, here);
  }
};

void find_topmost(const G3Node& n, Path& path, std::optional<Path>& out) {
  if (n.cut_free || out) return;
  for (std::size_t i = 0; i < n.premises.size() && !out; ++i) {
    path.push_back(i);
    find_topmost(*n.premises[i], path, out);
    path.pop_back();
  }
  if (!out && n.rule == RuleG3::Cut) out = path;
}

}  // namespace

G3Ptr eliminate_cut(const G3Ptr& left, const G3Ptr& right, OccId cut_id, std::size_t* inner_cuts) {
  Eliminator e;
  G3Ptr out = e.elim(left, right, cut_id);
  if (inner_cuts) *inner_cuts = e.inner_cuts;
  return out;
}

std::optional<Path> topmost_cut(const G3Node& p) {
  std::optional<Path> out;
  Path path;
  find_topmost(p, path, out);
  return out;
}

G3Ptr reduce_topmost_cut(const G3Ptr& p, CutStep* step) {
  std::optional<Path> path = topmost_cut(*p);
  if (!path) return p;
  const G3Node& c = node_at(*p, *path);
  CutStep s{*path, cut_measure(c), 0};
  G3Ptr e = eliminate_cut(c.premises[0], c.premises[1], *c.cut_id, &s.inner_cuts);
  if (step) *step = std::move(s);
  return replace_at(p, *path, adjust(e, c.seq));
}

CutElimResult eliminate_cuts(const G3Ptr& p) {
  CutElimResult r{p, {}};
  while (!r.proof->cut_free) {
    CutStep s;
    r.proof = reduce_topmost_cut(r.proof, &s);
    r.steps.push_back(std::move(s));
  }
  return r;
}

}  // namespace isl
