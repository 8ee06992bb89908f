#include "isl/translate.hpp"

#include <functional>

#include "isl/g3_ops.hpp"
#include "isl/parser.hpp"

namespace isl {

namespace {

const Occ& occ_of(const G3Seq& s, Formula f) {
  for (const Occ& o : s.ante)
    if (o.f == f) return o;
  throw ContractError("g4_to_g3: " + render(f) + " missing from " + render(s.formulas()));
}

G3Seq ctx(const G3Seq& s, Formula succ) { return s.with_succ(succ); }

// RSL over `s` with every box principal; `prem` receives the premise sequent.
G3Ptr all_boxes_rsl(const G3Seq& s, const std::function<G3Ptr(const G3Seq&)>& prem) {
  G3Seq p{{}, s.succ->inner()};
  std::vector<std::pair<OccId, OccId>> links;
  for (const Occ& o : s.ante) {
    p.ante.push_back(o);
    if (o.f.is_box()) {
      Occ copy{fresh_id(), o.f.inner()};
      p.ante.push_back(copy);
      links.emplace_back(copy.id, o.id);
    }
  }
  Occ diag{fresh_id(), *s.succ};
  p.ante.push_back(diag);
  return make_g3(s, RuleG3::RSL, {prem(p)}, {.diag = diag.id, .links = std::move(links)});
}

// x ⇒ A→(B→C) for x = (A∧B)→C.
G3Ptr curry_lemma(const Occ& x) {
  Formula a = x.f.left().left(), b = x.f.left().right(), c = x.f.right();
  Occ oa{fresh_id(), a}, ob{fresh_id(), b}, oc{fresh_id(), c};
  G3Seq top{{x, oa, ob}, c};
  G3Ptr conj_proof = make_g3(ctx(top, x.f.left()), RuleG3::RAnd,
                             {identity(ctx(top, a), oa.id), identity(ctx(top, b), ob.id)});
  G3Seq right{{oa, ob, oc}, c};
  G3Ptr limp = make_g3(top, RuleG3::LImp, {conj_proof, identity(right, oc.id)}, {.principal = x.id});
  G3Ptr inner = make_g3(G3Seq{{x, oa}, imp(b, c)}, RuleG3::RImp, {limp});
  return make_g3(G3Seq{{x}, imp(a, imp(b, c))}, RuleG3::RImp, {inner});
}

// x ⇒ (A→C)∧(B→C) for x = (A∨B)→C.
G3Ptr split_lemma(const Occ& x) {
  Formula a = x.f.left().left(), b = x.f.left().right(), c = x.f.right();
  std::vector<G3Ptr> parts;
  for (int i = 0; i < 2; ++i) {
    Formula side = i == 0 ? a : b;
    Occ os{fresh_id(), side}, oc{fresh_id(), c};
    G3Seq top{{x, os}, c};
    G3Ptr disj_proof = make_g3(ctx(top, x.f.left()), i == 0 ? RuleG3::ROr0 : RuleG3::ROr1,
                               {identity(ctx(top, side), os.id)});
    G3Ptr limp = make_g3(top, RuleG3::LImp, {disj_proof, identity(G3Seq{{os, oc}, c}, oc.id)}, {.principal = x.id});
    parts.push_back(make_g3(G3Seq{{x}, imp(side, c)}, RuleG3::RImp, {limp}));
  }
  return make_g3(G3Seq{{x}, conj(imp(a, c), imp(b, c))}, RuleG3::RAnd, std::move(parts));
}

// x ⇒ B→C for x = (A→B)→C.
G3Ptr tail_lemma(const Occ& x) {
  Formula a = x.f.left().left(), b = x.f.left().right(), c = x.f.right();
  Occ ob{fresh_id(), b}, oa{fresh_id(), a}, oc{fresh_id(), c};
  G3Seq top{{x, ob}, c};
  G3Ptr ab = make_g3(ctx(top, x.f.left()), RuleG3::RImp, {identity(G3Seq{{x, ob, oa}, b}, ob.id)});
  G3Ptr limp = make_g3(top, RuleG3::LImp, {ab, identity(G3Seq{{ob, oc}, c}, oc.id)}, {.principal = x.id});
  return make_g3(G3Seq{{x}, imp(b, c)}, RuleG3::RImp, {limp});
}

G3Ptr cut_node(const G3Seq& concl, const G3Ptr& left, const G3Ptr& right, const Occ& cut) {
  return make_g3(concl, RuleG3::Cut, {left, right}, {.cut = cut.f, .cut_id = cut.id});
}

class Translator {
 public:
  G3Ptr run(const G4Proof& p, const G3Seq& s) {
    if (sorted(p.sequent.ante) != sorted(s.formulas().ante) || p.sequent.succ != s.succ)
      throw ContractError("g4_to_g3: premise " + render(p.sequent) + " does not fit " + render(s.formulas()));
    auto sub = [&](std::size_t i, const G3Seq& t) { return run(*p.premises.at(i), t); };
    auto principal = [&]() -> const Occ& { return occ_of(s, *p.principal); };
    switch (p.rule) {
      case RuleG4::At:
        return make_g3(s, RuleG3::At, {}, {.principal = occ_of(s, *s.succ).id});
      case RuleG4::LBot:
        return make_g3(s, RuleG3::LBot, {}, {.principal = occ_of(s, bot()).id});
      case RuleG4::RAnd:
        return make_g3(s, RuleG3::RAnd, {sub(0, ctx(s, s.succ->left())), sub(1, ctx(s, s.succ->right()))});
      case RuleG4::ROr0:
        return make_g3(s, RuleG3::ROr0, {sub(0, ctx(s, s.succ->left()))});
      case RuleG4::ROr1:
        return make_g3(s, RuleG3::ROr1, {sub(0, ctx(s, s.succ->right()))});
      case RuleG4::RImp: {
        Occ a{fresh_id(), s.succ->left()};
        return make_g3(s, RuleG3::RImp, {sub(0, s.with(a).with_succ(s.succ->right()))});
      }
      case RuleG4::LAnd: {
        const Occ& x = principal();
        G3Seq t = s.without(x.id).with({fresh_id(), x.f.left()}).with({fresh_id(), x.f.right()});
        return make_g3(s, RuleG3::LAnd, {sub(0, t)}, {.principal = x.id});
      }
      case RuleG4::LOr: {
        const Occ& x = principal();
        G3Seq rest = s.without(x.id);
        return make_g3(s, RuleG3::LOr,
                       {sub(0, rest.with({fresh_id(), x.f.left()})), sub(1, rest.with({fresh_id(), x.f.right()}))},
                       {.principal = x.id});
      }
      case RuleG4::LpImp: {
        const Occ& x = principal();
        G3Ptr left = make_g3(ctx(s, x.f.left()), RuleG3::At, {}, {.principal = occ_of(s, x.f.left()).id});
        return make_g3(s, RuleG3::LImp, {left, sub(0, s.without(x.id).with({fresh_id(), x.f.right()}))},
                       {.principal = x.id});
      }
      case RuleG4::ImpSL2: {
        const Occ& x = principal();
        G3Ptr left = identity(ctx(s, x.f.left()), occ_of(s, x.f.left()).id);
        return make_g3(s, RuleG3::LImp, {left, sub(0, s.without(x.id).with({fresh_id(), x.f.right()}))},
                       {.principal = x.id});
      }
      case RuleG4::ImpSL1: {
        const Occ& x = principal();
        G3Ptr left = all_boxes_rsl(ctx(s, x.f.left()), [&](const G3Seq& t) { return sub(0, t); });
        return make_g3(s, RuleG3::LImp, {left, sub(1, s.without(x.id).with({fresh_id(), x.f.right()}))},
                       {.principal = x.id});
      }
      case RuleG4::RSLa:
        return all_boxes_rsl(s, [&](const G3Seq& t) { return sub(0, t); });
      case RuleG4::LAndImp: {
        const Occ& x = principal();
        Occ y{fresh_id(), imp(x.f.left().left(), imp(x.f.left().right(), x.f.right()))};
        return cut_node(s, curry_lemma(x), sub(0, s.without(x.id).with(y)), y);
      }
      case RuleG4::LOrImp: {
        const Occ& x = principal();
        Formula a = x.f.left().left(), b = x.f.left().right(), c = x.f.right();
        Occ y{fresh_id(), conj(imp(a, c), imp(b, c))};
        G3Seq t = s.without(x.id).with(y);
        G3Ptr right = make_g3(t, RuleG3::LAnd,
                              {sub(0, t.without(y.id).with({fresh_id(), imp(a, c)}).with({fresh_id(), imp(b, c)}))},
                              {.principal = y.id});
        return cut_node(s, split_lemma(x), right, y);
      }
      case RuleG4::LImpImpA: {
        const Occ& x = principal();
        Formula a = x.f.left().left(), b = x.f.left().right(), c = x.f.right();
        // s, A ⇒ B: cut x ⇒ B→C against the premise Γ, B→C, A ⇒ B.
        Occ oa{fresh_id(), a}, y{fresh_id(), imp(b, c)};
        G3Seq with_a = s.with(oa).with_succ(b);
        G3Ptr prem0 = sub(0, with_a.without(x.id).with(y));
        G3Ptr inner = cut_node(with_a, tail_lemma(x), prem0, y);
        G3Ptr left = make_g3(ctx(s, x.f.left()), RuleG3::RImp, {inner});
        return make_g3(s, RuleG3::LImp, {left, sub(1, s.without(x.id).with({fresh_id(), c}))},
                       {.principal = x.id});
      }
    }
    throw ContractError("g4_to_g3: unknown rule");
  }
};

G3Ptr profile_rewrite(const G3Ptr& p, Profile profile) {
  const G3Node& n = *p;
  std::vector<G3Ptr> prem;
  for (const G3Ptr& q : n.premises) prem.push_back(profile_rewrite(q, profile));
  G3Extra x{n.principal, n.diag, n.cut, n.cut_id, n.links};
  if (n.rule != RuleG3::RSL) return make_g3(n.seq, n.rule, std::move(prem), std::move(x));

  const G3Seq& ps = n.premises[0]->seq;
  if (profile == Profile::BVariant) {
    for (const Occ& o : n.seq.ante)
      if (!ps.has(o.id)) prem[0] = weaken(prem[0], o);
    return make_g3(n.seq, RuleG3::RSL4, std::move(prem), std::move(x));
  }
  // Each Π formula π is first boxed by L□; the boxes become principal in RGL
  // with the original π as their copy.
  G3Seq top = n.seq;
  std::vector<std::pair<Occ, Occ>> boxed;  // (π, □π)
  for (Occ& o : top.ante)
    if (!o.f.is_box()) {
      Occ b{fresh_id(), box(o.f)};
      boxed.emplace_back(o, b);
      o = b;
    }
  for (auto& [pi, b] : boxed) {
    prem[0] = weaken(prem[0], b);
    x.links.emplace_back(pi.id, b.id);
  }
  G3Ptr out = make_g3(top, RuleG3::RGL, std::move(prem), std::move(x));
  for (auto it = boxed.rbegin(); it != boxed.rend(); ++it) {
    G3Seq below = out->seq.without(it->second.id).with(it->first);
    out = make_g3(below, RuleG3::LBox, {out}, {.principal = it->first.id, .links = {{it->second.id, it->first.id}}});
  }
  return out;
}

}  // namespace

G3Ptr g4_to_g3(const G4Proof& p) { return Translator().run(p, make_g3seq(p.sequent)); }

G3Ptr to_profile(const G3Ptr& p, Profile profile) {
  if (profile == Profile::Core || profile == Profile::WithCut) return p;
  if (!p->cut_free) throw ContractError("to_profile: proof has cuts");
  return profile_rewrite(p, profile);
}

}  // namespace isl
