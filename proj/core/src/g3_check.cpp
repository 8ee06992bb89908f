#include <algorithm>
#include <map>
#include <set>

#include "isl/g3.hpp"
#include "isl/parser.hpp"

namespace isl {

namespace {

bool enabled(RuleG3 r, Profile p) {
  switch (r) {
    case RuleG3::Cut: return p == Profile::WithCut;
    case RuleG3::RSL: return p == Profile::Core || p == Profile::WithCut;
    case RuleG3::RSL4: return p == Profile::BVariant;
    case RuleG3::RGL:
    case RuleG3::LBox: return p == Profile::GlcVariant;
    default: return true;
  }
}

struct Diff {
  std::vector<Occ> kept;     // premise occurrences also in the conclusion
  std::vector<Occ> fresh;    // premise occurrences new in the premise
  std::vector<Occ> missing;  // conclusion occurrences absent from the premise
  bool mismatch = false;     // same id, different formula
};

Diff diff(const G3Seq& concl, const G3Seq& prem) {
  Diff d;
  for (const Occ& o : prem.ante) {
    const Occ* c = concl.find(o.id);
    if (!c) d.fresh.push_back(o);
    else if (c->f != o.f) d.mismatch = true;
    else d.kept.push_back(o);
  }
  for (const Occ& o : concl.ante)
    if (!prem.has(o.id)) d.missing.push_back(o);
  return d;
}

bool same_formulas(std::vector<Occ> occs, Multiset expected) {
  Multiset got;
  for (const Occ& o : occs) got.push_back(o.f);
  sort_multiset(got);
  sort_multiset(expected);
  return got == expected;
}

class Checker {
 public:
  explicit Checker(Profile p) : profile_(p) {}

  CheckResult run(const G3Node& n, const std::string& path) {
    if (std::string e = local(n); !e.empty())
      return {false, std::string(rule_name(n.rule)) + ": " + e + " at " + render(n.seq.formulas()), path};
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
      if (CheckResult r = run(*n.premises[i], sub); !r) return r;
    }
    return {};
  }

 private:
  std::string local(const G3Node& n) {
    if (!enabled(n.rule, profile_)) return "rule not enabled in profile " + std::string(profile_name(profile_));
    std::set<OccId> ids;
    for (const Occ& o : n.seq.ante)
      if (!ids.insert(o.id).second) return "duplicate occurrence id";
    for (const G3Ptr& p : n.premises)
      if (!p) return "missing premise";
    const G3Seq& s = n.seq;
    auto arity = [&](std::size_t k) { return n.premises.size() == k; };
    auto principal = [&]() -> const Occ* { return n.principal ? s.find(*n.principal) : nullptr; };

    switch (n.rule) {
      case RuleG3::At: {
        const Occ* p = principal();
        if (!arity(0)) return "axiom with premises";
        if (!p || !p->f.is_atom() || s.succ != p->f) return "principal must be the atomic succedent";
        return "";
      }
      case RuleG3::LBot: {
        const Occ* p = principal();
        if (!arity(0)) return "axiom with premises";
        if (!p || !p->f.is_bottom()) return "principal must be false";
        return "";
      }
      case RuleG3::RAnd:
      case RuleG3::ROr0:
      case RuleG3::ROr1:
      case RuleG3::RImp: {
        bool is_and = n.rule == RuleG3::RAnd, is_imp = n.rule == RuleG3::RImp;
        if (!s.succ || (is_and && !s.succ->is_and()) || (is_imp && !s.succ->is_imp()) ||
            (!is_and && !is_imp && !s.succ->is_or()))
          return "succedent has the wrong shape";
        if (!arity(is_and ? 2 : 1)) return "wrong number of premises";
        for (std::size_t i = 0; i < n.premises.size(); ++i) {
          const G3Seq& ps = n.premises[i]->seq;
          Diff d = diff(s, ps);
          if (d.mismatch || !d.missing.empty()) return "premise must keep the context";
          Formula want = n.rule == RuleG3::ROr1 ? s.succ->right()
                         : is_imp                ? s.succ->right()
                         : i == 0                ? s.succ->left()
                                                 : s.succ->right();
          if (ps.succ != want) return "premise succedent is wrong";
          if (is_imp ? !same_formulas(d.fresh, {s.succ->left()}) : !d.fresh.empty())
            return "premise antecedent is wrong";
        }
        return "";
      }
      case RuleG3::LAnd:
      case RuleG3::LOr:
      case RuleG3::LBox: {
        const Occ* p = principal();
        if (!p) return "principal not in antecedent";
        bool is_or = n.rule == RuleG3::LOr;
        if (n.rule == RuleG3::LAnd && !p->f.is_and()) return "principal is not a conjunction";
        if (is_or && !p->f.is_or()) return "principal is not a disjunction";
        if (!arity(is_or ? 2 : 1)) return "wrong number of premises";
        for (std::size_t i = 0; i < n.premises.size(); ++i) {
          const G3Seq& ps = n.premises[i]->seq;
          Diff d = diff(s, ps);
          if (d.mismatch || d.missing.size() != 1 || d.missing[0].id != p->id) return "premise must keep the side formulas";
          if (ps.succ != s.succ) return "premise succedent differs";
          Multiset want = n.rule == RuleG3::LAnd ? Multiset{p->f.left(), p->f.right()}
                          : n.rule == RuleG3::LBox ? Multiset{box(p->f)}
                          : Multiset{i == 0 ? p->f.left() : p->f.right()};
          if (!same_formulas(d.fresh, want)) return "premise active formulas are wrong";
          if (n.rule == RuleG3::LBox &&
              (n.links.size() != 1 || n.links[0].first != d.fresh[0].id || n.links[0].second != p->id))
            return "LBox link is wrong";
        }
        return "";
      }
      case RuleG3::LImp: {
        const Occ* p = principal();
        if (!p || !p->f.is_imp()) return "principal is not an implication";
        if (!arity(2)) return "wrong number of premises";
        Diff l = diff(s, n.premises[0]->seq);
        if (l.mismatch || !l.missing.empty() || !l.fresh.empty()) return "left premise must keep the whole antecedent";
        if (n.premises[0]->seq.succ != p->f.left()) return "left premise succedent is wrong";
        Diff r = diff(s, n.premises[1]->seq);
        if (r.mismatch || r.missing.size() != 1 || r.missing[0].id != p->id) return "right premise must drop only the principal";
        if (!same_formulas(r.fresh, {p->f.right()})) return "right premise active formula is wrong";
        if (n.premises[1]->seq.succ != s.succ) return "right premise succedent differs";
        return "";
      }
      case RuleG3::Cut: {
        if (!arity(2) || !n.cut || !n.cut_id) return "cut needs two premises, a formula and an id";
        const G3Seq& l = n.premises[0]->seq;
        const G3Seq& r = n.premises[1]->seq;
        if (l.succ != n.cut) return "left premise must prove the cut formula";
        if (r.succ != s.succ) return "right premise succedent differs";
        const Occ* c = r.find(*n.cut_id);
        if (!c || c->f != *n.cut || s.has(*n.cut_id)) return "cut occurrence missing in the right premise";
        Diff dl = diff(s, l), dr = diff(s, r);
        if (dl.mismatch || dr.mismatch || !dl.fresh.empty() || dr.fresh.size() != 1) return "premise contexts are wrong";
        std::set<OccId> seen;
        for (const Occ& o : dl.kept) seen.insert(o.id);
        for (const Occ& o : dr.kept)
          if (!seen.insert(o.id).second) return "cut contexts overlap";
        if (seen.size() != s.ante.size()) return "cut contexts do not cover the conclusion";
        return "";
      }
      case RuleG3::RSL:
      case RuleG3::RSL4:
      case RuleG3::RGL:
        return modal(n);
    }
    return "unknown rule";
  }

  std::string modal(const G3Node& n) {
    const G3Seq& s = n.seq;
    if (!s.succ || !s.succ->is_box()) return "succedent must be boxed";
    if (n.premises.size() != 1) return "wrong number of premises";
    const G3Seq& ps = n.premises[0]->seq;
    if (ps.succ != s.succ->inner()) return "premise succedent must be the unboxed succedent";
    Diff d = diff(s, ps);
    if (d.mismatch) return "occurrence id reused for a different formula";
    if (!n.diag) return "missing diagonal occurrence";
    std::map<OccId, OccId> link_of;  // premise copy -> conclusion box
    std::map<OccId, int> copies;     // conclusion box -> number of copies
    for (auto& [pid, cid] : n.links) {
      const Occ* c = s.find(cid);
      const Occ* p = ps.find(pid);
      if (!c || !p || s.has(pid) || !c->f.is_box() || p->f != c->f.inner()) return "bad unboxing link";
      if (!ps.has(cid)) return "linked box is not kept in the premise";
      if (!link_of.emplace(pid, cid).second) return "duplicate link";
      ++copies[cid];
    }
    for (auto& [cid, k] : copies)
      if (k != 1) return "box with more than one unboxed copy";
    bool diag_seen = false;
    for (const Occ& o : d.fresh) {
      if (o.id == *n.diag) {
        if (o.f != *s.succ) return "diagonal formula is wrong";
        diag_seen = true;
      } else if (!link_of.count(o.id)) {
        return "unexplained premise formula " + render(o.f);
      }
    }
    if (!diag_seen) return "diagonal formula missing in premise";
    for (const Occ& o : d.kept) {
      bool principal = copies.count(o.id) > 0;
      if (n.rule == RuleG3::RSL && o.f.is_box() && !principal) return "boxed formula in the Pi context";
      if (n.rule == RuleG3::RGL && !principal) return "only principal boxes may be kept";
    }
    for (const Occ& o : d.missing) {
      if (n.rule == RuleG3::RSL && !o.f.is_box()) return "non-boxed formula dropped";
      if (n.rule == RuleG3::RSL4) return "RSL4 keeps the whole antecedent";
    }
    return "";
  }

  Profile profile_;
};

}  // namespace

CheckResult check_g3_proof(const G3Node& p, Profile profile) { return Checker(profile).run(p, ""); }

}  // namespace isl
