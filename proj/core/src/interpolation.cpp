#include "isl/interpolation.hpp"

#include <set>

#include "isl/cut_elim.hpp"
#include "isl/translate.hpp"

namespace isl {

namespace {

bool is_top(Formula f) { return f == top(); }

Formula mk_and(Formula a, Formula b) {
  if (is_top(a)) return b;
  if (is_top(b)) return a;
  if (a.is_bottom() || b.is_bottom()) return bot();
  return a == b ? a : conj(a, b);
}

Formula mk_or(Formula a, Formula b) {
  if (is_top(a) || is_top(b)) return top();
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return a == b ? a : disj(a, b);
}

Formula mk_imp(Formula a, Formula b) {
  if (a.is_bottom() || is_top(b) || a == b) return top();
  if (is_top(a)) return b;
  return imp(a, b);
}

Formula mk_box(Formula a) { return is_top(a) ? top() : box(a); }

using Side = std::set<OccId>;  // occurrences in the left part

// Side assignment for premise `q` of `n`: kept ids keep their side, fresh
// ids follow `fresh_left`.
Side inherit(const G3Node& n, const G3Node& q, const Side& left, bool fresh_left) {
  Side out;
  for (const Occ& o : q.seq.ante) {
    bool kept = n.seq.has(o.id);
    if (kept ? left.count(o.id) > 0 : fresh_left) out.insert(o.id);
  }
  return out;
}

Formula build(const G3Node& n, const Side& left) {
  auto on_left = [&](OccId id) { return left.count(id) > 0; };
  switch (n.rule) {
    case RuleG3::At:
      return on_left(*n.principal) ? *n.seq.succ : top();
    case RuleG3::LBot:
      return on_left(*n.principal) ? bot() : top();
    case RuleG3::RAnd:
      return mk_and(build(*n.premises[0], inherit(n, *n.premises[0], left, false)),
                    build(*n.premises[1], inherit(n, *n.premises[1], left, false)));
    case RuleG3::ROr0:
    case RuleG3::ROr1:
      return build(*n.premises[0], inherit(n, *n.premises[0], left, false));
    case RuleG3::RImp:
      return build(*n.premises[0], inherit(n, *n.premises[0], left, false));
    case RuleG3::LAnd:
      return build(*n.premises[0], inherit(n, *n.premises[0], left, on_left(*n.principal)));
    case RuleG3::LOr: {
      bool l = on_left(*n.principal);
      Formula i0 = build(*n.premises[0], inherit(n, *n.premises[0], left, l));
      Formula i1 = build(*n.premises[1], inherit(n, *n.premises[1], left, l));
      return l ? mk_or(i0, i1) : mk_and(i0, i1);
    }
    case RuleG3::LImp: {
      const G3Node& q0 = *n.premises[0];
      const G3Node& q1 = *n.premises[1];
      bool l = on_left(*n.principal);
      Formula i1 = build(q1, inherit(n, q1, left, l));
      if (!l) return mk_and(build(q0, inherit(n, q0, left, false)), i1);
      // The left premise proves the antecedent of x, which lives on the
      // left, so the two parts trade places there.
      Side swapped;
      for (const Occ& o : q0.seq.ante)
        if (!on_left(o.id)) swapped.insert(o.id);
      return mk_imp(build(q0, swapped), i1);
    }
    case RuleG3::RSL: {
      const G3Node& q = *n.premises[0];
      Side s;
      for (const Occ& o : q.seq.ante)
        if (on_left(o.id)) s.insert(o.id);
      for (auto& [copy, b] : n.links)
        if (on_left(b)) s.insert(copy);
      return mk_box(build(q, s));
    }
    default:
      throw InterpolationError("interpolation needs a cut-free core proof, found " + std::string(rule_name(n.rule)));
  }
}

std::set<std::string> atoms_of(const Multiset& m) {
  std::set<std::string> out;
  for (Formula f : m) collect_atoms(f, out);
  return out;
}

}  // namespace

Formula interpolant_candidate(const G3Node& p, const SplitSequent& split) {
  if (!p.cut_free) throw InterpolationError("interpolation needs a cut-free proof");
  Sequent whole = split.whole();
  Sequent have = p.seq.formulas();
  if (sorted(whole.ante) != sorted(have.ante) || whole.succ != have.succ)
    throw InterpolationError("split " + render(split) + " does not match the proof of " + render(have));
  Side left;
  std::vector<bool> used(p.seq.ante.size(), false);
  for (Formula f : split.left)
    for (std::size_t i = 0; i < p.seq.ante.size(); ++i)
      if (!used[i] && p.seq.ante[i].f == f) {
        used[i] = true;
        left.insert(p.seq.ante[i].id);
        break;
      }
  return build(p, left);
}

bool is_interpolant(Formula i, const SplitSequent& split) {
  std::set<std::string> l = atoms_of(split.left);
  std::set<std::string> r = atoms_of(split.right);
  if (split.succ) collect_atoms(*split.succ, r);
  for (const std::string& a : atoms(i))
    if (!l.count(a) || !r.count(a)) return false;
  Multiset right = split.right;
  right.push_back(i);
  return decide(Sequent(split.left, i)) && decide(Sequent(right, split.succ));
}

Formula interpolate(const G3Node& p, const SplitSequent& split) {
  Formula i = interpolant_candidate(p, split);
  if (!is_interpolant(i, split))
    throw InterpolationError("constructed formula " + render(i) + " is not an interpolant of " + render(split));
  return i;
}

Formula interpolate(const SplitSequent& split) {
  SearchTree t = search(split.whole());
  if (!t.positive()) throw InterpolationError("sequent is not provable: " + render(split.whole()));
  G3Ptr p = eliminate_cuts(g4_to_g3(*extract_proof(t))).proof;
  return interpolate(*p, split);
}

}  // namespace isl
