#include "isl/g4.hpp"

#include <algorithm>

namespace isl {

namespace {

constexpr std::pair<RuleG4, std::string_view> kNames[] = {
    {RuleG4::At, "At"},           {RuleG4::LBot, "LBot"},       {RuleG4::RAnd, "RAnd"},
    {RuleG4::LAnd, "LAnd"},       {RuleG4::ROr0, "ROr0"},       {RuleG4::ROr1, "ROr1"},
    {RuleG4::LOr, "LOr"},         {RuleG4::RImp, "RImp"},       {RuleG4::LpImp, "LpImp"},
    {RuleG4::LAndImp, "LAndImp"}, {RuleG4::LOrImp, "LOrImp"},   {RuleG4::LImpImpA, "LImpImpA"},
    {RuleG4::ImpSL1, "ImpSL1"},   {RuleG4::ImpSL2, "ImpSL2"},   {RuleG4::RSLa, "RSLa"},
};

bool left_rule(RuleG4 r) {
  switch (r) {
    case RuleG4::LAnd: case RuleG4::LOr: case RuleG4::LpImp: case RuleG4::LAndImp:
    case RuleG4::LOrImp: case RuleG4::LImpImpA: case RuleG4::ImpSL1: case RuleG4::ImpSL2:
      return true;
    default:
      return false;
  }
}

// Whether `f` could be the principal formula of left rule `r` in `s`.
bool left_shape(const Sequent& s, RuleG4 r, Formula f) {
  switch (r) {
    case RuleG4::LAnd: return f.is_and();
    case RuleG4::LOr: return f.is_or();
    case RuleG4::LpImp: return f.is_imp() && f.left().is_atom() && s.contains(f.left());
    case RuleG4::LAndImp: return f.is_imp() && f.left().is_and();
    case RuleG4::LOrImp: return f.is_imp() && f.left().is_or();
    case RuleG4::LImpImpA: return f.is_imp() && f.left().is_imp();
    case RuleG4::ImpSL1: return f.is_imp() && f.left().is_box() && !s.contains(f.left());
    case RuleG4::ImpSL2: return f.is_imp() && f.left().is_box() && s.contains(f.left());
    default: return false;
  }
}

// Π, ⊡Γ for the antecedent Π, □Γ.
Multiset unbox_context(const Multiset& ante) {
  Multiset out = ante;
  for (Formula f : ante)
    if (f.is_box()) out.push_back(f.inner());
  sort_multiset(out);
  return out;
}

}  // namespace

std::string_view rule_name(RuleG4 r) {
  for (auto& [k, n] : kNames)
    if (k == r) return n;
  return "?";
}

std::optional<RuleG4> rule_g4_from_name(std::string_view name) {
  for (auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_invertible(RuleG4 r) {
  switch (r) {
    case RuleG4::LAnd: case RuleG4::LOr: case RuleG4::LpImp: case RuleG4::LAndImp:
    case RuleG4::LOrImp: case RuleG4::ImpSL2: case RuleG4::RAnd: case RuleG4::RImp:
      return true;
    default:
      return false;
  }
}

Priority default_priority() {
  return {RuleG4::LAnd, RuleG4::LOr, RuleG4::LpImp, RuleG4::LAndImp,
          RuleG4::LOrImp, RuleG4::ImpSL2, RuleG4::RAnd, RuleG4::RImp};
}

std::optional<std::vector<Sequent>> apply_g4(const Sequent& s, RuleG4 rule, std::optional<Formula> principal) {
  using Out = std::vector<Sequent>;
  if (left_rule(rule)) {
    if (!principal || !s.contains(*principal) || !left_shape(s, rule, *principal)) return std::nullopt;
    Formula f = *principal;
    Sequent rest = s.without(f);
    switch (rule) {
      case RuleG4::LAnd: return Out{rest.with(f.left()).with(f.right())};
      case RuleG4::LOr: return Out{rest.with(f.left()), rest.with(f.right())};
      case RuleG4::LpImp: return Out{rest.with(f.right())};
      case RuleG4::LAndImp: {
        Formula a = f.left().left(), b = f.left().right(), c = f.right();
        return Out{rest.with(imp(a, imp(b, c)))};
      }
      case RuleG4::LOrImp: {
        Formula a = f.left().left(), b = f.left().right(), c = f.right();
        return Out{rest.with(imp(a, c)).with(imp(b, c))};
      }
      case RuleG4::LImpImpA: {
        Formula a = f.left().left(), b = f.left().right(), c = f.right();
        Sequent left = rest.with(imp(b, c)).with(a).with_succ(b);
        return Out{left, rest.with(c)};
      }
      case RuleG4::ImpSL1: {
        Formula bx = f.left();
        Sequent left(unbox_context(s.ante), bx.inner());
        left = left.with(bx);
        return Out{left, rest.with(f.right())};
      }
      case RuleG4::ImpSL2: return Out{rest.with(f.right())};
      default: return std::nullopt;
    }
  }
  switch (rule) {
    case RuleG4::At:
      if (s.succ && s.succ->is_atom() && s.contains(*s.succ)) return Out{};
      return std::nullopt;
    case RuleG4::LBot:
      if (s.contains(bot())) return Out{};
      return std::nullopt;
    case RuleG4::RAnd:
      if (!s.succ || !s.succ->is_and()) return std::nullopt;
      return Out{s.with_succ(s.succ->left()), s.with_succ(s.succ->right())};
    case RuleG4::ROr0:
    case RuleG4::ROr1:
      if (!s.succ || !s.succ->is_or()) return std::nullopt;
      return Out{s.with_succ(rule == RuleG4::ROr0 ? s.succ->left() : s.succ->right())};
    case RuleG4::RImp:
      if (!s.succ || !s.succ->is_imp()) return std::nullopt;
      return Out{s.with(s.succ->left()).with_succ(s.succ->right())};
    case RuleG4::RSLa: {
      if (!s.succ || !s.succ->is_box()) return std::nullopt;
      Sequent prem(unbox_context(s.ante), s.succ->inner());
      return Out{prem.with(*s.succ)};
    }
    default:
      return std::nullopt;
  }
}

bool is_axiom(const Sequent& s) {
  return s.contains(bot()) || (s.succ && s.succ->is_atom() && s.contains(*s.succ));
}

bool is_extended_axiom(const Sequent& s) { return s.succ && s.contains(*s.succ); }

bool is_irreducible(const Sequent& s) {
  if (s.succ && (s.succ->is_and() || s.succ->is_imp())) return false;
  if (is_extended_axiom(s)) return false;
  for (Formula f : s.ante) {
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Box:
        break;
      case Kind::Imp: {
        Formula a = f.left();
        if (a.is_and() || a.is_or()) return false;
        if (a.is_atom() && s.contains(a)) return false;
        if (a.is_box() && s.contains(a)) return false;
        break;  // ⊥→φ is inert: no rule of the calculus decomposes it
      }
      default:
        return false;
    }
  }
  return true;
}

std::vector<RuleApp> backward_applications(const Sequent& s, const Priority& prio) {
  std::vector<RuleApp> out;
  if (is_axiom(s) || is_extended_axiom(s)) return out;
  if (!is_irreducible(s)) {
    for (RuleG4 r : prio) {
      if (left_rule(r)) {
        for (Formula f : s.ante)
          if (left_shape(s, r, f)) {
            out.push_back({r, f, *apply_g4(s, r, f)});
            return out;
          }
      } else if (auto prem = apply_g4(s, r, std::nullopt)) {
        out.push_back({r, std::nullopt, *prem});
        return out;
      }
    }
    throw ContractError("reducible sequent without an invertible rule: internal error");
  }
  for (RuleG4 r : {RuleG4::LImpImpA, RuleG4::ImpSL1}) {
    for (std::size_t i = 0; i < s.ante.size(); ++i) {
      Formula f = s.ante[i];
      if (i > 0 && s.ante[i - 1] == f) continue;
      if (left_shape(s, r, f)) out.push_back({r, f, *apply_g4(s, r, f)});
    }
  }
  for (RuleG4 r : {RuleG4::ROr0, RuleG4::ROr1, RuleG4::RSLa})
    if (auto prem = apply_g4(s, r, std::nullopt)) out.push_back({r, std::nullopt, *prem});
  return out;
}

}  // namespace isl
