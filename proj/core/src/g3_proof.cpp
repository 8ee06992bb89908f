#include <algorithm>
#include <atomic>

#include "isl/g3.hpp"

namespace isl {

OccId fresh_id() {
  static std::atomic<OccId> next{1};
  return next.fetch_add(1, std::memory_order_relaxed);
}

const Occ* G3Seq::find(OccId id) const {
  for (const Occ& o : ante)
    if (o.id == id) return &o;
  return nullptr;
}

Sequent G3Seq::formulas() const {
  Multiset m;
  m.reserve(ante.size());
  for (const Occ& o : ante) m.push_back(o.f);
  return Sequent(std::move(m), succ);
}

G3Seq G3Seq::without(OccId id) const {
  G3Seq out = *this;
  auto it = std::find_if(out.ante.begin(), out.ante.end(), [&](const Occ& o) { return o.id == id; });
  if (it == out.ante.end()) throw ContractError("G3Seq::without: id not present");
  out.ante.erase(it);
  return out;
}

G3Seq G3Seq::with(Occ o) const {
  G3Seq out = *this;
  out.ante.push_back(o);
  return out;
}

G3Seq G3Seq::with_succ(std::optional<Formula> s) const {
  G3Seq out = *this;
  out.succ = s;
  return out;
}

std::vector<Occ> make_occs(const Multiset& fs) {
  std::vector<Occ> out;
  for (Formula f : fs) out.push_back({fresh_id(), f});
  return out;
}

G3Seq make_g3seq(const Sequent& s) { return G3Seq{make_occs(s.ante), s.succ}; }

namespace {

constexpr std::pair<RuleG3, std::string_view> kNames[] = {
    {RuleG3::At, "At"},     {RuleG3::LBot, "LBot"}, {RuleG3::RAnd, "RAnd"}, {RuleG3::LAnd, "LAnd"},
    {RuleG3::ROr0, "ROr0"}, {RuleG3::ROr1, "ROr1"}, {RuleG3::LOr, "LOr"},   {RuleG3::RImp, "RImp"},
    {RuleG3::LImp, "LImp"}, {RuleG3::RSL, "RSL"},   {RuleG3::Cut, "Cut"},   {RuleG3::RSL4, "RSL4"},
    {RuleG3::RGL, "RGL"},   {RuleG3::LBox, "LBox"},
};

constexpr std::pair<Profile, std::string_view> kProfiles[] = {
    {Profile::Core, "core"},
    {Profile::WithCut, "with_cut"},
    {Profile::BVariant, "b_variant"},
    {Profile::GlcVariant, "glc_variant"},
};

}  // namespace

std::string_view rule_name(RuleG3 r) {
  for (auto& [k, n] : kNames)
    if (k == r) return n;
  return "?";
}

std::optional<RuleG3> rule_g3_from_name(std::string_view name) {
  for (auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_modal_rule(RuleG3 r) { return r == RuleG3::RSL || r == RuleG3::RSL4 || r == RuleG3::RGL; }

std::string_view profile_name(Profile p) {
  for (auto& [k, n] : kProfiles)
    if (k == p) return n;
  return "?";
}

std::optional<Profile> profile_from_name(std::string_view name) {
  for (auto& [k, n] : kProfiles)
    if (n == name) return k;
  return std::nullopt;
}

G3Ptr make_g3(G3Seq seq, RuleG3 rule, std::vector<G3Ptr> premises, G3Extra extra) {
  auto n = std::make_shared<G3Node>();
  n->seq = std::move(seq);
  n->rule = rule;
  n->principal = extra.principal;
  n->diag = extra.diag;
  n->cut = extra.cut;
  n->cut_id = extra.cut_id;
  n->links = std::move(extra.links);
  n->premises = std::move(premises);
  n->cut_free = rule != RuleG3::Cut;
  unsigned h = 0;
  for (const G3Ptr& p : n->premises) {
    h = std::max(h, p->height);
    n->cut_free = n->cut_free && p->cut_free;
    n->size += p->size;
  }
  n->height = h + 1;
  return n;
}

std::size_t count_cuts(const G3Node& p) {
  if (p.cut_free) return 0;
  std::size_t n = p.rule == RuleG3::Cut ? 1 : 0;
  for (const G3Ptr& q : p.premises) n += count_cuts(*q);
  return n;
}

}  // namespace isl
