#include "isl/sequent.hpp"

#include <algorithm>
#include <map>

namespace isl {

void sort_multiset(Multiset& m) { std::sort(m.begin(), m.end(), FormulaLess{}); }

Multiset sorted(Multiset m) {
  sort_multiset(m);
  return m;
}

bool erase_one(Multiset& m, Formula f) {
  auto it = std::lower_bound(m.begin(), m.end(), f, FormulaLess{});
  if (it == m.end() || *it != f) return false;
  m.erase(it);
  return true;
}

void insert_sorted(Multiset& m, Formula f) {
  m.insert(std::upper_bound(m.begin(), m.end(), f, FormulaLess{}), f);
}

Sequent::Sequent(Multiset a, std::optional<Formula> s) : ante(std::move(a)), succ(s) {
  sort_multiset(ante);
}

bool Sequent::contains(Formula f) const {
  return std::binary_search(ante.begin(), ante.end(), f, FormulaLess{});
}

std::size_t Sequent::count(Formula f) const {
  auto [lo, hi] = std::equal_range(ante.begin(), ante.end(), f, FormulaLess{});
  return static_cast<std::size_t>(hi - lo);
}

Sequent Sequent::without(Formula f) const {
  Sequent out = *this;
  if (!erase_one(out.ante, f)) throw ContractError("formula not in antecedent");
  return out;
}

Sequent Sequent::with(Formula f) const {
  Sequent out = *this;
  insert_sorted(out.ante, f);
  return out;
}

Sequent Sequent::with_succ(std::optional<Formula> s) const {
  Sequent out = *this;
  out.succ = s;
  return out;
}

bool SequentLess::operator()(const Sequent& a, const Sequent& b) const {
  std::size_t n = std::min(a.ante.size(), b.ante.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a.ante[i], b.ante[i])) return c < 0;
  if (a.ante.size() != b.ante.size()) return a.ante.size() < b.ante.size();
  if (a.succ.has_value() != b.succ.has_value()) return !a.succ.has_value();
  if (!a.succ) return false;
  return compare(*a.succ, *b.succ) < 0;
}

unsigned box_count(const Sequent& s) {
  unsigned n = 0;
  for (std::size_t i = 0; i < s.ante.size(); ++i)
    if (s.ante[i].is_box() && (i == 0 || s.ante[i - 1] != s.ante[i])) ++n;
  return n;
}

unsigned box_occurrences(const Sequent& s) {
  unsigned n = 0;
  for (Formula f : s.ante) n += f.box_occurrences();
  if (s.succ) n += s.succ->box_occurrences();
  return n;
}

std::set<std::string> atoms(const Sequent& s) {
  std::set<std::string> out;
  for (Formula f : s.ante) collect_atoms(f, out);
  if (s.succ) collect_atoms(*s.succ, out);
  return out;
}

// a ≪ b iff a ≠ b and every formula with surplus in a is dominated by a
// heavier formula with surplus in b.
bool multiset_less(const Multiset& a, const Multiset& b) {
  std::map<Formula, long, FormulaLess> diff;
  for (Formula f : a) ++diff[f];
  for (Formula f : b) --diff[f];
  unsigned max_b_surplus = 0;
  bool any = false;
  for (auto& [f, d] : diff) {
    if (d < 0) max_b_surplus = std::max(max_b_surplus, f.weight());
    if (d != 0) any = true;
  }
  if (!any) return false;
  for (auto& [f, d] : diff)
    if (d > 0 && f.weight() >= max_b_surplus) return false;
  return true;
}

bool sequent_less(const Sequent& s1, const Sequent& s2, SearchOrderContext ctx) {
  unsigned b1 = box_count(s1), b2 = box_count(s2);
  if (ctx.c < b1 || ctx.c < b2) throw ContractError("sequent_less: box budget below box count");
  if (ctx.c - b1 != ctx.c - b2) return ctx.c - b1 < ctx.c - b2;
  Multiset m1 = s1.ante, m2 = s2.ante;
  if (s1.succ) m1.push_back(*s1.succ);
  if (s2.succ) m2.push_back(*s2.succ);
  return multiset_less(m1, m2);
}

}  // namespace isl
