#include <algorithm>

#include "isl/g3_ops.hpp"

namespace isl {

namespace {

// Premises of `n` that inherit its succedent.
std::vector<std::size_t> succ_premises(const G3Node& n) {
  switch (n.rule) {
    case RuleG3::LAnd: case RuleG3::LBox: return {0};
    case RuleG3::LOr: return {0, 1};
    case RuleG3::LImp: case RuleG3::Cut: return {1};
    default: return {};
  }
}

void trace_diag(const G3Node& n, OccId d, Path& path, std::vector<Path>& out) {
  if (is_modal_rule(n.rule)) {
    bool principal = std::any_of(n.links.begin(), n.links.end(), [&](const auto& l) { return l.second == d; });
    if (principal) out.push_back(path);
    return;
  }
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    if (!n.premises[i]->seq.has(d)) continue;
    path.push_back(i);
    trace_diag(*n.premises[i], d, path, out);
    path.pop_back();
  }
}

void walk(const G3Node& n, Formula boxed, Path& path, std::vector<Path>& out) {
  if (is_modal_rule(n.rule)) {
    if (n.seq.succ != boxed || !n.diag) return;
    path.push_back(0);
    trace_diag(*n.premises[0], *n.diag, path, out);
    path.pop_back();
    return;
  }
  for (std::size_t i : succ_premises(n)) {
    path.push_back(i);
    walk(*n.premises[i], boxed, path, out);
    path.pop_back();
  }
}

void collect(const G3Node& n, CutMeasure& best) {
  if (n.cut_free) return;
  if (n.rule == RuleG3::Cut) best = std::max(best, cut_measure(n));
  for (const G3Ptr& q : n.premises) collect(*q, best);
}

}  // namespace

std::vector<Path> critical_inferences(const G3Node& p, Formula boxed) {
  std::vector<Path> out;
  Path path;
  walk(p, boxed, path, out);
  return out;
}

CutMeasure cut_measure(const G3Node& left, const G3Node& right, Formula cut) {
  unsigned width = cut.is_box() ? static_cast<unsigned>(critical_inferences(left, cut).size()) : 0;
  return {cut.degree(), width, left.height + right.height};
}

CutMeasure cut_measure(const G3Node& n) {
  if (n.rule != RuleG3::Cut || !n.cut) throw ContractError("cut_measure: not a cut");
  return cut_measure(*n.premises[0], *n.premises[1], *n.cut);
}

CutMeasure dwl(const G3Node& p) {
  CutMeasure best;
  collect(p, best);
  return best;
}

}  // namespace isl
