#include <map>

#include "isl/g4.hpp"

namespace isl {

namespace {

class Searcher {
 public:
  explicit Searcher(const SearchOptions& opts) : opts_(opts) {}

  SearchTree run(const Sequent& s) {
    tree_.c = box_occurrences(s);
    tree_.root = expand(s);
    return std::move(tree_);
  }

 private:
  int expand(const Sequent& s) {
    if (auto it = memo_.find(s); it != memo_.end()) {
      if (open_[static_cast<std::size_t>(it->second)])
        throw ContractError("search revisited an open sequent: " + std::to_string(it->second));
      return it->second;
    }
    int id = static_cast<int>(tree_.nodes.size());
    Note note = Note::Reducible;
    if (is_axiom(s)) note = Note::Axiom;
    else if (is_extended_axiom(s)) note = Note::ExtendedAxiom;
    else if (is_irreducible(s)) note = Note::Irreducible;
    tree_.nodes.push_back(SearchNode{s, note, Mark::Negative, {}});
    open_.push_back(true);
    memo_.emplace(s, id);

    bool positive = false;
    if (note == Note::Axiom || note == Note::ExtendedAxiom) {
      positive = true;
    } else {
      for (RuleApp& app : backward_applications(s, opts_.priority)) {
        SearchGroup group{app.rule, app.principal, {}};
        bool all = true;
        for (const Sequent& prem : app.premises) {
          int child = expand(prem);
          group.children.push_back(child);
          if (tree_.nodes[static_cast<std::size_t>(child)].mark == Mark::Negative) {
            all = false;
            if (!opts_.full) break;
          }
        }
        tree_.nodes[static_cast<std::size_t>(id)].groups.push_back(std::move(group));
        if (all) positive = true;
        if (note == Note::Reducible) break;
        if (positive && !opts_.full) break;
      }
    }
    tree_.nodes[static_cast<std::size_t>(id)].mark = positive ? Mark::Positive : Mark::Negative;
    open_[static_cast<std::size_t>(id)] = false;
    return id;
  }

  SearchOptions opts_;
  SearchTree tree_;
  std::map<Sequent, int, SequentLess> memo_;
  std::vector<bool> open_;
};

}  // namespace

SearchTree search(const Sequent& s, const SearchOptions& opts) { return Searcher(opts).run(s); }

bool decide(const Sequent& s) { return search(s).positive(); }

bool decide(const Sequent& s, const Priority& prio) {
  SearchOptions o;
  o.priority = prio;
  return search(s, o).positive();
}

std::vector<EdgeViolation> termination_violations(const SearchTree& t) {
  std::vector<EdgeViolation> out;
  SearchOrderContext ctx{t.c};
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (const SearchGroup& g : t.nodes[i].groups)
      for (int c : g.children) {
        bool ok = false;
        try {
          ok = sequent_less(t.node(c).sequent, t.nodes[i].sequent, ctx);
        } catch (const ContractError&) {
          ok = false;
        }
        if (!ok) out.push_back({static_cast<int>(i), c});
      }
  return out;
}

std::size_t edge_count(const SearchTree& t) {
  std::size_t n = 0;
  for (const SearchNode& node : t.nodes)
    for (const SearchGroup& g : node.groups) n += g.children.size();
  return n;
}

}  // namespace isl
