#include "isl/formula.hpp"

#include <deque>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace isl {

struct FormulaNode {
  Kind kind;
  std::string name;
  const FormulaNode* left;
  const FormulaNode* right;
  unsigned weight;
  unsigned degree;
  unsigned boxes;
  std::size_t hash;
};

namespace {

struct Key {
  Kind kind;
  std::string name;
  const FormulaNode* left;
  const FormulaNode* right;
  bool operator==(const Key& o) const {
    return kind == o.kind && left == o.left && right == o.right && name == o.name;
  }
};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = static_cast<std::size_t>(k.kind);
    h = mix(h, std::hash<std::string>{}(k.name));
    h = mix(h, k.left ? k.left->hash : 0);
    h = mix(h, k.right ? k.right->hash : 0);
    return h;
  }
};

struct Table {
  std::mutex mu;
  std::deque<FormulaNode> nodes;
  std::unordered_map<Key, const FormulaNode*, KeyHash> index;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

Formula intern(Kind kind, std::string_view name, const FormulaNode* l, const FormulaNode* r) {
  Key key{kind, std::string(name), l, r};
  Table& t = table();
  std::lock_guard lock(t.mu);
  if (auto it = t.index.find(key); it != t.index.end()) return Formula(it->second);
  FormulaNode n{kind, key.name, l, r, 1, 0, 0, KeyHash{}(key)};
  switch (kind) {
    case Kind::Bottom: n.weight = 1; n.degree = 0; break;
    case Kind::Atom: n.weight = 1; n.degree = 1; break;
    case Kind::Box:
      n.weight = l->weight + 1;
      n.degree = l->degree + 1;
      n.boxes = l->boxes + 1;
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      n.weight = l->weight + r->weight + (kind == Kind::And ? 2 : 1);
      n.degree = l->degree + r->degree + 1;
      n.boxes = l->boxes + r->boxes;
      break;
  }
  t.nodes.push_back(std::move(n));
  const FormulaNode* p = &t.nodes.back();
  t.index.emplace(std::move(key), p);
  return Formula(p);
}

Formula::Formula() : p_(bot().p_) {}

Kind Formula::kind() const { return p_->kind; }
const std::string& Formula::name() const { return p_->name; }
Formula Formula::left() const {
  if (!p_->left || kind() == Kind::Box) throw ContractError("left() on non-binary formula");
  return Formula(p_->left);
}
Formula Formula::right() const {
  if (!p_->right) throw ContractError("right() on non-binary formula");
  return Formula(p_->right);
}
Formula Formula::inner() const {
  if (kind() != Kind::Box) throw ContractError("inner() on non-box formula");
  return Formula(p_->left);
}
unsigned Formula::weight() const { return p_->weight; }
unsigned Formula::degree() const { return p_->degree; }
unsigned Formula::box_occurrences() const { return p_->boxes; }
std::size_t Formula::hash() const { return p_->hash; }

Formula bot() {
  static const Formula b = intern(Kind::Bottom, "", nullptr, nullptr);
  return b;
}

Formula atom(std::string_view name) {
  if (name.empty()) throw ContractError("atom name must be nonempty");
  return intern(Kind::Atom, name, nullptr, nullptr);
}

Formula conj(Formula a, Formula b) { return intern(Kind::And, "", a.node(), b.node()); }
Formula disj(Formula a, Formula b) { return intern(Kind::Or, "", a.node(), b.node()); }
Formula imp(Formula a, Formula b) { return intern(Kind::Imp, "", a.node(), b.node()); }
Formula box(Formula a) { return intern(Kind::Box, "", a.node(), nullptr); }
Formula neg(Formula a) { return imp(a, bot()); }
Formula top() { return imp(bot(), bot()); }

int compare(Formula a, Formula b) {
  if (a == b) return 0;
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Bottom: return 0;
    case Kind::Atom: return a.name().compare(b.name()) < 0 ? -1 : 1;
    case Kind::Box: return compare(a.inner(), b.inner());
    default:
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
  }
}

void collect_atoms(Formula f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Bottom: return;
    case Kind::Atom: out.insert(f.name()); return;
    case Kind::Box: collect_atoms(f.inner(), out); return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

std::set<std::string> atoms(Formula f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace isl
