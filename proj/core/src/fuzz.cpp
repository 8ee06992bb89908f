#include "isl/fuzz.hpp"

#include <sstream>
#include <stdexcept>

#include "isl/cut_elim.hpp"
#include "isl/g3_ops.hpp"
#include "isl/parser.hpp"
#include "isl/translate.hpp"

namespace isl {

void validate(const FuzzConfig& c) {
  if (c.count == 0) throw std::invalid_argument("count must be at least 1");
  if (c.max_weight == 0) throw std::invalid_argument("max-weight must be at least 1");
  if (c.atoms == 0) throw std::invalid_argument("atoms must be at least 1");
}

std::vector<std::string> atom_names(unsigned n) {
  static const char* kFirst[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(i < 8 ? kFirst[i] : "a" + std::to_string(i));
  return out;
}

SequentGenerator::SequentGenerator(const FuzzConfig& c) : cfg_(c), rng_(c.seed) {
  validate(c);
  for (const std::string& a : atom_names(c.atoms)) atoms_.push_back(atom(a));
}

// Plain modulo keeps the stream identical across standard libraries.
unsigned SequentGenerator::pick(unsigned lo, unsigned hi) {
  return lo + static_cast<unsigned>(rng_() % (static_cast<std::uint64_t>(hi) - lo + 1));
}

Formula SequentGenerator::formula(unsigned budget) {
  auto leaf = [&] { return pick(0, 9) == 0 ? bot() : atoms_[pick(0, static_cast<unsigned>(atoms_.size()) - 1)]; };
  if (budget <= 1) return leaf();
  // Constructor weights out of 20: leaf 3, box 4, and 3, or 3, imp 7.
  unsigned r = pick(0, 19);
  if (r < 3) return leaf();
  if (r < 7) return box(formula(budget - 1));
  unsigned extra = r < 10 ? 2 : 1;
  if (budget < extra + 2) return box(formula(budget - 1));
  unsigned left = pick(1, budget - extra - 1);
  Formula a = formula(left);
  Formula b = formula(budget - extra - a.weight());
  if (r < 10) return conj(a, b);
  if (r < 13) return disj(a, b);
  return imp(a, b);
}

Sequent SequentGenerator::next() {
  unsigned total = pick(1, cfg_.max_weight);
  unsigned k = pick(0, std::min(2u, total - 1));
  Multiset ante;
  unsigned used = 0;
  for (unsigned i = 0; i < k; ++i) {
    unsigned room = total - used - (k - i);  // leave 1 per later formula and 1 for the succedent
    Formula f = formula(pick(1, room));
    used += f.weight();
    ante.push_back(f);
  }
  return Sequent(std::move(ante), formula(total - used));
}

std::vector<Sequent> fuzz_corpus(const FuzzConfig& c) {
  SequentGenerator g(c);
  std::vector<Sequent> out;
  for (std::size_t i = 0; i < c.count; ++i) out.push_back(g.next());
  return out;
}

ModelPool::ModelPool(const std::set<std::string>& atoms, unsigned max_worlds) {
  for_each_model(atoms, max_worlds, [&](const KripkeModel& m) {
    evals_.emplace_back(m);
    return true;
  });
}

std::optional<std::pair<std::size_t, std::size_t>> ModelPool::refute(const Sequent& s) {
  for (std::size_t i = 0; i < evals_.size(); ++i)
    if (auto w = evals_[i].refuting_world(s)) return std::make_pair(i, *w);
  return std::nullopt;
}

namespace {

bool same_endsequent(const G3Node& p, const Sequent& s) {
  Sequent have = p.seq.formulas();
  return sorted(have.ante) == sorted(s.ante) && have.succ == s.succ;
}

void fail(FuzzCase& c, const std::string& msg) {
  if (c.ok) c.error = msg;
  c.ok = false;
}

void check_positive(FuzzCase& c, const SearchTree& t, ModelPool& pool) {
  G4Ptr g4 = extract_proof(t);
  c.g4_size = proof_size(*g4);
  if (CheckResult r = check_g4_proof(*g4); !r) return fail(c, "G4 proof rejected: " + r.message);
  G3Ptr g3 = g4_to_g3(*g4);
  c.cuts = count_cuts(*g3);
  if (CheckResult r = check_g3_proof(*g3, Profile::WithCut); !r) return fail(c, "translated proof rejected: " + r.message);
  CutElimResult e = eliminate_cuts(g3);
  c.reductions = e.steps.size();
  if (!e.proof->cut_free) return fail(c, "cuts remain after elimination");
  if (CheckResult r = check_g3_proof(*e.proof, Profile::Core); !r) return fail(c, "cut-free proof rejected: " + r.message);
  if (!same_endsequent(*e.proof, c.sequent)) return fail(c, "cut elimination changed the endsequent");
  if (auto m = pool.refute(c.sequent))
    fail(c, "provable but refuted by model " + std::to_string(m->first) + " at world " + std::to_string(m->second));
}

void check_negative(FuzzCase& c) {
  SearchTree full = search(c.sequent, {.full = true});
  Countermodel cm = countermodel(full);
  c.worlds = cm.model.size();
  if (auto v = validate_model(cm.model); !v.empty()) return fail(c, "countermodel invalid: " + v.front().message());
  ModelEvaluator ev(cm.model);
  Sequent s = c.sequent;
  bool ante = true;
  for (Formula f : s.ante) ante = ante && ev.forces(cm.world, f);
  bool succ = s.succ && ev.forces(cm.world, *s.succ);
  if (!ante || succ) fail(c, "countermodel does not refute at " + cm.world);
}

}  // namespace

FuzzCase cross_check(const Sequent& s, ModelPool& pool) {
  FuzzCase c;
  c.sequent = s;
  try {
    SearchTree t = search(s);
    c.provable = t.positive();
    if (c.provable) check_positive(c, t, pool);
    else check_negative(c);
  } catch (const std::exception& e) {
    fail(c, std::string("exception: ") + e.what());
  }
  return c;
}

namespace {

std::vector<Path> all_paths(const G3Node& n) {
  std::vector<Path> out{{}};
  for (std::size_t i = 0; i < n.premises.size(); ++i)
    for (Path q : all_paths(*n.premises[i])) {
      q.insert(q.begin(), i);
      out.push_back(std::move(q));
    }
  return out;
}

G3Ptr cut_above(const G3Ptr& q, bool on_succ, std::size_t which) {
  const G3Seq& s = q->seq;
  if (on_succ || s.ante.empty()) {
    if (!s.succ) return q;
    Occ a{fresh_id(), *s.succ};
    G3Ptr right = identity(G3Seq{{a}, s.succ}, a.id);
    return make_g3(s, RuleG3::Cut, {q, right}, {.cut = a.f, .cut_id = a.id});
  }
  const Occ& x = s.ante[which % s.ante.size()];
  Occ y{fresh_id(), x.f};
  G3Ptr left = identity(G3Seq{{x}, x.f}, x.id);
  G3Ptr right = rename_ids(refresh_ids(q, [&] {
                             IdMap m;
                             for (const Occ& o : s.ante) m[o.id] = o.id;
                             return m;
                           }()),
                           {{x.id, y.id}});
  return make_g3(s, RuleG3::Cut, {left, right}, {.cut = x.f, .cut_id = y.id});
}

}  // namespace

G3Ptr inject_cuts(const G3Ptr& p, std::uint64_t seed, unsigned count) {
  std::mt19937_64 rng(seed);
  G3Ptr out = p;
  for (unsigned i = 0; i < count; ++i) {
    std::vector<Path> paths = all_paths(*out);
    const Path& at = paths[rng() % paths.size()];
    out = replace_at(out, at, cut_above(subproof(out, at), rng() % 2 == 0, rng()));
  }
  return out;
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  validate(cfg);
  std::vector<std::string> names = atom_names(cfg.atoms);
  ModelPool pool(std::set<std::string>(names.begin(), names.end()), cfg.max_model_worlds);
  FuzzReport r;
  std::vector<Sequent> corpus = fuzz_corpus(cfg);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    FuzzCase c = cross_check(corpus[i], pool);
    c.index = i;
    (c.provable ? r.provable : r.refuted) += 1;
    if (!c.ok) ++r.failures;
    r.cases.push_back(std::move(c));
  }
  return r;
}

std::string FuzzReport::text() const {
  std::ostringstream os;
  for (const FuzzCase& c : cases) {
    os << '#' << c.index << ' ' << (c.provable ? "provable" : "refuted") << ' ' << render(c.sequent);
    if (c.provable) os << " g4_size=" << c.g4_size << " cuts=" << c.cuts << " reductions=" << c.reductions;
    else os << " worlds=" << c.worlds;
    if (!c.ok) os << " FAIL: " << c.error;
    os << '\n';
  }
  os << "total=" << cases.size() << " provable=" << provable << " refuted=" << refuted << " failures=" << failures
     << '\n';
  return os.str();
}

}  // namespace isl
