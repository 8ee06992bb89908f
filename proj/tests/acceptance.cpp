// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and corpus sizes are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"

namespace {

using namespace isl;
using Clock = std::chrono::steady_clock;

constexpr double kAxiomSeconds = 1.0;
constexpr std::size_t kMaxCountermodelWorlds = 5;
constexpr std::size_t kCorpusSize = 1000;
constexpr unsigned kCorpusWeight = 12;
constexpr unsigned kCorpusAtoms = 2;
constexpr unsigned kSoundnessWorlds = 3;
constexpr double kSoundnessSeconds = 600.0;
constexpr std::size_t kMinPipeline = 200;
constexpr std::size_t kStructuralProofs = 500;
constexpr std::size_t kMinInterpolants = 100;
constexpr int kShuffledPriorities = 5;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int n, const std::string& name, const std::function<Outcome()>& run) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::vector<Sequent> corpus() {
  FuzzConfig c;
  c.seed = 1;
  c.count = kCorpusSize;
  c.max_weight = kCorpusWeight;
  c.atoms = kCorpusAtoms;
  return fuzz_corpus(c);
}

Outcome axiom_suite() {
  Outcome o;
  std::ostringstream d;
  double worst = 0;
  for (const char* s : {"=> ([]p -> p) -> p", "=> p -> []p", "=> []([]p -> p) -> []p",
                        "=> [](p -> q) -> ([]p -> []q)", "=> []p -> [][]p"}) {
    auto t = Clock::now();
    bool ok = decide(parse_sequent(s));
    double secs = seconds_since(t);
    worst = std::max(worst, secs);
    if (!ok || secs >= kAxiomSeconds) {
      o.pass = false;
      d << "[" << s << (ok ? " slow" : " not provable") << "] ";
    }
  }
  d << "5 axioms, slowest " << worst << "s";
  o.detail = d.str();
  return o;
}

Outcome non_theorems() {
  Outcome o;
  std::ostringstream d;
  const char* sep = "";
  for (const char* s : {"=> []p -> p", "=> p | (p -> false)", "=> []false", "=> ((p -> q) -> p) -> p"}) {
    Sequent seq = parse_sequent(s);
    SearchTree t = search(seq, {.full = true});
    if (t.positive()) {
      o.pass = false;
      d << sep << s << " PROVABLE";
      sep = "; ";
      continue;
    }
    Countermodel cm = countermodel(t);
    bool valid = validate_model(cm.model).empty();
    bool refuted = valid && test::naive_refutes_at(cm.model, cm.world, seq);
    bool small = cm.model.size() <= kMaxCountermodelWorlds;
    if (!valid || !refuted || !small) o.pass = false;
    d << sep << s << ": " << cm.model.size() << (cm.model.size() == 1 ? " world" : " worlds")
      << (valid ? "" : " INVALID") << (refuted ? "" : " NOT-REFUTED");
    sep = "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome termination(const std::vector<Sequent>& sequents) {
  std::size_t edges = 0, violations = 0;
  for (const Sequent& s : sequents) {
    SearchTree t = search(s, {.full = true});
    edges += edge_count(t);
    violations += termination_violations(t).size();
  }
  return {violations == 0, std::to_string(sequents.size()) + " searches, " + std::to_string(edges) + " edges, " +
                               std::to_string(violations) + " violations"};
}

Outcome soundness(const std::vector<Sequent>& sequents) {
  auto t = Clock::now();
  std::vector<std::string> names = atom_names(kCorpusAtoms);
  ModelPool pool(std::set<std::string>(names.begin(), names.end()), kSoundnessWorlds);
  std::size_t pos = 0, neg = 0, bad = 0;
  std::string first;
  for (const Sequent& s : sequents) {
    if (decide(s)) {
      ++pos;
      if (pool.refute(s)) {
        ++bad;
        if (first.empty()) first = render(s);
      }
    } else {
      ++neg;
      Countermodel cm = countermodel(s);
      if (!validate_model(cm.model).empty() || !test::naive_refutes_at(cm.model, cm.world, s)) {
        ++bad;
        if (first.empty()) first = render(s);
      }
    }
  }
  double secs = seconds_since(t);
  std::ostringstream d;
  d << pos << " provable vs " << pool.size() << " models, " << neg << " countermodels, " << bad << " discrepancies, "
    << secs << "s";
  if (!first.empty()) d << ", first: " << first;
  return {bad == 0 && secs < kSoundnessSeconds, d.str()};
}

struct PipelineRun {
  std::size_t ok = 0, failed = 0, cuts = 0, steps = 0, inner = 0;
  std::string first;
};

void run_pipeline(const G3Ptr& g, const Sequent& s, PipelineRun& r) {
  r.cuts += count_cuts(*g);
  bool ok = static_cast<bool>(check_g3_proof(*g, Profile::WithCut));
  if (ok) {
    CutElimResult e = eliminate_cuts(g);
    r.steps += e.steps.size();
    for (const CutStep& st : e.steps) r.inner += st.inner_cuts;
    ok = e.proof->cut_free && check_g3_proof(*e.proof, Profile::Core) && e.proof->seq.formulas() == s;
  }
  if (ok) {
    ++r.ok;
  } else {
    ++r.failed;
    if (r.first.empty()) r.first = render(s);
  }
}

Outcome pipeline(const std::vector<Sequent>& sequents) {
  PipelineRun plain, injected;
  for (std::size_t i = 0; i < sequents.size(); ++i) {
    const Sequent& s = sequents[i];
    SearchTree t = search(s);
    if (!t.positive()) continue;
    G3Ptr g = g4_to_g3(*extract_proof(t));
    try {
      run_pipeline(g, s, plain);
    } catch (const ContractError& e) {
      ++plain.failed;
      if (plain.first.empty()) plain.first = render(s) + ": " + e.what();
    }
    try {
      run_pipeline(inject_cuts(eliminate_cuts(g).proof, i, 3), s, injected);
    } catch (const ContractError& e) {
      ++injected.failed;
      if (injected.first.empty()) injected.first = render(s) + ": " + e.what();
    }
  }
  std::ostringstream d;
  d << plain.ok << " translated proofs (" << plain.cuts << " cuts, " << plain.steps << " reductions), " << injected.ok
    << " with injected cuts (" << injected.cuts << " cuts, " << injected.steps << " reductions, " << injected.inner
    << " inner cuts), " << plain.failed + injected.failed << " failures";
  if (!plain.first.empty()) d << ", first: " << plain.first;
  if (!injected.first.empty()) d << ", first injected: " << injected.first;
  return {plain.failed == 0 && injected.failed == 0 && plain.ok >= kMinPipeline, d.str()};
}

// Every applicable transformation on one proof; returns the first problem.
std::string transform_all(const G3Ptr& p, std::mt19937_64& rng, std::size_t& applied) {
  unsigned h = height(*p);
  auto check = [&](const G3Ptr& q, const char* what) -> std::string {
    ++applied;
    CheckResult r = check_g3_proof(*q, Profile::Core);
    if (!r) return std::string(what) + ": " + r.message;
    if (height(*q) > h) return std::string(what) + ": height grew";
    return "";
  };
  std::vector<std::string> errs;
  auto run = [&](const G3Ptr& q, const char* what) {
    std::string e = check(q, what);
    if (!e.empty()) errs.push_back(e);
  };
  static const char* kWeak[] = {"r", "[]r", "p -> []q", "[](p & q)"};
  run(weaken(p, Occ{fresh_id(), parse_formula(kWeak[rng() % 4])}), "weaken");
  for (const Occ& x : p->seq.ante) {
    Occ dup{fresh_id(), x.f};
    run(contract(weaken(p, dup), x.id, dup.id), "contract");
    if (x.f.is_and()) run(invert(p, Inversion::LAnd, x.id), "invert L&");
    if (x.f.is_or()) {
      run(invert(p, Inversion::LOr0, x.id), "invert Lv0");
      run(invert(p, Inversion::LOr1, x.id), "invert Lv1");
    }
    if (x.f.is_imp()) run(invert(p, Inversion::LImp, x.id), "invert L->");
  }
  if (p->seq.succ) {
    Formula s = *p->seq.succ;
    if (s.is_and()) {
      run(invert(p, Inversion::RAnd0), "invert R&0");
      run(invert(p, Inversion::RAnd1), "invert R&1");
    }
    if (s.is_imp()) run(invert(p, Inversion::RImp), "invert R->");
    if (s.is_bottom()) run(falsum(p, parse_formula("[]q")), "falsum");
  }
  return errs.empty() ? "" : errs.front();
}

std::string worked_example() {
  Formula phi = parse_formula("p -> p");
  Formula bb = box(box(phi)), b = box(phi);
  G3Ptr d = test::minimal_segment(phi);
  for (Formula chi : {parse_formula("[]q"), parse_formula("q")}) {
    G3Ptr w = strong_weaken_down(d, chi);
    Multiset top{box(chi), chi, bb, b, b};
    if (!chi.is_box()) top.push_back(chi);
    bool ok = check_g3_proof(*w, Profile::Core) && w->seq.formulas() == Sequent({box(chi)}, bb) &&
              node_at(*w, {0}).seq.formulas() == Sequent({box(chi), chi, bb}, b) &&
              node_at(*w, {0, 0}).seq.formulas() == Sequent(top, phi) && height(*w) == height(*d);
    if (!ok) return "worked example differs for chi = " + render(chi);
  }
  return "";
}

Outcome structural() {
  std::vector<G3Ptr> proofs = test::cut_free_proofs(kStructuralProofs, 1);
  std::mt19937_64 rng(1);
  std::size_t applied = 0, bad = 0;
  std::string first;
  for (const G3Ptr& p : proofs) {
    std::string e = transform_all(p, rng, applied);
    if (!e.empty()) {
      ++bad;
      if (first.empty()) first = render(p->seq.formulas()) + ": " + e;
    }
  }
  std::string example = worked_example();
  std::ostringstream d;
  d << proofs.size() << " proofs, " << applied << " transformations, " << bad << " failures, worked example "
    << (example.empty() ? "reproduced" : example);
  if (!first.empty()) d << ", first: " << first;
  return {proofs.size() >= kStructuralProofs && bad == 0 && example.empty(), d.str()};
}

Outcome interpolation(const std::vector<Sequent>& sequents) {
  std::size_t ok = 0, bad = 0;
  std::string first;
  for (const Sequent& s : sequents) {
    if (s.ante.empty()) continue;
    SearchTree t = search(s);
    if (!t.positive()) continue;
    G3Ptr p = eliminate_cuts(g4_to_g3(*extract_proof(t))).proof;
    std::size_t n = s.ante.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      SplitSequent split;
      split.succ = s.succ;
      for (std::size_t k = 0; k < n; ++k) (mask >> k & 1 ? split.left : split.right).push_back(s.ante[k]);
      try {
        Formula i = interpolant_candidate(*p, split);
        if (is_interpolant(i, split)) {
          ++ok;
          continue;
        }
      } catch (const InterpolationError&) {
      }
      ++bad;
      if (first.empty()) first = render(split);
    }
  }
  std::ostringstream d;
  d << ok << " split sequents interpolated, " << bad << " failures";
  if (!first.empty()) d << ", first: " << first;
  return {ok >= kMinInterpolants && bad == 0, d.str()};
}

Outcome equivalence(const std::vector<Sequent>& sequents) {
  std::size_t agree = 0, disagree = 0;
  std::string first;
  for (const Sequent& s : sequents) {
    bool d = decide(s);
    bool pipeline_ok = false;
    SearchTree t = search(s, {.full = !d});
    if (t.positive()) {
      G3Ptr g = eliminate_cuts(g4_to_g3(*extract_proof(t))).proof;
      pipeline_ok = g->cut_free && check_g3_proof(*g, Profile::Core) && g->seq.formulas() == s;
    } else {
      // No proof to translate; a refuting countermodel rules out a G3 proof
      // by soundness.
      Countermodel cm = countermodel(t);
      pipeline_ok = !(validate_model(cm.model).empty() && test::naive_refutes_at(cm.model, cm.world, s));
    }
    if (d == pipeline_ok) {
      ++agree;
    } else {
      ++disagree;
      if (first.empty()) first = render(s);
    }
  }
  std::ostringstream d;
  d << agree << " agree, " << disagree << " disagree";
  if (!first.empty()) d << ", first: " << first;
  return {disagree == 0, d.str()};
}

Outcome marking(const std::vector<Sequent>& sequents) {
  std::vector<bool> base;
  for (const Sequent& s : sequents) base.push_back(decide(s));
  std::mt19937_64 rng(2024);
  std::size_t changed = 0;
  std::ostringstream orders;
  for (int k = 0; k < kShuffledPriorities; ++k) {
    Priority prio = default_priority();
    std::shuffle(prio.begin(), prio.end(), rng);
    for (std::size_t i = 0; i < sequents.size(); ++i)
      if (decide(sequents[i], prio) != base[i]) ++changed;
  }
  return {changed == 0, std::to_string(kShuffledPriorities) + " shuffled priorities x " +
                            std::to_string(sequents.size()) + " sequents, " + std::to_string(changed) +
                            " verdicts changed"};
}

}  // namespace

int main() {
  std::vector<Sequent> c = corpus();
  report(1, "axiom suite", axiom_suite);
  report(2, "non-theorems", non_theorems);
  report(3, "termination witness", [&] { return termination(c); });
  report(4, "soundness cross-check", [&] { return soundness(c); });
  report(5, "cut-elimination pipeline", [&] { return pipeline(c); });
  report(6, "structural lemmas", structural);
  report(7, "interpolation", [&] { return interpolation(c); });
  report(8, "equivalence", [&] { return equivalence(c); });
  report(9, "marking robustness", [&] { return marking(c); });
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
