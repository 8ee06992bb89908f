// islkit: command-line front end for the isl library.
//
// Exit codes: 0 success or provable, 1 not provable, 2 usage, IO or parse
// error, 3 internal discrepancy.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isl/isl.hpp"

namespace {

using isl::Formula;
using isl::Sequent;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNotProvable = 1;
constexpr int kUsage = 2;
constexpr int kDiscrepancy = 3;

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void discrepancy(const std::string& what) { throw Exit{kDiscrepancy, "internal discrepancy: " + what}; }

template <class F>
auto parse_or_exit(const std::string& text, F parse) {
  try {
    return parse(text);
  } catch (const isl::ParseError& e) {
    throw Exit{kUsage, isl::format_diagnostic(text, e)};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Exit{kUsage, "cannot write " + path};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

isl::Profile profile_or_exit(const std::string& name) {
  auto p = isl::profile_from_name(name);
  if (!p || *p == isl::Profile::WithCut) throw Exit{kUsage, "unknown calculus profile: " + name};
  return *p;
}

// Serializes a G3 proof and checks that the file reads back to a valid
// proof of the same endsequent.
json closed_g3(const isl::G3Node& p, isl::Profile profile) {
  json j = isl::g3_to_json(p);
  isl::G3Ptr back = isl::g3_from_json(j);
  if (auto r = isl::check_g3_proof(*back, profile); !r) discrepancy("emitted proof rejected: " + r.message);
  if (back->seq.formulas() != p.seq.formulas()) discrepancy("emitted proof changed its endsequent");
  return j;
}

// ── prove ────────────────────────────────────────────────────────────────

struct ProveOpts {
  std::string sequent;
  std::string proof, countermodel, dot, profile, emit = "g4";
};

int cmd_prove(const ProveOpts& o) {
  Sequent s = parse_or_exit(o.sequent, isl::parse_sequent);
  std::string emit = o.profile.empty() ? o.emit : "g3";
  isl::Profile profile = profile_or_exit(o.profile.empty() ? "core" : o.profile);

  isl::SearchTree t = isl::search(s);
  if (t.positive()) {
    std::cout << "provable\n";
    if (o.proof.empty() && o.dot.empty()) return kOk;
    isl::G4Ptr g4 = isl::extract_proof(t);
    if (auto r = isl::check_g4_proof(*g4); !r) discrepancy("extracted proof rejected: " + r.message);
    std::string text, dot;
    if (emit == "g4") {
      json j = isl::to_json(*g4);
      if (auto r = isl::check_g4_proof(*isl::g4_from_json(j)); !r) discrepancy("emitted proof rejected: " + r.message);
      text = dump(j);
      dot = isl::to_dot(*g4);
    } else if (emit == "g3_raw") {
      isl::G3Ptr g3 = isl::g4_to_g3(*g4);
      text = dump(closed_g3(*g3, isl::Profile::WithCut));
      dot = isl::g3_to_dot(*g3);
    } else {
      isl::G3Ptr g3 = isl::to_profile(isl::eliminate_cuts(isl::g4_to_g3(*g4)).proof, profile);
      text = dump(closed_g3(*g3, profile));
      dot = isl::g3_to_dot(*g3);
    }
    if (!o.proof.empty()) write_file(o.proof, text);
    if (!o.dot.empty()) write_file(o.dot, dot);
    return kOk;
  }

  std::cout << "not provable\n";
  if (o.countermodel.empty() && o.dot.empty()) return kNotProvable;
  isl::Countermodel cm = isl::countermodel(s);
  if (auto v = isl::validate_model(cm.model); !v.empty()) discrepancy("countermodel invalid: " + v.front().message());
  if (!isl::ModelEvaluator(cm.model).refuting_world(s)) discrepancy("countermodel does not refute the sequent");
  std::string dot = isl::model_to_dot(cm.model, cm.world);
  if (!o.countermodel.empty()) {
    write_file(o.countermodel, dump(isl::model_to_json(cm.model, cm.world)));
    if (o.dot.empty()) write_file(std::filesystem::path(o.countermodel).replace_extension(".dot").string(), dot);
  }
  if (!o.dot.empty()) write_file(o.dot, dot);
  std::cout << "countermodel: " << cm.model.size() << (cm.model.size() == 1 ? " world" : " worlds") << ", refuted at " << cm.world << '\n';
  return kNotProvable;
}

// ── check-model ──────────────────────────────────────────────────────────

int cmd_check_model(const std::string& file, const std::string& text) {
  Sequent s = parse_or_exit(text, isl::parse_sequent);
  isl::KripkeModel m;
  try {
    m = isl::model_from_json(read_json(file));
  } catch (const std::runtime_error& e) {
    throw Exit{kUsage, file + ": " + e.what()};
  }
  if (auto v = isl::validate_model(m); !v.empty()) {
    std::cout << "invalid model: " << v.size() << " violation(s)\n";
    for (const isl::Violation& x : v) std::cout << "  " << x.message() << '\n';
    return kNotProvable;
  }
  if (auto w = isl::refutes(m, s)) {
    std::cout << "refuted at " << *w << '\n';
    return kOk;
  }
  std::cout << "valid in model\n";
  return kOk;
}

// ── cut-elim ─────────────────────────────────────────────────────────────

int cmd_cut_elim(const std::string& in, const std::string& out, const std::string& profile_name) {
  isl::Profile profile = profile_or_exit(profile_name.empty() ? "core" : profile_name);
  isl::G3Ptr p;
  try {
    p = isl::g3_from_json(read_json(in));
  } catch (const Exit&) {
    throw;
  } catch (const std::exception& e) {
    throw Exit{kUsage, in + ": " + e.what()};
  }
  if (auto r = isl::check_g3_proof(*p, isl::Profile::WithCut); !r)
    throw Exit{kUsage, in + ": invalid proof: " + r.message + (r.path.empty() ? "" : " (at " + r.path + ")")};

  isl::CutElimResult e;
  try {
    e = isl::eliminate_cuts(p);
  } catch (const isl::ContractError& err) {
    discrepancy(err.what());
  }
  if (!e.proof->cut_free) discrepancy("cuts remain after elimination");
  std::string text = dump(closed_g3(*isl::to_profile(e.proof, profile), profile));

  // With the proof on stdout the report moves to stderr.
  std::ostream& report = out.empty() ? std::cerr : std::cout;
  report << "reductions: " << e.steps.size() << '\n';
  for (std::size_t i = 0; i < e.steps.size(); ++i) {
    const isl::CutStep& st = e.steps[i];
    std::string path;
    for (std::size_t k : st.path) path += (path.empty() ? "" : ".") + std::to_string(k);
    report << "  " << i + 1 << ": at [" << path << "] dwl=(" << st.measure.degree << ',' << st.measure.width << ','
           << st.measure.level << ") inner_cuts=" << st.inner_cuts << '\n';
  }
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return kOk;
}

// ── interpolate ──────────────────────────────────────────────────────────

int cmd_interpolate(const std::string& text) {
  isl::SplitSequent split = parse_or_exit(text, isl::parse_split);
  if (!isl::decide(split.whole())) {
    std::cout << "not provable\n";
    return kNotProvable;
  }
  try {
    std::cout << isl::render(isl::interpolate(split)) << '\n';
  } catch (const isl::InterpolationError& e) {
    discrepancy(e.what());
  }
  return kOk;
}

// ── fuzz ─────────────────────────────────────────────────────────────────

int cmd_fuzz(const isl::FuzzConfig& cfg) {
  try {
    isl::validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  isl::FuzzReport r = isl::run_fuzz(cfg);
  std::cout << r.text();
  return r.failures == 0 ? kOk : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof search, countermodels, cut elimination and interpolation for iSL"};
  app.require_subcommand(1);

  ProveOpts prove;
  auto* p = app.add_subcommand("prove", "decide a sequent");
  p->add_option("sequent", prove.sequent, "sequent, e.g. \"[]p => [][]p\"")->required();
  p->add_option("--proof", prove.proof, "write the proof as JSON");
  p->add_option("--countermodel", prove.countermodel, "write the countermodel as JSON (and DOT next to it)");
  p->add_option("--dot", prove.dot, "write the proof or countermodel as DOT");
  p->add_option("--calculus-profile", prove.profile, "emit a cut-free G3 proof in this profile")
      ->check(CLI::IsMember({"core", "b_variant", "glc_variant"}));
  p->add_option("--emit", prove.emit, "g4, g3 (cut-free) or g3_raw (translation before cut elimination)")
      ->check(CLI::IsMember({"g4", "g3", "g3_raw"}));

  std::string model_file, model_seq;
  auto* cm = app.add_subcommand("check-model", "validate a Kripke model and evaluate a sequent in it");
  cm->add_option("model", model_file, "model JSON")->required();
  cm->add_option("sequent", model_seq, "sequent")->required();

  std::string ce_in, ce_out, ce_profile;
  auto* ce = app.add_subcommand("cut-elim", "eliminate cuts from a G3 proof");
  ce->add_option("input", ce_in, "G3 proof JSON")->required();
  ce->add_option("output", ce_out, "output file (default: stdout)");
  ce->add_option("--calculus-profile", ce_profile, "profile of the output proof")
      ->check(CLI::IsMember({"core", "b_variant", "glc_variant"}));

  std::string split;
  auto* ip = app.add_subcommand("interpolate", "interpolant for \"G1 ; G2 => D\"");
  ip->add_option("sequent", split, "split sequent")->required();

  isl::FuzzConfig fz;
  auto* f = app.add_subcommand("fuzz", "cross-check random sequents");
  f->add_option("--seed", fz.seed, "generator seed");
  f->add_option("--count", fz.count, "number of sequents");
  f->add_option("--max-weight", fz.max_weight, "maximum sequent weight");
  f->add_option("--atoms", fz.atoms, "number of atoms");
  f->add_option("--max-model-worlds", fz.max_model_worlds, "largest enumerated model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*p) return cmd_prove(prove);
    if (*cm) return cmd_check_model(model_file, model_seq);
    if (*ce) return cmd_cut_elim(ce_in, ce_out, ce_profile);
    if (*ip) return cmd_interpolate(split);
    if (*f) return cmd_fuzz(fz);
  } catch (const Exit& e) {
    std::cerr << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kDiscrepancy;
  }
  return kUsage;
}
