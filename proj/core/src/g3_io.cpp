#include <functional>
#include <map>
#include <sstream>

#include "isl/g3.hpp"
#include "isl/parser.hpp"

namespace isl {

namespace {

class Canon {
 public:
  std::uint64_t operator()(OccId id) {
    auto [it, inserted] = map_.emplace(id, map_.size() + 1);
    return it->second;
  }

 private:
  std::map<OccId, std::uint64_t> map_;
};

nlohmann::json to_json(const G3Node& p, Canon& c) {
  nlohmann::json j;
  j["calculus"] = "g3";
  j["rule"] = std::string(rule_name(p.rule));
  j["sequent"] = render(p.seq.formulas());
  j["ante"] = nlohmann::json::array();
  for (const Occ& o : p.seq.ante) j["ante"].push_back({{"id", c(o.id)}, {"formula", render(o.f)}});
  j["succ"] = p.seq.succ ? nlohmann::json(render(*p.seq.succ)) : nlohmann::json(nullptr);
  if (p.principal) j["principal"] = c(*p.principal);
  if (p.diag) j["diag"] = c(*p.diag);
  if (p.cut) j["cut"] = render(*p.cut);
  if (p.cut_id) j["cut_id"] = c(*p.cut_id);
  if (!p.links.empty()) {
    j["links"] = nlohmann::json::array();
    for (auto& [a, b] : p.links) j["links"].push_back({c(a), c(b)});
  }
  j["premises"] = nlohmann::json::array();
  for (const G3Ptr& q : p.premises) j["premises"].push_back(to_json(*q, c));
  return j;
}

class Loader {
 public:
  G3Ptr load(const nlohmann::json& j) {
    if (!j.is_object()) throw std::runtime_error("proof node must be an object");
    if (j.contains("calculus") && j.at("calculus") != "g3") throw std::runtime_error("not a g3 proof");
    auto rule = rule_g3_from_name(j.at("rule").get<std::string>());
    if (!rule) throw std::runtime_error("unknown rule " + j.at("rule").dump());
    G3Seq s;
    for (const auto& o : j.at("ante")) s.ante.push_back({id(o.at("id")), parse_formula(o.at("formula").get<std::string>())});
    if (!j.at("succ").is_null()) s.succ = parse_formula(j.at("succ").get<std::string>());
    G3Extra x;
    if (j.contains("principal")) x.principal = id(j.at("principal"));
    if (j.contains("diag")) x.diag = id(j.at("diag"));
    if (j.contains("cut")) x.cut = parse_formula(j.at("cut").get<std::string>());
    if (j.contains("cut_id")) x.cut_id = id(j.at("cut_id"));
    if (j.contains("links"))
      for (const auto& l : j.at("links")) x.links.emplace_back(id(l.at(0)), id(l.at(1)));
    std::vector<G3Ptr> prem;
    for (const auto& q : j.at("premises")) prem.push_back(load(q));
    return make_g3(std::move(s), *rule, std::move(prem), std::move(x));
  }

 private:
  OccId id(const nlohmann::json& v) {
    auto [it, inserted] = map_.emplace(v.get<std::uint64_t>(), 0);
    if (inserted) it->second = fresh_id();
    return it->second;
  }

  std::map<std::uint64_t, OccId> map_;
};

}  // namespace

nlohmann::json g3_to_json(const G3Node& p) {
  Canon c;
  return to_json(p, c);
}

G3Ptr g3_from_json(const nlohmann::json& j) {
  try {
    return Loader().load(j);
  } catch (const ParseError& e) {
    throw std::runtime_error(std::string("proof file: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("proof file: ") + e.what());
  }
}

std::string g3_to_dot(const G3Node& p) {
  std::ostringstream os;
  os << "digraph proof {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  int next = 0;
  std::function<int(const G3Node&)> emit = [&](const G3Node& n) {
    int id = next++;
    std::string label = n.cut ? "Cut " + render(*n.cut) : std::string(rule_name(n.rule));
    os << "  n" << id << " [label=\"" << dot_escape(render(n.seq.formulas())) << "\\n" << dot_escape(label) << "\"];\n";
    for (const G3Ptr& q : n.premises) {
      int c = emit(*q);
      os << "  n" << c << " -> n" << id << ";\n";
    }
    return id;
  };
  emit(p);
  os << "}\n";
  return os.str();
}

}  // namespace isl
