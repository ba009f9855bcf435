#include "pact/cli.hpp"

#include "pact/convolution_algebra.hpp"
#include "pact/envelope.hpp"
#include "pact/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace pact {

using nlohmann::ordered_json;

namespace {

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& allowed, const std::string& where)
{
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key))
      throw ParseError("unknown field \"" + key + "\" in " + where);
}

std::string location(const std::string& text, std::size_t byte)
{
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

template <typename T>
T field(const nlohmann::json& obj, const char* key, const std::string& where)
{
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("field \"" + std::string(key) + "\" in " + where + " is missing or has the wrong type");
  }
}

std::size_t natural(const nlohmann::json& obj, const char* key, const std::string& where)
{
  const long long v = field<long long>(obj, key, where);
  if (v < 0)
    throw ParseError("field \"" + std::string(key) + "\" in " + where + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

ordered_json clopen_json(const ClopenSet& s)
{
  ordered_json out = ordered_json::array();
  for (const auto& w : s.words())
    out.push_back(w);
  return out;
}

ordered_json classes_json(const std::vector<std::vector<Unit>>& classes)
{
  ordered_json out = ordered_json::array();
  for (const auto& cls : classes) {
    ordered_json c = ordered_json::array();
    for (const auto& u : cls)
      c.push_back(ordered_json::array({u.t, u.cell}));
    out.push_back(std::move(c));
  }
  return out;
}

void emit(std::ostream& out, const ordered_json& j)
{
  out << j.dump() << "\n";
}

struct Context
{
  const SystemDefinition& system;
  const Action& action;
  const CommandOptions& opt;
  std::ostream& out;
  std::ostream& err;

  int bound(int fallback) const { return opt.bound.value_or(system.bound.value_or(fallback)); }
  std::size_t depth(std::size_t fallback) const { return opt.depth.value_or(system.depth.value_or(fallback)); }
  std::optional<std::size_t> level() const { return opt.level; }
};

int cmd_validate(const Context& c)
{
  const int bound = c.bound(4);
  ordered_json report{{"ok", true}, {"bound", bound}};
  std::vector<std::size_t> levels;
  if (c.action.is_generated()) {
    const std::size_t top = c.level().value_or(3);
    for (std::size_t k = 0; k <= top; ++k)
      levels.push_back(k);
  } else {
    levels.push_back(0);
  }
  for (std::size_t k : levels) {
    const ZPartialAction a = c.action.at_level(c.action.is_generated() ? std::optional<std::size_t>(k) : std::nullopt);
    const AxiomReport r = axioms_check(ExplicitFamily::generated_by(a, bound));
    if (!r.ok()) {
      const AxiomViolation& v = r.violations.front();
      report["ok"] = false;
      report["violation"] = ordered_json{{"axiom", v.axiom}, {"t", v.t}, {"s", v.s}, {"detail", v.detail}};
      if (c.action.is_generated())
        report["level"] = k;
      emit(c.out, report);
      return 2;
    }
  }
  if (c.action.is_generated())
    report["levels"] = levels;
  emit(c.out, report);
  return 0;
}

int cmd_axioms(const Context& c)
{
  const int bound = c.bound(4);
  const ZPartialAction a = c.action.at_level(c.level());
  const AxiomReport r = axioms_check(ExplicitFamily::generated_by(a, bound));
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations)
    violations.push_back(ordered_json{{"axiom", v.axiom}, {"t", v.t}, {"s", v.s}, {"detail", v.detail}});
  emit(c.out, ordered_json{{"ok", r.ok()}, {"bound", bound}, {"violations", std::move(violations)}});
  return r.ok() ? 0 : 2;
}

int cmd_hausdorff(const Context& c)
{
  const int bound = c.bound(4);
  const std::size_t depth = c.depth(10);
  const HausdorffCertificate cert = hausdorff_decide(c.action, bound, depth);
  ordered_json report;
  switch (cert.verdict) {
  case HausdorffCertificate::Verdict::Clopen:
    report = ordered_json{{"verdict", "clopen"}, {"bound", cert.bound}};
    break;
  case HausdorffCertificate::Verdict::Unknown:
    report = ordered_json{{"verdict", "unknown"}, {"depth", cert.depth}};
    break;
  case HausdorffCertificate::Verdict::NonClopenWitness: {
    report = ordered_json{{"verdict", "non-clopen-witness"}, {"t", cert.t}, {"point", cert.point->to_string()}};
    const NonSeparablePair pair = nonseparable_pair(c.action, cert.t, depth);
    ordered_json approach = ordered_json::array();
    for (const auto& [x, y] : pair.approach)
      approach.push_back(ordered_json::array({x.to_string(), y.to_string()}));
    report["pair"] = ordered_json{
        {"first", pair.first.to_string()}, {"second", pair.second.to_string()}, {"approach", std::move(approach)}};
    break;
  }
  }
  emit(c.out, report);
  return 0;
}

int cmd_related(const Context& c)
{
  if (!c.opt.p || !c.opt.q) {
    c.err << "related needs --p and --q\n";
    return 1;
  }
  const GermPair p = GermPair::parse(*c.opt.p);
  const GermPair q = GermPair::parse(*c.opt.q);
  const RelatedTrace tr = related_trace(c.action.at_level(c.level()), p, q);
  ordered_json trace{{"t", tr.t}, {"domain", tr.domain.to_string()}, {"in_domain", tr.in_domain}};
  trace["image"] = tr.image ? ordered_json(tr.image->to_string()) : ordered_json(nullptr);
  emit(c.out, ordered_json{{"related", tr.related}, {"p", p.to_string()}, {"q", q.to_string()}, {"trace", trace}});
  return 0;
}

int cmd_etale(const Context& c)
{
  const ZPartialAction a = c.action.at_level(c.level());
  std::vector<std::pair<int, int>> pairs;
  if (c.opt.t || c.opt.s) {
    pairs.emplace_back(c.opt.t.value_or(0), c.opt.s.value_or(0));
  } else {
    const int b = c.bound(3);
    for (int t = -b; t <= b; ++t)
      for (int s = -b; s <= b; ++s)
        pairs.emplace_back(t, s);
  }
  ordered_json reports = ordered_json::array();
  bool ok = true;
  for (const auto& [t, s] : pairs) {
    const ClopenSet base = c.opt.base ? ClopenSet::parse(*c.opt.base) : a.domain(zindex::left_quotient(t, s));
    const EtaleReport r = etale_probe(a, t, s, base);
    ok = ok && r.ok();
    reports.push_back(ordered_json{{"t", t},
                                   {"s", s},
                                   {"base", r.base.to_string()},
                                   {"range_image", r.range_image.to_string()},
                                   {"source_image", r.source_image.to_string()},
                                   {"range_bijective", r.range_bijective},
                                   {"source_bijective", r.source_bijective},
                                   {"diagonal_ok", r.diagonal_ok},
                                   {"problems", r.problems}});
  }
  emit(c.out, ordered_json{{"ok", ok}, {"opens", std::move(reports)}});
  return ok ? 0 : 2;
}

int cmd_quotient(const Context& c)
{
  const ZPartialAction a = c.action.at_level(c.level());
  const int bound = c.bound(1);
  const std::size_t depth = c.opt.depth ? *c.opt.depth : adapted_depth(a, bound, c.opt.cap);
  const auto classes = quotient_decomposition(a, bound, depth);
  emit(c.out, ordered_json{{"bound", bound},
                           {"depth", depth},
                           {"class_count", classes.size()},
                           {"classes", classes_json(classes)}});
  return 0;
}

int cmd_filtrate(const Context& c)
{
  if (!c.action.is_generated()) {
    c.err << "filtrate needs a generated system (odometer or open rules)\n";
    return 1;
  }
  const GeneratedMap& g = c.action.generated();
  if (c.opt.p || c.opt.q) {
    if (!c.opt.p || !c.opt.q) {
      c.err << "filtrate needs both --p and --q\n";
      return 1;
    }
    const GermPair p = GermPair::parse(*c.opt.p);
    const GermPair q = GermPair::parse(*c.opt.q);
    const InclusionWitness w = inclusion_witness(g, p, q, c.opt.cap);
    ordered_json orbit = ordered_json::array();
    for (const auto& x : w.orbit)
      orbit.push_back(x.to_string());
    emit(c.out, ordered_json{{"K", w.level}, {"orbit", std::move(orbit)}, {"rules", w.rule_indices}});
    return 0;
  }
  const std::size_t k = c.level().value_or(0);
  const int n = c.bound(1);
  const std::size_t d = c.opt.depth ? *c.opt.depth : adapted_depth(restrict_action(g, k), n, c.opt.cap);
  const TruncatedRelation rel(g, {k, n, d});
  emit(c.out, ordered_json{{"params", ordered_json{{"k", k}, {"n", n}, {"d", d}}},
                           {"units", rel.cells().units().size()},
                           {"class_count", rel.classes().size()},
                           {"classes", classes_json(rel.classes())}});
  return 0;
}

int cmd_bratteli(const Context& c)
{
  if (!c.action.is_generated()) {
    c.err << "bratteli needs a generated system (odometer or open rules)\n";
    return 1;
  }
  if (c.opt.out != "json" && c.opt.out != "dot") {
    c.err << "--out must be json or dot\n";
    return 1;
  }
  const GeneratedMap& g = c.action.generated();
  const std::size_t levels = c.opt.levels.value_or(c.system.levels.value_or(3));
  const std::vector<LevelParams> schedule = c.system.schedule ? *c.system.schedule : default_schedule(g, levels);
  const BratteliDiagram d = bratteli_build(g, schedule, levels);
  if (auto problem = check_dimension_identity(d); !problem.empty()) {
    c.err << "dimension identity fails: " << problem << "\n";
    return 2;
  }
  c.out << (c.opt.out == "dot" ? export_dot(d) : export_json(d));
  return 0;
}

int cmd_verify_psi(const Context& c)
{
  std::optional<std::size_t> level = c.level();
  if (c.action.is_generated() && !level)
    level = 1;
  const ZPartialAction a = c.action.at_level(level);
  const int support = c.opt.support.value_or(3);
  const std::size_t depth = c.opt.depth.value_or(6);
  const PsiSuiteReport r = run_psi_suite(a, c.opt.seed, c.opt.trials, support, depth);
  ordered_json report{{"pass", r.ok()}, {"trials", r.trials}, {"seed", c.opt.seed}};
  if (level)
    report["level"] = *level;
  if (!r.ok()) {
    report["identity"] = r.failure->identity;
    report["f"] = ordered_json::parse(to_json(r.failure->f));
    report["g"] = ordered_json::parse(to_json(r.failure->g));
    emit(c.out, report);
    return 2;
  }
  if (c.opt.trials > 0) {
    const auto eps = equivariance_sign(a, c.opt.seed, std::min<std::size_t>(c.opt.trials, 20), 3, support, depth);
    report["equivariance_sign"] = eps ? ordered_json(*eps) : ordered_json(nullptr);
  }
  emit(c.out, report);
  return 0;
}

} // namespace

// ---------------------------------------------------------------------------

Action SystemDefinition::action() const
{
  if (kind == Kind::Odometer)
    return Action(GeneratedMap::odometer());
  if (exhausts_open)
    return Action(GeneratedMap::from_rules(rules));
  return Action(PrefixMap(rules));
}

SystemDefinition parse_system(const std::string& text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at " + location(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object())
    throw ParseError("system definition must be a JSON object");
  reject_unknown(j, {"name", "generator", "schedule", "defaults"}, "system definition");

  SystemDefinition sys;
  if (j.contains("name"))
    sys.name = field<std::string>(j, "name", "system definition");
  if (!j.contains("generator") || !j["generator"].is_object())
    throw ParseError("system definition needs a \"generator\" object");
  const auto& gen = j["generator"];
  const std::string kind = field<std::string>(gen, "kind", "generator");
  if (kind == "odometer") {
    reject_unknown(gen, {"kind"}, "odometer generator");
    sys.kind = SystemDefinition::Kind::Odometer;
  } else if (kind == "rules") {
    reject_unknown(gen, {"kind", "rules", "exhausts"}, "rules generator");
    sys.kind = SystemDefinition::Kind::Rules;
    if (!gen.contains("rules") || !gen["rules"].is_array())
      throw ParseError("rules generator needs a \"rules\" array");
    for (const auto& r : gen["rules"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        throw ParseError("each rule must be a pair of words [\"u\",\"v\"]");
      sys.rules.push_back({r[0].get<std::string>(), r[1].get<std::string>()});
    }
    const std::string exhausts = gen.contains("exhausts") ? field<std::string>(gen, "exhausts", "generator") : "clopen";
    if (exhausts != "open" && exhausts != "clopen")
      throw ParseError("\"exhausts\" must be \"open\" or \"clopen\"");
    sys.exhausts_open = exhausts == "open";
  } else {
    throw ParseError("unknown generator kind \"" + kind + "\"");
  }

  if (j.contains("schedule")) {
    if (!j["schedule"].is_array())
      throw ParseError("\"schedule\" must be an array");
    std::vector<LevelParams> schedule;
    for (const auto& e : j["schedule"]) {
      if (!e.is_object())
        throw ParseError("schedule entries must be objects {\"k\",\"n\",\"d\"}");
      reject_unknown(e, {"k", "n", "d"}, "schedule entry");
      schedule.push_back({natural(e, "k", "schedule entry"), static_cast<int>(natural(e, "n", "schedule entry")),
                          natural(e, "d", "schedule entry")});
    }
    sys.schedule = std::move(schedule);
  }
  if (j.contains("defaults")) {
    const auto& d = j["defaults"];
    if (!d.is_object())
      throw ParseError("\"defaults\" must be an object");
    reject_unknown(d, {"bound", "depth", "levels"}, "defaults");
    if (d.contains("bound"))
      sys.bound = static_cast<int>(natural(d, "bound", "defaults"));
    if (d.contains("depth"))
      sys.depth = natural(d, "depth", "defaults");
    if (d.contains("levels"))
      sys.levels = natural(d, "levels", "defaults");
  }
  return sys;
}

const std::vector<std::string>& command_names()
{
  static const std::vector<std::string> names{"validate", "hausdorff", "related", "axioms",    "etale",
                                              "quotient", "filtrate",  "bratteli", "verify-psi"};
  return names;
}

int run_command_on_text(const std::string& command, const std::string& text, const CommandOptions& options,
                        std::ostream& out, std::ostream& err)
{
  SystemDefinition sys;
  try {
    sys = parse_system(text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  }
  if (command == "validate" && sys.kind == SystemDefinition::Kind::Rules) {
    if (auto v = PrefixMap::check(sys.rules)) {
      emit(out, ordered_json{{"ok", false}, {"violation", v->describe()}});
      return 2;
    }
  }
  try {
    const Action action = sys.action();
    const Context c{sys, action, options, out, err};
    if (command == "validate")
      return cmd_validate(c);
    if (command == "axioms")
      return cmd_axioms(c);
    if (command == "hausdorff")
      return cmd_hausdorff(c);
    if (command == "related")
      return cmd_related(c);
    if (command == "etale")
      return cmd_etale(c);
    if (command == "quotient")
      return cmd_quotient(c);
    if (command == "filtrate")
      return cmd_filtrate(c);
    if (command == "bratteli")
      return cmd_bratteli(c);
    if (command == "verify-psi")
      return cmd_verify_psi(c);
    err << "unknown command " << command << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const LevelRequired& e) {
    err << e.what() << " (pass --level)\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const NotStabilized& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvalidMap& e) {
    err << "invalid map: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
}

int run_command(const std::string& command, const std::string& file, const CommandOptions& options, std::ostream& out,
                std::ostream& err)
{
  std::ifstream in(file);
  if (!in) {
    err << "cannot read " << file << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_command_on_text(command, buf.str(), options, out, err);
}

} // namespace pact
