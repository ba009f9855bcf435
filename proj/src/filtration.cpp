#include "pact/filtration.hpp"

#include "pact/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace pact {

ZPartialAction restrict_action(const GeneratedMap& g, std::size_t k)
{
  return ZPartialAction(g.truncation(k));
}

InclusionWitness inclusion_witness(const GeneratedMap& g, const GermPair& p, const GermPair& q, std::size_t cap)
{
  // y = h_{s^-1 r}(x); walk the orbit one rule at a time.
  const int steps = zindex::left_quotient(q.index, p.index);
  const bool forward = steps > 0;
  const std::size_t limit = g.rule_count() ? std::min(cap, *g.rule_count() - 1) : cap;

  InclusionWitness w;
  w.orbit.push_back(p.point);
  for (int i = 0; i < std::abs(steps); ++i) {
    const Point& cur = w.orbit.back();
    std::optional<std::size_t> found;
    for (std::size_t idx = 0; g.rule_count() == std::nullopt || idx < *g.rule_count(); ++idx) {
      if (idx > limit)
        break;
      const PrefixRule r = *g.rule(idx);
      const Word& from = forward ? r.source : r.target;
      if (cur.unroll(from.size()) == from) {
        found = idx;
        const Word& to = forward ? r.target : r.source;
        w.orbit.push_back(cur.drop(from.size()).prepend(to));
        break;
      }
    }
    if (!found) {
      if (g.rule_count() && *g.rule_count() <= cap + 1)
        throw Error("orbit point " + cur.to_string() + " leaves the domain; the germs are not related");
      throw CapExceeded("orbit point " + cur.to_string() + " needs a rule beyond index " + std::to_string(cap));
    }
    w.rule_indices.push_back(*found);
  }
  if (!(w.orbit.back() == q.point))
    throw Error("orbit of " + p.to_string() + " ends at " + w.orbit.back().to_string() + ", not " +
                q.point.to_string());

  w.level = w.rule_indices.empty() ? 0 : *std::max_element(w.rule_indices.begin(), w.rule_indices.end());
  if (!related(restrict_action(g, w.level), p, q))
    throw Error("level " + std::to_string(w.level) + " does not relate the germs");
  if (w.level > 0 && related(restrict_action(g, w.level - 1), p, q))
    throw Error("level " + std::to_string(w.level) + " is not the least witness");
  return w;
}

// ---------------------------------------------------------------------------

TruncatedRelation::TruncatedRelation(const GeneratedMap& g, LevelParams params)
  : params_(params), relation_(restrict_action(g, params.k), params.n, params.d)
{
  if (auto problem = relation_.verify_equivalence(); !problem.empty())
    throw Error("truncated relation is not an equivalence: " + problem);
  classes_ = relation_.classes();
  class_of_unit_.assign(relation_.units().size(), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (const auto& u : classes_[c])
      class_of_unit_[relation_.index_of(u)] = c;
}

std::size_t TruncatedRelation::class_index(const Unit& u) const
{
  return class_of_unit_[relation_.index_of(u)];
}

std::vector<LevelParams> default_schedule(const GeneratedMap& g, std::size_t levels)
{
  std::vector<LevelParams> out;
  std::size_t d = 0;
  for (std::size_t m = 0; m < levels; ++m) {
    const int n = static_cast<int>(m) + 1;
    d = std::max(d, adapted_depth(restrict_action(g, m), n));
    out.push_back({m, n, d});
  }
  return out;
}

std::size_t BratteliDiagram::multiplicity(std::size_t m, std::size_t from, std::size_t to) const
{
  for (const auto& e : edges)
    if (e.from_level == m && e.from == from && e.to == to)
      return e.mult;
  return 0;
}

BratteliDiagram bratteli_build(const GeneratedMap& g, const std::vector<LevelParams>& schedule, std::size_t levels)
{
  if (schedule.size() < levels)
    throw Error("schedule has " + std::to_string(schedule.size()) + " entries, " + std::to_string(levels) +
                " levels requested");
  BratteliDiagram diagram;
  std::vector<TruncatedRelation> rels;
  for (std::size_t m = 0; m < levels; ++m) {
    const LevelParams& p = schedule[m];
    if (m > 0) {
      const LevelParams& prev = schedule[m - 1];
      if (p.k < prev.k || p.n < prev.n || p.d < prev.d)
        throw Error("schedule decreases at level " + std::to_string(m));
    }
    try {
      rels.emplace_back(g, p);
    } catch (const DepthTooSmall& e) {
      throw DepthTooSmall("level " + std::to_string(m) + ": " + e.what());
    }
    BratteliLevel level;
    level.m = m;
    level.params = p;
    for (std::size_t c = 0; c < rels.back().classes().size(); ++c)
      level.vertices.push_back({c, rels.back().classes()[c].size(), 0});
    diagram.levels.push_back(std::move(level));
  }
  if (levels == 0)
    return diagram;

  for (auto& v : diagram.levels[0].vertices)
    v.fresh = v.size;

  for (std::size_t m = 0; m + 1 < levels; ++m) {
    const TruncatedRelation& lo = rels[m];
    const TruncatedRelation& hi = rels[m + 1];
    const auto tails = words_of_length(hi.params().d - lo.params().d);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
    std::vector<std::size_t> covered(hi.classes().size(), 0);
    for (std::size_t c = 0; c < lo.classes().size(); ++c) {
      const auto& cls = lo.classes()[c];
      for (const auto& z : tails) {
        std::optional<std::size_t> target;
        for (const auto& u : cls) {
          const std::size_t j = hi.class_index({u.t, u.cell + z});
          if (target && *target != j)
            throw Error("refined copy of level-" + std::to_string(m) + " class " + std::to_string(c) +
                        " splits across level-" + std::to_string(m + 1) + " classes");
          target = j;
        }
        ++mult[{c, *target}];
        covered[*target] += cls.size();
      }
    }
    for (const auto& [key, count] : mult)
      diagram.edges.push_back({m, key.first, key.second, count});
    auto& next = diagram.levels[m + 1].vertices;
    for (std::size_t j = 0; j < next.size(); ++j) {
      // Units of O' whose index lies beyond the previous bound.
      std::size_t fresh = 0;
      for (const auto& u : hi.classes()[j])
        fresh += std::abs(u.t) > lo.params().n;
      if (covered[j] + fresh != next[j].size)
        throw Error("level " + std::to_string(m + 1) + " vertex " + std::to_string(j) +
                    " is not covered exactly by refined copies and fresh units");
      next[j].fresh = fresh;
    }
  }
  std::sort(diagram.edges.begin(), diagram.edges.end(), [](const BratteliEdge& a, const BratteliEdge& b) {
    return std::tie(a.from_level, a.from, a.to) < std::tie(b.from_level, b.from, b.to);
  });
  return diagram;
}

std::string check_dimension_identity(const BratteliDiagram& d)
{
  for (std::size_t m = 0; m < d.levels.size(); ++m) {
    for (const auto& v : d.levels[m].vertices) {
      std::size_t total = v.fresh;
      if (m > 0)
        for (const auto& e : d.edges)
          if (e.from_level == m - 1 && e.to == v.id)
            total += e.mult * d.levels[m - 1].vertices.at(e.from).size;
      if (total != v.size)
        return "level " + std::to_string(m) + " vertex " + std::to_string(v.id) + ": size " + std::to_string(v.size) +
               " but incoming dimension " + std::to_string(total);
    }
  }
  return {};
}

std::string export_json(const BratteliDiagram& d)
{
  using nlohmann::ordered_json;
  ordered_json levels = ordered_json::array();
  for (const auto& l : d.levels) {
    ordered_json vertices = ordered_json::array();
    for (const auto& v : l.vertices)
      vertices.push_back(ordered_json{{"id", v.id}, {"size", v.size}, {"fresh", v.fresh}});
    levels.push_back(ordered_json{{"m", l.m},
                                  {"params", ordered_json{{"k", l.params.k}, {"n", l.params.n}, {"d", l.params.d}}},
                                  {"vertices", std::move(vertices)}});
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : d.edges)
    edges.push_back(ordered_json{{"from", {e.from_level, e.from}}, {"to", {e.from_level + 1, e.to}}, {"mult", e.mult}});
  ordered_json out{{"levels", std::move(levels)}, {"edges", std::move(edges)}};
  return out.dump(2) + "\n";
}

BratteliDiagram import_json(const std::string& text)
{
  const auto j = nlohmann::json::parse(text);
  BratteliDiagram d;
  for (const auto& l : j.at("levels")) {
    BratteliLevel level;
    level.m = l.at("m").get<std::size_t>();
    level.params = {l.at("params").at("k").get<std::size_t>(), l.at("params").at("n").get<int>(),
                    l.at("params").at("d").get<std::size_t>()};
    for (const auto& v : l.at("vertices"))
      level.vertices.push_back(
          {v.at("id").get<std::size_t>(), v.at("size").get<std::size_t>(), v.at("fresh").get<std::size_t>()});
    d.levels.push_back(std::move(level));
  }
  for (const auto& e : j.at("edges")) {
    const std::size_t from_level = e.at("from").at(0).get<std::size_t>();
    if (e.at("to").at(0).get<std::size_t>() != from_level + 1)
      throw ParseError("edge must join consecutive levels");
    d.edges.push_back({from_level, e.at("from").at(1).get<std::size_t>(), e.at("to").at(1).get<std::size_t>(),
                       e.at("mult").get<std::size_t>()});
  }
  return d;
}

std::string export_dot(const BratteliDiagram& d)
{
  std::ostringstream out;
  out << "digraph bratteli {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=circle];\n";
  for (const auto& l : d.levels) {
    out << "  subgraph level_" << l.m << " {\n";
    out << "    rank=same;\n";
    for (const auto& v : l.vertices)
      out << "    \"v" << l.m << "_" << v.id << "\" [label=\"" << v.size << "\"];\n";
    out << "  }\n";
  }
  for (const auto& e : d.edges) {
    if (e.mult == 0)
      continue;
    out << "  \"v" << e.from_level << "_" << e.from << "\" -> \"v" << e.from_level + 1 << "_" << e.to
        << "\" [label=\"" << e.mult << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace pact
