#include "pact/envelope.hpp"

#include "pact/errors.hpp"

#include <algorithm>

namespace pact {

GermPair GermPair::parse(std::string_view text)
{
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("germ must look like r:pre(per): '" + std::string(text) + "'");
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(std::string(text.substr(0, colon)), &used);
    if (used != colon)
      throw ParseError("bad index");
  } catch (const std::exception&) {
    throw ParseError("bad germ index in '" + std::string(text) + "'");
  }
  return {r, Point::parse(text.substr(colon + 1))};
}

std::string GermPair::to_string() const
{
  return std::to_string(index) + ":" + point.to_string();
}

RelatedTrace related_trace(const ZPartialAction& a, const GermPair& p, const GermPair& q)
{
  RelatedTrace trace;
  trace.t = zindex::left_quotient(p.index, q.index);
  trace.domain = a.domain(trace.t);
  trace.in_domain = trace.domain.contains(p.point);
  if (trace.in_domain) {
    trace.image = a.map(zindex::left_quotient(q.index, p.index)).apply(p.point);
    trace.related = *trace.image == q.point;
  }
  return trace;
}

bool related(const ZPartialAction& a, const GermPair& p, const GermPair& q)
{
  return related_trace(a, p, q).related;
}

bool related(const Action& a, std::optional<std::size_t> level, const GermPair& p, const GermPair& q)
{
  return related(a.at_level(level), p, q);
}

RelationProbeReport symmetry_transitivity_probe(const ZPartialAction& a, const std::vector<GermPair>& germs)
{
  RelationProbeReport report;
  const std::size_t n = germs.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i][j] = related(a, germs[i], germs[j]);

  for (std::size_t i = 0; i < n; ++i) {
    ++report.reflexive_checks;
    if (!rel[i][i])
      report.violations.push_back("not reflexive at " + germs[i].to_string());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j])
        continue;
      ++report.symmetric_checks;
      if (!rel[j][i])
        report.violations.push_back("not symmetric: " + germs[i].to_string() + " ~ " + germs[j].to_string());
      for (std::size_t k = 0; k < n; ++k) {
        if (!rel[j][k])
          continue;
        ++report.transitive_checks;
        if (!rel[i][k])
          report.violations.push_back("not transitive: " + germs[i].to_string() + " ~ " + germs[j].to_string() +
                                      " ~ " + germs[k].to_string());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hausdorffness

namespace {

// Shortest eventually periodic point whose expansion starts with w, using a
// description at most half as long as w.
std::optional<Point> fit_point(const Word& w)
{
  for (std::size_t len = 1; 2 * len <= w.size(); ++len) {
    for (std::size_t pre = 0; pre < len; ++pre) {
      const Point candidate(w.substr(0, pre), w.substr(pre, len - pre));
      if (candidate.unroll(w.size()) == w)
        return candidate;
    }
  }
  return std::nullopt;
}

ClopenSet exhaustion_side(const GeneratedMap& g, int t, std::size_t k)
{
  const PrefixMap m = g.truncation(k);
  return t < 0 ? m.domain() : m.range();
}

struct Witness
{
  Point limit;
  std::vector<ClopenSet> levels;
};

// Residuals X \ S_k for k <= depth; recognizes an eventually single, nested,
// strictly shrinking chain of cylinders and checks the limit point.
std::optional<Witness> residual_search(const GeneratedMap& g, int t, std::size_t depth)
{
  if (depth < 1)
    return std::nullopt;
  std::vector<ClopenSet> levels;
  std::vector<ClopenSet> residual;
  for (std::size_t k = 0; k <= depth; ++k) {
    levels.push_back(exhaustion_side(g, t, k));
    residual.push_back(set_complement(levels.back()));
  }
  auto single = [&](std::size_t k) { return residual[k].words().size() == 1; };
  if (!single(depth) || !single(depth - 1))
    return std::nullopt;
  const Word& last = residual[depth].words().front();
  const Word& before = residual[depth - 1].words().front();
  if (!is_proper_prefix(before, last))
    return std::nullopt;

  auto x = fit_point(last);
  if (!x)
    return std::nullopt;
  for (const auto& s : levels)
    if (s.contains(*x))
      return std::nullopt;
  for (std::size_t j = 0; j <= depth; ++j)
    if (!levels[depth].meets_cylinder(x->unroll(j)))
      return std::nullopt;
  return Witness{*x, std::move(levels)};
}

} // namespace

HausdorffCertificate hausdorff_decide(const Action& a, int bound, std::size_t depth)
{
  HausdorffCertificate cert;
  cert.bound = bound;
  cert.depth = depth;
  if (!a.is_generated()) {
    const ZPartialAction za = a.at_level(std::nullopt);
    for (int t = -bound; t <= bound; ++t) {
      ClopenSet d = za.domain(t);
      if (!(ClopenSet::normalize(d.words()) == d))
        throw Error("domain X_" + std::to_string(t) + " is not canonical");
      cert.domains.emplace(t, std::move(d));
    }
    cert.verdict = HausdorffCertificate::Verdict::Clopen;
    return cert;
  }
  for (int t : {-1, 1}) {
    if (auto w = residual_search(a.generated(), t, depth)) {
      cert.verdict = HausdorffCertificate::Verdict::NonClopenWitness;
      cert.t = t;
      cert.point = w->limit;
      return cert;
    }
  }
  cert.verdict = HausdorffCertificate::Verdict::Unknown;
  return cert;
}

std::size_t agreement(const Point& x, const Point& y, std::size_t cap)
{
  std::size_t i = 0;
  while (i < cap && x.at(i) == y.at(i))
    ++i;
  return i;
}

NonSeparablePair nonseparable_pair(const Action& a, int t, std::size_t depth)
{
  if (!a.is_generated())
    throw NoWitness("clopen generators have clopen domains; there is no non-separable pair");
  if (t != -1 && t != 1)
    throw NoWitness("witness search covers t = -1 and t = 1 only");
  const auto w = residual_search(a.generated(), t, depth);
  if (!w)
    throw NoWitness("no residual-chain witness for t = " + std::to_string(t) + " at depth " + std::to_string(depth));

  const ZPartialAction full = a.at_level(depth);
  const PrefixMap step = full.map(zindex::inv(t));
  NonSeparablePair pair;
  for (std::size_t j = 0; j + 1 < w->levels.size(); ++j) {
    const ClopenSet fresh = set_difference(w->levels[j + 1], w->levels[j]);
    if (fresh.is_empty())
      continue;
    const Word* best = &fresh.words().front();
    for (const auto& c : fresh.words())
      if (agreement(Point(c, "0"), w->limit) > agreement(Point(*best, "0"), w->limit))
        best = &c;
    const Point xj(*best, "0");
    pair.approach.emplace_back(xj, step.apply(xj));
  }
  if (pair.approach.size() < 2)
    throw NoWitness("approach sequence too short at depth " + std::to_string(depth));

  const Point& y_last = pair.approach.back().second;
  const Point& y_prev = pair.approach[pair.approach.size() - 2].second;
  const Word common = y_last.unroll(agreement(y_last, y_prev));
  const auto y = fit_point(common);

  pair.first = {zindex::inv(t), w->limit};
  pair.second = {0, y ? *y : y_last};
  return pair;
}

bool verify_nonseparable(const Action& a, std::size_t level, const NonSeparablePair& pair, std::size_t depth,
                         std::string* why)
{
  auto fail = [&](std::string msg) {
    if (why)
      *why = std::move(msg);
    return false;
  };
  const ZPartialAction za = a.at_level(level);
  std::size_t prev_x = 0, prev_y = 0;
  for (const auto& [xj, yj] : pair.approach) {
    if (!related(za, {pair.first.index, xj}, {pair.second.index, yj}))
      return fail("approach pair not related: " + xj.to_string() + " / " + yj.to_string());
    const std::size_t ax = agreement(xj, pair.first.point);
    const std::size_t ay = agreement(yj, pair.second.point);
    if (ax < prev_x || ay < prev_y)
      return fail("approach agreement decreases at " + xj.to_string());
    prev_x = ax;
    prev_y = ay;
  }
  if (prev_x < depth || prev_y < depth)
    return fail("approach reaches agreement " + std::to_string(std::min(prev_x, prev_y)) + " < " +
                std::to_string(depth));
  return true;
}

// ---------------------------------------------------------------------------
// Etale structure

namespace {

bool pairwise_disjoint(std::vector<Word> words)
{
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    if (is_prefix(words[i], words[i + 1]))
      return false;
  return true;
}

} // namespace

EtaleReport etale_probe(const ZPartialAction& a, int t, int s, const ClopenSet& base)
{
  const ClopenSet allowed = a.domain(zindex::left_quotient(t, s));
  if (!is_subset(base, allowed))
    throw BaseNotInDomain("base " + base.to_string() + " is not inside X_{t^-1 s} = " + allowed.to_string());
  const PrefixMap h = a.map(zindex::left_quotient(s, t));
  const PrefixMap back = inverse(h);

  EtaleReport report;
  report.t = t;
  report.s = s;
  report.base = base;

  std::vector<Word> cuts;
  for (const auto& r : h.rules())
    cuts.push_back(r.source);
  const auto cells = common_refinement(base.words(), cuts);

  std::vector<Word> images;
  bool cellwise = true;
  for (const auto& c : cells) {
    const auto pieces = h.transport(c);
    if (pieces.size() != 1 || pieces.front().source != c) {
      cellwise = false;
      report.problems.push_back("cell " + format_word(c) + " is not carried onto a single cylinder");
      continue;
    }
    const auto& img = pieces.front().image;
    const auto returned = back.transport(img);
    if (returned.size() != 1 || returned.front().image != c) {
      cellwise = false;
      report.problems.push_back("cell " + format_word(c) + " does not return from " + format_word(img));
    }
    images.push_back(img);
  }

  report.range_image = ClopenSet::normalize(cells);
  report.range_bijective = pairwise_disjoint(cells) && report.range_image == base;
  if (!report.range_bijective)
    report.problems.push_back("range map does not cover (t, base) injectively");

  report.source_image = ClopenSet::normalize(images);
  report.source_bijective = cellwise && pairwise_disjoint(images) && report.source_image == h.image(base);
  if (!report.source_bijective)
    report.problems.push_back("source map is not a cell-wise bijection onto its image");

  if (t == s) {
    report.diagonal_ok = report.source_image == report.range_image && images == cells;
    if (!report.diagonal_ok)
      report.problems.push_back("diagonal basic open is not the identity");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Groupoid R'

std::string Arrow::to_string() const
{
  return "(" + x.to_string() + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

bool in_groupoid(const ZPartialAction& a, const Arrow& z)
{
  return a.domain(zindex::left_quotient(z.r, z.s)).contains(z.x);
}

namespace {

Point arrow_target(const ZPartialAction& a, const Arrow& z)
{
  return a.map(zindex::left_quotient(z.s, z.r)).apply(z.x);
}

} // namespace

std::optional<Arrow> arrow_product(const ZPartialAction& a, const Arrow& z1, const Arrow& z2)
{
  if (z1.s != z2.r)
    return std::nullopt;
  if (!(arrow_target(a, z1) == z2.x))
    return std::nullopt;
  return Arrow{z1.x, z1.r, z2.s};
}

Arrow arrow_inverse(const ZPartialAction& a, const Arrow& z)
{
  return {arrow_target(a, z), z.s, z.r};
}

GroupoidReport groupoid_probe(const ZPartialAction& a, const std::vector<std::array<Arrow, 3>>& triples)
{
  GroupoidReport report;
  auto bad = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  // The same arrow seen in R: (r, x, s, y).
  struct Quad
  {
    GermPair range, source;
  };
  auto quad = [&](const Arrow& z) { return Quad{{z.r, z.x}, {z.s, arrow_target(a, z)}}; };

  auto check_pair = [&](const Arrow& p, const Arrow& q) -> std::optional<Arrow> {
    const auto prod = arrow_product(a, p, q);
    const Quad qp = quad(p), qq = quad(q);
    const bool r_composable = qp.source == qq.range;
    if (prod.has_value() != r_composable) {
      bad("composability of " + p.to_string() + " and " + q.to_string() + " disagrees with R");
      return std::nullopt;
    }
    if (!prod)
      return std::nullopt;
    ++report.composable;
    if (!in_groupoid(a, *prod))
      bad("product " + prod->to_string() + " is not in R'");
    else if (!related(a, qp.range, qq.source))
      bad("product " + prod->to_string() + " does not connect related germs");
    else if (!(quad(*prod).source == qq.source))
      bad("product " + prod->to_string() + " has the wrong source");
    return prod;
  };

  for (const auto& tri : triples) {
    ++report.samples;
    bool members = true;
    for (const auto& z : tri) {
      if (!in_groupoid(a, z)) {
        bad("sample " + z.to_string() + " is not in R'");
        members = false;
      }
    }
    if (!members)
      continue;

    for (const auto& z : tri) {
      const Arrow zi = arrow_inverse(a, z);
      if (!in_groupoid(a, zi)) {
        bad("inverse of " + z.to_string() + " is not in R'");
        continue;
      }
      if (!(arrow_inverse(a, zi) == z))
        bad("inverse is not an involution at " + z.to_string());
      const auto left = arrow_product(a, z, zi);
      const auto right = arrow_product(a, zi, z);
      if (!left || !(*left == Arrow{z.x, z.r, z.r}))
        bad("z z^-1 is not the range unit at " + z.to_string());
      if (!right || !(*right == Arrow{zi.x, z.s, z.s}))
        bad("z^-1 z is not the source unit at " + z.to_string());
      const Arrow unit{z.x, z.r, z.r};
      const auto sq = arrow_product(a, unit, unit);
      if (!sq || !(*sq == unit))
        bad("unit " + unit.to_string() + " is not idempotent");
    }

    const auto ab = check_pair(tri[0], tri[1]);
    const auto bc = check_pair(tri[1], tri[2]);
    if (ab && bc) {
      ++report.associativity_checks;
      const auto lhs = check_pair(*ab, tri[2]);
      const auto rhs = check_pair(tri[0], *bc);
      if (!lhs || !rhs || !(*lhs == *rhs))
        bad("associativity fails on " + tri[0].to_string() + tri[1].to_string() + tri[2].to_string());
    }
  }
  return report;
}

std::array<Arrow, 3> sample_composable_triple(const ZPartialAction& a, Rng& rng, int bound)
{
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int r = rng.between(-bound, bound);
    const int s = rng.between(-bound, bound);
    const int u = rng.between(-bound, bound);
    const int v = rng.between(-bound, bound);
    const ClopenSet d1 = a.domain(zindex::left_quotient(r, s));
    if (d1.is_empty())
      continue;
    const Arrow z1{random_point_in(rng, d1, 3, 3), r, s};
    const Point y = arrow_target(a, z1);
    if (!a.domain(zindex::left_quotient(s, u)).contains(y))
      continue;
    const Arrow z2{y, s, u};
    const Point z = arrow_target(a, z2);
    if (!a.domain(zindex::left_quotient(u, v)).contains(z))
      continue;
    return {z1, z2, Arrow{z, u, v}};
  }
  throw Error("could not sample a composable triple");
}

std::vector<std::vector<Unit>> quotient_decomposition(const ZPartialAction& a, int bound, std::size_t depth)
{
  const CellRelation rel(a, bound, depth);
  if (auto problem = rel.verify_equivalence(); !problem.empty())
    throw Error("cell relation is not an equivalence: " + problem);
  return rel.classes();
}

} // namespace pact
