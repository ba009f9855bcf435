#include "pact/partial_action.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace pact {

ZPartialAction::ZPartialAction(PrefixMap generator) : generator_(std::move(generator)) {}

ZPartialAction::ZPartialAction(const ZPartialAction& other) : generator_(other.generator_)
{
  std::lock_guard lock(other.mutex_);
  powers_ = other.powers_;
}

ZPartialAction& ZPartialAction::operator=(const ZPartialAction& other)
{
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    generator_ = other.generator_;
    powers_ = other.powers_;
  }
  return *this;
}

PrefixMap ZPartialAction::map(int n) const
{
  {
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(n); it != powers_.end())
      return it->second;
  }
  PrefixMap m;
  if (n == 0)
    m = PrefixMap::identity();
  else if (n > 0)
    m = compose(generator_, map(n - 1));
  else
    m = compose(inverse(generator_), map(n + 1));
  std::lock_guard lock(mutex_);
  return powers_.emplace(n, std::move(m)).first->second;
}

ClopenSet ZPartialAction::domain(int t) const
{
  // dom(h_{-t}) = X_t
  return map(zindex::inv(t)).domain();
}

ZPartialAction Action::at_level(std::optional<std::size_t> level) const
{
  if (const auto* m = std::get_if<PrefixMap>(&source_))
    return ZPartialAction(*m);
  if (!level)
    throw LevelRequired("a generated action needs a truncation level");
  return ZPartialAction(std::get<GeneratedMap>(source_).truncation(*level));
}

ClopenSet Action::domain(int t, std::optional<std::size_t> level) const
{
  return at_level(level).domain(t);
}

PrefixMap Action::map(int n, std::optional<std::size_t> level) const
{
  return at_level(level).map(n);
}

ExplicitFamily ExplicitFamily::generated_by(const ZPartialAction& a, int bound)
{
  ExplicitFamily f;
  f.bound = bound;
  for (int t = -bound; t <= bound; ++t) {
    f.domains.emplace(t, a.domain(t));
    f.maps.emplace(t, a.map(t));
  }
  return f;
}

namespace {

// Cells on which every listed map acts as a single rewrite.
std::vector<Word> cells_for(const ClopenSet& region, const std::vector<const PrefixMap*>& maps)
{
  std::vector<Word> cuts;
  for (const auto* m : maps)
    for (const auto& r : m->rules())
      cuts.push_back(r.source);
  return common_refinement(region.words(), cuts);
}

std::optional<Point> try_apply(const PrefixMap& m, const Point& x)
{
  if (!m.in_domain(x))
    return std::nullopt;
  return m.apply(x);
}

} // namespace

AxiomReport axioms_check(const ExplicitFamily& family)
{
  AxiomReport report;
  const int n = family.bound;
  auto dom = [&](int t) -> const ClopenSet& { return family.domains.at(t); };
  auto h = [&](int t) -> const PrefixMap& { return family.maps.at(t); };

  if (!dom(0).is_full())
    report.violations.push_back({1, 0, 0, "Delta_0 = " + dom(0).to_string() + " is not X"});
  if (!(h(0) == PrefixMap::identity()))
    report.violations.push_back({1, 0, 0, "h_0 = " + h(0).to_string() + " is not the identity"});

  // h_t(Delta_{t^-1} ∩ Delta_s) = Delta_t ∩ Delta_{ts}
  for (int t = -n; t <= n; ++t) {
    for (int s = -n; s <= n; ++s) {
      const int ts = zindex::mul(t, s);
      if (std::abs(ts) > n)
        continue;
      const ClopenSet lhs = h(t).image(set_intersection(dom(zindex::inv(t)), dom(s)));
      const ClopenSet rhs = set_intersection(dom(t), dom(ts));
      if (!(lhs == rhs))
        report.violations.push_back(
            {2, t, s, "h_t(Delta_-t ∩ Delta_s) = " + lhs.to_string() + " but Delta_t ∩ Delta_ts = " + rhs.to_string()});
    }
  }

  // h_t(h_s(x)) = h_ts(x) on Delta_{s^-1} ∩ Delta_{s^-1 t^-1}
  for (int t = -n; t <= n; ++t) {
    for (int s = -n; s <= n; ++s) {
      const int ts = zindex::mul(t, s);
      if (std::abs(ts) > n)
        continue;
      const ClopenSet region = set_intersection(dom(zindex::inv(s)), dom(zindex::inv(ts)));
      const PrefixMap hts = compose(h(t), h(s));
      for (const auto& cell : cells_for(region, {&h(s), &h(ts), &hts})) {
        bool failed = false;
        for (const char tail : {'0', '1'}) {
          const Point x(cell, std::string(1, tail));
          const auto lhs_mid = try_apply(h(s), x);
          const auto lhs = lhs_mid ? try_apply(h(t), *lhs_mid) : std::nullopt;
          const auto rhs = try_apply(h(ts), x);
          if (lhs && rhs && *lhs == *rhs)
            continue;
          report.violations.push_back(
              {3, t, s,
               "at " + x.to_string() + ": h_t(h_s(x)) = " + (lhs ? lhs->to_string() : "undefined") +
                   ", h_ts(x) = " + (rhs ? rhs->to_string() : "undefined")});
          failed = true;
          break;
        }
        if (failed)
          break;
      }
    }
  }

  for (int t = -n; t <= n; ++t) {
    if (!(h(t).domain() == dom(zindex::inv(t))) || !(h(t).range() == dom(t)))
      report.violations.push_back({0, t, 0,
                                   "h_t maps " + h(t).domain().to_string() + " onto " + h(t).range().to_string() +
                                       ", expected " + dom(zindex::inv(t)).to_string() + " onto " +
                                       dom(t).to_string()});
  }
  return report;
}

PiecewiseConstant dual_pullback(const PiecewiseConstant& f, const ZPartialAction& a, int t)
{
  const ClopenSet allowed = a.domain(zindex::inv(t));
  if (!is_subset(f.support(), allowed))
    throw SupportViolation("support " + f.support().to_string() + " is not inside X_" +
                           std::to_string(zindex::inv(t)) + " = " + allowed.to_string());
  return f.pushed_forward(a.map(t));
}

} // namespace pact
