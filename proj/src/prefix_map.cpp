#include "pact/prefix_map.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <map>

namespace pact {

std::string PrefixRule::to_string() const
{
  return format_word(source) + "->" + format_word(target);
}

PrefixRule PrefixRule::parse(std::string_view text)
{
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos)
    throw ParseError("rule must look like u->v: '" + std::string(text) + "'");
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ')
      s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
      s.remove_suffix(1);
    return s;
  };
  return {parse_word(trim(text.substr(0, arrow))), parse_word(trim(text.substr(arrow + 2)))};
}

std::string MapViolation::describe() const
{
  std::string what;
  switch (kind) {
  case Kind::DuplicateSource:
    what = "duplicate source";
    break;
  case Kind::SourcesNotPrefixFree:
    what = "sources not prefix-free";
    break;
  case Kind::TargetsNotPrefixFree:
    what = "targets not prefix-free";
    break;
  case Kind::NotBinary:
    what = "non-binary word";
    break;
  }
  return what + ": " + first.to_string() + " / " + second.to_string();
}

namespace {

// Rules sorted by source, sibling pairs u0->v0, u1->v1 merged to u->v.
std::vector<PrefixRule> canonical_rules(std::vector<PrefixRule> rules)
{
  std::map<Word, Word> by_source;
  for (auto& r : rules)
    by_source.emplace(std::move(r.source), std::move(r.target));
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = by_source.begin(); it != by_source.end(); ++it) {
      const Word& u = it->first;
      const Word& v = it->second;
      if (u.empty() || v.empty() || u.back() != '0' || v.back() != '0')
        continue;
      Word u1 = u;
      u1.back() = '1';
      auto sib = by_source.find(u1);
      if (sib == by_source.end())
        continue;
      Word v1 = v;
      v1.back() = '1';
      if (sib->second != v1)
        continue;
      Word parent_u = u.substr(0, u.size() - 1);
      Word parent_v = v.substr(0, v.size() - 1);
      by_source.erase(sib);
      by_source.erase(it);
      by_source.emplace(std::move(parent_u), std::move(parent_v));
      merged = true;
      break;
    }
  }
  std::vector<PrefixRule> out;
  out.reserve(by_source.size());
  for (auto& [u, v] : by_source)
    out.push_back({u, v});
  return out;
}

std::string trim_copy(std::string_view s)
{
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return std::string(s);
}

} // namespace

std::optional<MapViolation> PrefixMap::check(const std::vector<PrefixRule>& rules)
{
  using K = MapViolation::Kind;
  for (const auto& r : rules)
    if (!is_binary_word(r.source) || !is_binary_word(r.target))
      return MapViolation{K::NotBinary, r, r};
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      const auto& a = rules[i];
      const auto& b = rules[j];
      if (a.source == b.source)
        return MapViolation{K::DuplicateSource, a, b};
      if (is_prefix(a.source, b.source) || is_prefix(b.source, a.source))
        return MapViolation{K::SourcesNotPrefixFree, a, b};
      if (is_prefix(a.target, b.target) || is_prefix(b.target, a.target))
        return MapViolation{K::TargetsNotPrefixFree, a, b};
    }
  }
  return std::nullopt;
}

PrefixMap::PrefixMap(std::vector<PrefixRule> rules)
{
  if (auto bad = check(rules))
    throw InvalidMap(bad->describe());
  rules_ = canonical_rules(std::move(rules));
}

PrefixMap::PrefixMap(std::vector<PrefixRule> rules, Trusted)
  : rules_(canonical_rules(std::move(rules)))
{
}

PrefixMap PrefixMap::parse(std::string_view text)
{
  std::string body = trim_copy(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("map must be a bracketed rule list: '" + std::string(text) + "'");
  body = trim_copy(std::string_view(body).substr(1, body.size() - 2));
  std::vector<PrefixRule> rules;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      rules.push_back(PrefixRule::parse(
          trim_copy(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos : comma - start))));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  }
  return PrefixMap(std::move(rules));
}

bool PrefixMap::is_length_preserving() const
{
  return std::all_of(rules_.begin(), rules_.end(),
                     [](const PrefixRule& r) { return r.source.size() == r.target.size(); });
}

std::size_t PrefixMap::max_source_length() const
{
  std::size_t m = 0;
  for (const auto& r : rules_)
    m = std::max(m, r.source.size());
  return m;
}

std::size_t PrefixMap::max_target_length() const
{
  std::size_t m = 0;
  for (const auto& r : rules_)
    m = std::max(m, r.target.size());
  return m;
}

ClopenSet PrefixMap::domain() const
{
  std::vector<Word> w;
  for (const auto& r : rules_)
    w.push_back(r.source);
  return ClopenSet::normalize(std::move(w));
}

ClopenSet PrefixMap::range() const
{
  std::vector<Word> w;
  for (const auto& r : rules_)
    w.push_back(r.target);
  return ClopenSet::normalize(std::move(w));
}

bool PrefixMap::in_domain(const Point& x) const
{
  return std::any_of(rules_.begin(), rules_.end(),
                     [&](const PrefixRule& r) { return is_prefix(r.source, x.unroll(r.source.size())); });
}

Point PrefixMap::apply(const Point& x) const
{
  for (const auto& r : rules_)
    if (x.unroll(r.source.size()) == r.source)
      return x.drop(r.source.size()).prepend(r.target);
  throw NotInDomain("point " + x.to_string() + " is outside the domain of " + to_string());
}

std::vector<CellImage> PrefixMap::transport(const Word& cell) const
{
  std::vector<CellImage> out;
  for (const auto& r : rules_) {
    if (is_prefix(r.source, cell))
      out.push_back({cell, r.target + cell.substr(r.source.size())});
    else if (is_proper_prefix(cell, r.source))
      out.push_back({r.source, r.target});
  }
  return out;
}

ClopenSet PrefixMap::image(const ClopenSet& s) const
{
  std::vector<Word> out;
  for (const auto& w : s.words())
    for (auto& piece : transport(w))
      out.push_back(std::move(piece.image));
  return ClopenSet::normalize(std::move(out));
}

ClopenSet PrefixMap::preimage(const ClopenSet& s) const
{
  return inverse(*this).image(s);
}

PrefixMap PrefixMap::restrict_to(const ClopenSet& s) const
{
  std::vector<PrefixRule> out;
  for (const auto& w : s.words())
    for (auto& piece : transport(w))
      out.push_back({std::move(piece.source), std::move(piece.image)});
  return PrefixMap(std::move(out), Trusted{});
}

std::string PrefixMap::to_string() const
{
  std::string out = "[";
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i)
      out += ',';
    out += rules_[i].to_string();
  }
  return out + "]";
}

PrefixMap compose(const PrefixMap& g, const PrefixMap& f)
{
  std::vector<PrefixRule> out;
  for (const auto& [u, v] : f.rules_) {
    for (const auto& [p, q] : g.rules_) {
      if (is_prefix(v, p))
        out.push_back({u + p.substr(v.size()), q});
      else if (is_proper_prefix(p, v))
        out.push_back({u, q + v.substr(p.size())});
    }
  }
  return PrefixMap(std::move(out), PrefixMap::Trusted{});
}

PrefixMap inverse(const PrefixMap& m)
{
  std::vector<PrefixRule> out;
  out.reserve(m.rules_.size());
  for (const auto& [u, v] : m.rules_)
    out.push_back({v, u});
  return PrefixMap(std::move(out), PrefixMap::Trusted{});
}

PrefixMap power(const PrefixMap& m, int n)
{
  if (n == 0)
    return PrefixMap::identity();
  const PrefixMap step = n > 0 ? m : inverse(m);
  PrefixMap acc = step;
  for (int i = 1; i < (n > 0 ? n : -n); ++i)
    acc = compose(step, acc);
  return acc;
}

// ---------------------------------------------------------------------------

GeneratedMap GeneratedMap::odometer()
{
  return GeneratedMap(Kind::Odometer, {});
}

GeneratedMap GeneratedMap::from_rules(std::vector<PrefixRule> rules)
{
  if (auto bad = PrefixMap::check(rules))
    throw InvalidMap(bad->describe());
  return GeneratedMap(Kind::Explicit, std::move(rules));
}

std::optional<std::size_t> GeneratedMap::rule_count() const
{
  if (kind_ == Kind::Odometer)
    return std::nullopt;
  return rules_.size();
}

std::optional<PrefixRule> GeneratedMap::rule(std::size_t i) const
{
  if (kind_ == Kind::Odometer)
    return PrefixRule{Word(i, '1') + '0', Word(i, '0') + '1'};
  if (i < rules_.size())
    return rules_[i];
  return std::nullopt;
}

PrefixMap GeneratedMap::truncation(std::size_t k) const
{
  std::vector<PrefixRule> rules;
  for (std::size_t i = 0; i <= k; ++i) {
    auto r = rule(i);
    if (!r)
      break;
    rules.push_back(std::move(*r));
  }
  return PrefixMap(std::move(rules));
}

ClopenSet GeneratedMap::exhaustion(std::size_t k) const
{
  return truncation(k).domain();
}

} // namespace pact
