#include "pact/sampling.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <limits>

namespace pact {

std::uint64_t Rng::below(std::uint64_t n)
{
  if (n == 0)
    throw Error("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

int Rng::between(int lo, int hi)
{
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Word random_word(Rng& rng, std::size_t min_len, std::size_t max_len)
{
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(rng.chance(1, 2) ? '1' : '0');
  return w;
}

Point random_point(Rng& rng, std::size_t max_preperiod, std::size_t max_period)
{
  return Point(random_word(rng, 0, max_preperiod), random_word(rng, 1, max_period));
}

Point random_point_in(Rng& rng, const ClopenSet& s, std::size_t max_preperiod, std::size_t max_period)
{
  if (s.is_empty())
    throw Error("random_point_in: empty set");
  const Word& w = s.words()[rng.below(s.words().size())];
  return random_point(rng, max_preperiod, max_period).prepend(w);
}

ClopenSet random_clopen(Rng& rng, std::size_t max_depth)
{
  std::vector<Word> words;
  for (const auto& w : words_of_length(max_depth))
    if (rng.chance(1, 2))
      words.push_back(w);
  return ClopenSet::normalize(std::move(words));
}

std::vector<Word> random_antichain(Rng& rng, std::size_t count, std::size_t max_depth)
{
  // Grow a random complete prefix code by splitting leaves, then keep
  // `count` of its words.
  std::vector<Word> leaves{""};
  while (leaves.size() < count) {
    std::vector<std::size_t> splittable;
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (leaves[i].size() < max_depth)
        splittable.push_back(i);
    const std::size_t pick = splittable.empty() ? rng.below(leaves.size()) : splittable[rng.below(splittable.size())];
    Word w = leaves[pick];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    leaves.push_back(w + '0');
    leaves.push_back(w + '1');
  }
  // Occasionally split further so the family is not always complete.
  while (leaves.size() < count + 2 && rng.chance(1, 2)) {
    const std::size_t pick = rng.below(leaves.size());
    Word w = leaves[pick];
    if (w.size() >= max_depth)
      break;
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    leaves.push_back(w + '0');
    leaves.push_back(w + '1');
  }
  for (std::size_t i = leaves.size(); i > 1; --i)
    std::swap(leaves[i - 1], leaves[rng.below(i)]);
  leaves.resize(count);
  return leaves;
}

PrefixMap random_prefix_map(Rng& rng, std::size_t max_rules, std::size_t max_depth)
{
  const std::size_t count = rng.below(max_rules + 1);
  if (count == 0)
    return PrefixMap();
  auto sources = random_antichain(rng, count, max_depth);
  auto targets = random_antichain(rng, count, max_depth);
  std::vector<PrefixRule> rules;
  for (std::size_t i = 0; i < count; ++i)
    rules.push_back({sources[i], targets[i]});
  return PrefixMap(std::move(rules));
}

PrefixMap random_length_preserving_map(Rng& rng, std::size_t max_rules, std::size_t depth)
{
  auto cells = words_of_length(depth);
  const std::size_t count = rng.below(std::min(max_rules, cells.size()) + 1);
  for (std::size_t i = cells.size(); i > 1; --i)
    std::swap(cells[i - 1], cells[rng.below(i)]);
  std::vector<Word> sources(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(count));
  for (std::size_t i = cells.size(); i > 1; --i)
    std::swap(cells[i - 1], cells[rng.below(i)]);
  std::vector<PrefixRule> rules;
  for (std::size_t i = 0; i < count; ++i)
    rules.push_back({sources[i], cells[i]});
  return PrefixMap(std::move(rules));
}

Scalar random_scalar(Rng& rng)
{
  auto q = [&] {
    mpq_class v(rng.between(-6, 6), rng.between(1, 4));
    v.canonicalize();
    return v;
  };
  mpq_class re = q();
  mpq_class im = rng.chance(1, 2) ? q() : mpq_class(0);
  return Scalar(re, im);
}

PiecewiseConstant random_piecewise_in(Rng& rng, const ClopenSet& s, std::size_t max_depth)
{
  if (s.is_empty())
    return {};
  const std::size_t lo = s.max_length();
  const std::size_t depth = lo + rng.below(max_depth > lo ? max_depth - lo + 1 : 1);
  std::map<Word, Scalar> pieces;
  for (const auto& cell : s.refine_to_depth(depth))
    if (rng.chance(1, 2))
      pieces.emplace(cell, random_scalar(rng));
  return PiecewiseConstant(std::move(pieces));
}

} // namespace pact
